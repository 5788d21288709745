//! Exact arithmetic behind the growth comparison between the capped torus
//! projection and the tree.

use flipgraph::rigidity::{average_distance_bound, average_distance_sum, growth_inequality_holds, growth_inequality_max_n};

fn main() {
    let max = growth_inequality_max_n();
    println!("growth inequality holds up to n = {max}");
    for n in [1, 10, 60, 61, 62, 100] {
        println!("  n = {n:3}: {}", growth_inequality_holds(n));
    }
    for n in [1, 2, 3, 10, 64] {
        println!("average distance at level {n}: {} (by summation {})", average_distance_bound(n), average_distance_sum(n));
    }
}

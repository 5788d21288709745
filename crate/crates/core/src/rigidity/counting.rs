//! Exact arithmetic behind the growth comparison between a rigid-free host and a tree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Whether `(1/5) · 3 · 2^(n-1) ≤ (2n + 1) · (3 · 2^(5n/6) - 2)`, decided exactly.
///
/// Moving the constant term across and raising both (positive) sides to the
/// sixth power gives the integer comparison
/// `(3 · 2^(n-1) + 10(2n + 1))^6 ≤ 2^(5n) · (15(2n + 1))^6`.
pub fn growth_inequality_holds(n: u32) -> bool {
    assert!(n >= 1, "n starts at 1");
    let m = BigInt::from(2 * n + 1);
    let lhs = BigInt::from(3) * (BigInt::one() << (n - 1)) + BigInt::from(10) * &m;
    let rhs = BigInt::from(15) * &m;
    lhs.pow(6) <= (BigInt::one() << (5 * n)) * rhs.pow(6)
}

/// Largest `n` for which the growth inequality holds. Past the scan range the
/// left side wins by a factor of at least `2^n` over the polynomial terms.
pub fn growth_inequality_max_n() -> u32 {
    (1..=512).filter(|&n| growth_inequality_holds(n)).max().unwrap_or(0)
}

/// `2n / 3`, the bound on the average image distance.
pub fn average_distance_bound(n: u32) -> BigRational {
    BigRational::new(BigInt::from(2 * n), BigInt::from(3))
}

/// `(1 / (3 · 2^(n-1))) · Σ_{k=1..n} 2^k · 2^(n-k)`, summed term by term.
pub fn average_distance_sum(n: u32) -> BigRational {
    assert!(n >= 1, "n starts at 1");
    let mut sum = BigInt::zero();
    for k in 1..=n {
        sum += (BigInt::one() << k) * (BigInt::one() << (n - k));
    }
    BigRational::new(sum, BigInt::from(3) * (BigInt::one() << (n - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn growth_threshold() {
        assert!(growth_inequality_holds(1));
        assert!(growth_inequality_holds(61));
        assert!(!growth_inequality_holds(62));
        assert_eq!(growth_inequality_max_n(), 61);
    }

    #[test]
    fn small_values_by_floats() {
        for n in 1..=70u32 {
            let l = 0.2 * 3.0 * 2f64.powi(n as i32 - 1);
            let r = (2 * n + 1) as f64 * (3.0 * 2f64.powf(5.0 * n as f64 / 6.0) - 2.0);
            if (l - r).abs() > 1e-9 * r {
                assert_eq!(l <= r, growth_inequality_holds(n), "n = {n}");
            }
        }
    }

    #[test]
    fn average_distance() {
        let r = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
        assert_eq!(average_distance_bound(1), r(2, 3));
        assert_eq!(average_distance_bound(3), r(2, 1));
        assert_eq!(average_distance_bound(9), r(6, 1));
        for n in 1..=64 {
            assert_eq!(average_distance_bound(n), average_distance_sum(n));
        }
    }
}

//! Forcing, extension search and the finite configurations used to propagate
//! or defeat uniqueness of injective homomorphisms between flip graphs.

mod bset;
mod closure;
mod counting;
mod fibers;
mod homsearch;
mod ladder;

pub use bset::{build_bset, case_three, check_lemma_5_1, Arrangement, BSet, CaseThree, Lemma51Report, ROLES};
pub use closure::{replay_trace, rigid_closure, Forcing, PartialMap, Rule, Rules};
pub use counting::{average_distance_bound, average_distance_sum, growth_inequality_holds, growth_inequality_max_n};
pub use fibers::{check_fibers, fiber_edges, FiberPartition, FiberReport};
pub use homsearch::{search_graph_homs, search_injective_homs, Graph};
pub use ladder::{build_ladder, Ladder};

//! Combinatorial expansion: the exhaustive oracle and the closed-form
//! lower bounds it is checked against.

pub mod bounds;
mod exact;

pub use bounds::{
    bound_set, bound_set_rational, cheeger_bounds, coarse_bounds_directed, coarse_bounds_undirected,
    path_count_helpers, path_count_helpers_directed, refined_bound_k3, refined_bounds_k2, Applicability,
    BoundEntry, BoundId, BoundSet, PathCounts, Target,
};
pub use exact::{
    boundary_size, cut_size, exact_expansion, reverse_cut_size, ExpansionMeasurement, DEFAULT_SUBSET_CAP,
    HARD_SUBSET_CAP,
};

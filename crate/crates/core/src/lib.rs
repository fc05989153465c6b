//! # moorex
//!
//! Large graphs of fixed degree and diameter are good expanders. This crate
//! turns that into checkable numbers: it builds the classical
//! degree-diameter families, measures how close they sit to the Moore bound,
//! computes their spectra and exact (brute-force) expansion, and evaluates
//! every closed-form guarantee relating the two.
//!
//! | Module | What it does |
//! |--------|--------------|
//! | [`graph`] | Immutable simple graphs, degrees, all-pairs BFS diameter |
//! | [`edgelist`] | The plain-text edge-list format |
//! | [`moore`] | Exact Moore bounds, `alpha = n/mu`, additive gap |
//! | [`geronimus`] | Geronimus polynomials, non-backtracking walk matrices, the eigenvalue certificate |
//! | [`spectral`] | Adjacency spectrum, `λ(G)`, the diameter-2 spectral bound |
//! | [`expansion`] | Exact `h_e` / `φ_V` and the combinatorial lower bounds |
//! | [`constructions`] | Cycles, Petersen, de Bruijn, Kautz, polarity, bridged cliques |
//! | [`report`] | Analysis, bound tables, family implications, certification |
//!
//! ```
//! use moorex::{constructions, expansion, geronimus, moore, spectral};
//!
//! let g = constructions::gen_petersen();
//! let profile = moore::profile(&g, None).unwrap();
//! assert_eq!(profile.additive_gap, Some(0.into())); // a Moore graph
//!
//! let spec = spectral::spectrum(&g).unwrap();
//! assert!((spec.lambda_g.unwrap() - 2.0).abs() < 1e-9);
//!
//! // Every non-principal eigenvalue satisfies |sum P_t(λ)| <= mu - n = 0.
//! let check = geronimus::eigenvalue_bound_check(&g, &spec.eigenvalues, None, None).unwrap();
//! assert!(check.all_pass);
//!
//! let m = expansion::exact_expansion(&g, 24).unwrap();
//! assert_eq!(m.h_e, num_rational::BigRational::from_integer(1.into()));
//! ```

pub mod constructions;
pub mod edgelist;
pub mod error;
pub mod expansion;
pub mod geronimus;
pub mod graph;
pub mod moore;
pub mod numeric;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, DiameterReport, Graph};
pub use moore::{MooreProfile, Regime};

pub use num_bigint;
pub use num_rational;

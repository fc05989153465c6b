//! Closed-form lower bounds on edge and vertex expansion in terms of how
//! close `n` sits to the Moore bound.
//!
//! All calculators take parameters rather than a graph, so they serve
//! idealized families (with fractional `n`) and measured graphs alike. The
//! normalisation of `alpha` differs per bound and is part of each formula:
//!
//! | bound | alpha | value |
//! |-------|-------|-------|
//! | coarse edge, undirected | `n / mu_{d,k}` | `(alpha d / 2k)(1 - 1/(d-1)^k)` |
//! | coarse vertex, undirected | `n / mu_{d,k}` | `alpha / (2(k-1) + alpha)` |
//! | coarse edge, directed | `n / mu~_{d,k}` | `(alpha / 2k)(d - 1/d^k)` |
//! | coarse vertex, directed | `n / mu~_{d,k}` | `alpha d / (2(d+1)(k-1) + alpha d)` |
//! | diameter-2 edge | `n / d^2` | `(2d + 1 - sqrt(4(1-alpha)d^2 + 4d + 1)) / 4` |
//! | diameter-2 vertex | `n / d^2` | `2 alpha / (2 alpha + 1)` |
//! | diameter-3 vertex | `n / d^3` | `alpha / (alpha + 1)` |
//! | Cheeger | - | `(d - λ₂) / 2` |

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::moore::{moore_bound, moore_bound_for, Regime};
use crate::numeric::{int, sqrt_exact, BoundValue, NoBound};
use crate::spectral::spectral_bound_k2_rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    CoarseEdge,
    CoarseVertex,
    DigraphEdge,
    DigraphVertex,
    SpectralK2,
    RefinedEdgeK2,
    RefinedVertexK2,
    RefinedVertexK3,
    RefinedVertexK3Proof,
    Cheeger,
}

impl BoundId {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::CoarseEdge => "coarse_edge",
            BoundId::CoarseVertex => "coarse_vertex",
            BoundId::DigraphEdge => "digraph_edge",
            BoundId::DigraphVertex => "digraph_vertex",
            BoundId::SpectralK2 => "spectral_k2",
            BoundId::RefinedEdgeK2 => "refined_edge_k2",
            BoundId::RefinedVertexK2 => "refined_vertex_k2",
            BoundId::RefinedVertexK3 => "refined_vertex_k3",
            BoundId::RefinedVertexK3Proof => "refined_vertex_k3_proof_strength",
            BoundId::Cheeger => "cheeger",
        }
    }

    pub fn target(self) -> Target {
        match self {
            BoundId::CoarseEdge | BoundId::DigraphEdge | BoundId::RefinedEdgeK2 | BoundId::Cheeger => {
                Target::EdgeExpansion
            }
            BoundId::SpectralK2 => Target::LambdaUpper,
            _ => Target::VertexExpansion,
        }
    }

    pub fn applicability(self) -> Applicability {
        match self {
            BoundId::CoarseEdge | BoundId::CoarseVertex => Applicability::Undirected,
            BoundId::DigraphEdge | BoundId::DigraphVertex => Applicability::Directed,
            BoundId::SpectralK2 | BoundId::RefinedEdgeK2 | BoundId::RefinedVertexK2 => Applicability::K2,
            BoundId::RefinedVertexK3 | BoundId::RefinedVertexK3Proof => Applicability::K3,
            BoundId::Cheeger => Applicability::SpectralDerived,
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            BoundId::CoarseEdge => "h_e >= (alpha d / 2k)(1 - 1/(d-1)^k), alpha = n/mu_{d,k}",
            BoundId::CoarseVertex => "phi_V >= alpha / (2(k-1) + alpha), alpha = n/mu_{d,k}",
            BoundId::DigraphEdge => "h >= (alpha / 2k)(d - 1/d^k), alpha = n/mu~_{d,k}",
            BoundId::DigraphVertex => "phi_V >= alpha d / (2(d+1)(k-1) + alpha d), alpha = n/mu~_{d,k}",
            BoundId::SpectralK2 => "lambda(G) <= (1 + sqrt(1 + 4(d^2 + d - n))) / 2",
            BoundId::RefinedEdgeK2 => "h_e >= (2d + 1 - sqrt(4(1-alpha)d^2 + 4d + 1)) / 4, alpha = n/d^2",
            BoundId::RefinedVertexK2 => "phi_V >= 2 alpha / (2 alpha + 1), alpha = n/d^2",
            BoundId::RefinedVertexK3 => "phi_V >= alpha / (alpha + 1), alpha = n/d^3",
            BoundId::RefinedVertexK3Proof => "phi_V >= alpha / (alpha + 1 - 1/d), alpha = n/d^3",
            BoundId::Cheeger => "h_e >= (d - lambda_2) / 2",
        }
    }
}

/// What a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Lower bound on `h_e`.
    EdgeExpansion,
    /// Lower bound on `phi_V`.
    VertexExpansion,
    /// Upper bound on `λ(G)`.
    LambdaUpper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applicability {
    Undirected,
    Directed,
    K2,
    K3,
    SpectralDerived,
}

impl Applicability {
    pub fn as_str(self) -> &'static str {
        match self {
            Applicability::Undirected => "undirected",
            Applicability::Directed => "directed",
            Applicability::K2 => "k=2",
            Applicability::K3 => "k=3",
            Applicability::SpectralDerived => "spectral-derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry {
    pub id: BoundId,
    /// The normalised size the formula was evaluated at, when it uses one.
    pub alpha: Option<BigRational>,
    pub result: std::result::Result<BoundValue, NoBound>,
}

impl BoundEntry {
    pub fn value(&self) -> Option<&BoundValue> {
        self.result.as_ref().ok()
    }
}

/// Every closed-form bound evaluated at one parameter triple.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSet {
    pub regime: Regime,
    pub d: u64,
    pub k: u32,
    pub n: BigRational,
    pub entries: Vec<BoundEntry>,
}

impl BoundSet {
    pub fn get(&self, id: BoundId) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn not_applicable(why: impl Into<String>) -> NoBound {
    NoBound::NotApplicable(why.into())
}

fn need_k(k: u32) -> std::result::Result<(), NoBound> {
    if k < 1 {
        return Err(not_applicable("diameter must be at least 1"));
    }
    Ok(())
}

/// `(alpha d / 2k)(1 - 1/(d-1)^k)`, undirected, `alpha = n / mu_{d,k}`.
pub fn coarse_edge_undirected(d: u64, k: u32, alpha: &BigRational) -> std::result::Result<BoundValue, NoBound> {
    need_k(k)?;
    if d < 3 {
        return Err(not_applicable("requires d >= 3 (the counting argument divides by d-2)"));
    }
    let q: BigInt = Pow::pow(BigInt::from(d - 1), k);
    let v = alpha * int(d) / int(2 * u64::from(k)) * (BigRational::one() - BigRational::new(BigInt::one(), q));
    Ok(BoundValue::exact(v))
}

/// `alpha / (2(k-1) + alpha)`, undirected, `alpha = n / mu_{d,k}`.
pub fn coarse_vertex_undirected(d: u64, k: u32, alpha: &BigRational) -> std::result::Result<BoundValue, NoBound> {
    need_k(k)?;
    if d < 3 {
        return Err(not_applicable("requires d >= 3 (the counting argument divides by d-2)"));
    }
    Ok(BoundValue::exact(alpha / (int(2 * (u64::from(k) - 1)) + alpha)))
}

/// `(alpha / 2k)(d - 1/d^k)`, directed, `alpha = n / mu~_{d,k}`.
pub fn coarse_edge_directed(d: u64, k: u32, alpha: &BigRational) -> std::result::Result<BoundValue, NoBound> {
    need_k(k)?;
    if d < 2 {
        return Err(not_applicable("requires d >= 2"));
    }
    let dk: BigInt = Pow::pow(BigInt::from(d), k);
    let v = alpha / int(2 * u64::from(k)) * (int(d) - BigRational::new(BigInt::one(), dk));
    Ok(BoundValue::exact(v))
}

/// `alpha d / (2(d+1)(k-1) + alpha d)`, directed, `alpha = n / mu~_{d,k}`.
pub fn coarse_vertex_directed(d: u64, k: u32, alpha: &BigRational) -> std::result::Result<BoundValue, NoBound> {
    need_k(k)?;
    if d < 2 {
        return Err(not_applicable("requires d >= 2"));
    }
    let ad = alpha * int(d);
    Ok(BoundValue::exact(&ad / (int(2 * (d + 1) * (u64::from(k) - 1)) + &ad)))
}

/// `(2d + 1 - sqrt(4(1-alpha)d^2 + 4d + 1)) / 4`, `alpha = n / d^2`.
pub fn refined_edge_k2(d: u64, alpha: &BigRational) -> std::result::Result<BoundValue, NoBound> {
    let dd = int(d);
    let radicand = int(4) * (BigRational::one() - alpha) * &dd * &dd + int(4) * &dd + BigRational::one();
    if radicand < BigRational::zero() {
        return Err(NoBound::Vacuous(format!("4(1-alpha)d^2 + 4d + 1 = {radicand} is negative")));
    }
    let top = int(2) * &dd + BigRational::one();
    Ok(match sqrt_exact(&radicand) {
        Some(root) => BoundValue::exact((top - root) / int(4)),
        None => BoundValue::real(
            (top.to_f64().unwrap_or(f64::NAN) - radicand.to_f64().unwrap_or(f64::NAN).sqrt()) / 4.0,
        ),
    })
}

/// `2 alpha / (2 alpha + 1)`, `alpha = n / d^2`.
pub fn refined_vertex_k2(alpha: &BigRational) -> BoundValue {
    let two_a = int(2) * alpha;
    BoundValue::exact(&two_a / (&two_a + BigRational::one()))
}

/// `alpha / (alpha + 1)`, `alpha = n / d^3`.
pub fn refined_vertex_k3(d: u64, alpha: &BigRational) -> std::result::Result<BoundValue, NoBound> {
    if d < 3 {
        return Err(not_applicable("requires d >= 3; C_7 (d=2) already falls below alpha/(alpha+1)"));
    }
    Ok(BoundValue::exact(alpha / (alpha + BigRational::one())))
}

/// `alpha / (alpha + 1 - 1/d)`, the sharper value the counting argument yields.
pub fn refined_vertex_k3_proof(d: u64, alpha: &BigRational) -> std::result::Result<BoundValue, NoBound> {
    if d < 3 {
        return Err(not_applicable("requires d >= 3"));
    }
    Ok(BoundValue::exact(alpha / (alpha + BigRational::one() - BigRational::new(1.into(), d.into()))))
}

/// `(d - λ₂) / 2`.
pub fn cheeger_bound(d: u64, lambda2: f64) -> BoundValue {
    BoundValue::real((d as f64 - lambda2) / 2.0)
}

/// Both coarse undirected bounds at `n` vertices, `alpha = n / mu_{d,k}`.
pub fn coarse_bounds_undirected(d: u64, k: u32, n: u64) -> Result<[BoundEntry; 2]> {
    let alpha = normalised(int(n), moore_bound(d, k)?);
    Ok([
        BoundEntry { id: BoundId::CoarseEdge, result: coarse_edge_undirected(d, k, &alpha), alpha: Some(alpha.clone()) },
        BoundEntry { id: BoundId::CoarseVertex, result: coarse_vertex_undirected(d, k, &alpha), alpha: Some(alpha) },
    ])
}

/// Both directed bounds at `n` vertices, `alpha = n / mu~_{d,k}`.
pub fn coarse_bounds_directed(d: u64, k: u32, n: u64) -> Result<[BoundEntry; 2]> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("directed bounds need d >= 2 (got {d})")));
    }
    let alpha = normalised(int(n), moore_bound_for(Regime::Directed, d, k)?);
    Ok([
        BoundEntry { id: BoundId::DigraphEdge, result: coarse_edge_directed(d, k, &alpha), alpha: Some(alpha.clone()) },
        BoundEntry { id: BoundId::DigraphVertex, result: coarse_vertex_directed(d, k, &alpha), alpha: Some(alpha) },
    ])
}

/// Diameter-2 edge and vertex bounds at `n` vertices, `alpha = n / d^2`.
pub fn refined_bounds_k2(d: u64, n: u64) -> Result<[BoundEntry; 2]> {
    check_degree(d)?;
    let alpha = int(n) / int(d * d);
    Ok([
        BoundEntry { id: BoundId::RefinedEdgeK2, result: refined_edge_k2(d, &alpha), alpha: Some(alpha.clone()) },
        BoundEntry { id: BoundId::RefinedVertexK2, result: Ok(refined_vertex_k2(&alpha)), alpha: Some(alpha) },
    ])
}

/// Diameter-3 vertex bound (stated and proof-strength) at `n` vertices, `alpha = n / d^3`.
pub fn refined_bound_k3(d: u64, n: u64) -> Result<[BoundEntry; 2]> {
    check_degree(d)?;
    let alpha = int(n) / int(d * d * d);
    Ok([
        BoundEntry { id: BoundId::RefinedVertexK3, result: refined_vertex_k3(d, &alpha), alpha: Some(alpha.clone()) },
        BoundEntry { id: BoundId::RefinedVertexK3Proof, result: refined_vertex_k3_proof(d, &alpha), alpha: Some(alpha) },
    ])
}

/// The concrete Cheeger value; the asymptotic corollaries have no constants
/// and are not evaluated.
pub fn cheeger_bounds(d: u64, lambda2: f64) -> BoundEntry {
    BoundEntry { id: BoundId::Cheeger, alpha: None, result: Ok(cheeger_bound(d, lambda2)) }
}

fn check_degree(d: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("degree must be at least 2 (got {d})")));
    }
    Ok(())
}

fn normalised(n: BigRational, mu: BigInt) -> BigRational {
    n / BigRational::from_integer(mu)
}

/// Every applicable bound for `(d, k, n)` in the given regime. The k=2 and
/// k=3 rows appear only when `k` matches; Cheeger only when `lambda2` is given.
pub fn bound_set(regime: Regime, d: u64, k: u32, n: u64, lambda2: Option<f64>) -> Result<BoundSet> {
    bound_set_rational(regime, d, k, &int(n), lambda2)
}

/// [`bound_set`] for a parametric size.
pub fn bound_set_rational(
    regime: Regime,
    d: u64,
    k: u32,
    n: &BigRational,
    lambda2: Option<f64>,
) -> Result<BoundSet> {
    check_degree(d)?;
    if k < 1 {
        return Err(Error::InvalidParameter("diameter must be at least 1".into()));
    }
    let mut entries = Vec::new();
    match regime {
        Regime::Undirected => {
            let alpha = normalised(n.clone(), moore_bound(d, k)?);
            entries.push(BoundEntry { id: BoundId::CoarseEdge, result: coarse_edge_undirected(d, k, &alpha), alpha: Some(alpha.clone()) });
            entries.push(BoundEntry { id: BoundId::CoarseVertex, result: coarse_vertex_undirected(d, k, &alpha), alpha: Some(alpha) });
            if k == 2 {
                let alpha = n / int(d * d);
                entries.push(BoundEntry { id: BoundId::SpectralK2, alpha: None, result: spectral_bound_k2_rational(d, n) });
                entries.push(BoundEntry { id: BoundId::RefinedEdgeK2, result: refined_edge_k2(d, &alpha), alpha: Some(alpha.clone()) });
                entries.push(BoundEntry { id: BoundId::RefinedVertexK2, result: Ok(refined_vertex_k2(&alpha)), alpha: Some(alpha) });
            }
            if k == 3 {
                let alpha = n / int(d * d * d);
                entries.push(BoundEntry { id: BoundId::RefinedVertexK3, result: refined_vertex_k3(d, &alpha), alpha: Some(alpha.clone()) });
                entries.push(BoundEntry { id: BoundId::RefinedVertexK3Proof, result: refined_vertex_k3_proof(d, &alpha), alpha: Some(alpha) });
            }
            if let Some(l2) = lambda2 {
                entries.push(cheeger_bounds(d, l2));
            }
        }
        Regime::Directed => {
            let alpha = normalised(n.clone(), moore_bound_for(Regime::Directed, d, k)?);
            entries.push(BoundEntry { id: BoundId::DigraphEdge, result: coarse_edge_directed(d, k, &alpha), alpha: Some(alpha.clone()) });
            entries.push(BoundEntry { id: BoundId::DigraphVertex, result: coarse_vertex_directed(d, k, &alpha), alpha: Some(alpha) });
        }
    }
    Ok(BoundSet { regime, d, k, n: n.clone(), entries })
}

/// Exact `f_{d-1}(k) = sum_{l=1..k} l (d-1)^(l-1)` and its closed-form ceiling
/// `k (d-1)^k / (d-2)`: the most length-`<=k` walks one edge can lie on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCounts {
    pub sum: BigInt,
    pub upper: BigRational,
}

pub fn path_count_helpers(d: u64, k: u32) -> Result<PathCounts> {
    if d < 3 || k < 1 {
        return Err(Error::InvalidParameter(format!(
            "path counts need d >= 3 and k >= 1 (got d={d}, k={k})"
        )));
    }
    Ok(weighted_geometric(d - 1, k))
}

/// Directed analogue: `f_d(k) = sum l d^(l-1)` and `k d^k / (d-1)`.
pub fn path_count_helpers_directed(d: u64, k: u32) -> Result<PathCounts> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidParameter(format!(
            "directed path counts need d >= 2 and k >= 1 (got d={d}, k={k})"
        )));
    }
    Ok(weighted_geometric(d, k))
}

fn weighted_geometric(base: u64, k: u32) -> PathCounts {
    let b = BigInt::from(base);
    let sum = (1..=k).map(|l| BigInt::from(l) * Pow::pow(&b, l - 1)).sum();
    let upper = BigRational::new(BigInt::from(k) * Pow::pow(&b, k), &b - 1);
    PathCounts { sum, upper }
}

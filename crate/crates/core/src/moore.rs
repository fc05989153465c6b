//! Moore-bound arithmetic, in exact integers.
//!
//! A d-regular graph of diameter k has at most
//! `1 + d + d(d-1) + ... + d(d-1)^(k-1)` vertices, and a d-regular digraph at
//! most `1 + d + ... + d^k`. The ratio `alpha = n / mu` and its complement
//! `epsilon` are kept as exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Undirected,
    Directed,
}

impl Regime {
    pub fn of(g: &Graph) -> Self {
        if g.is_directed() {
            Regime::Directed
        } else {
            Regime::Undirected
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Undirected => "undirected",
            Regime::Directed => "directed",
        }
    }
}

/// Undirected Moore bound, closed form: `2k+1` when `d = 2`, otherwise
/// `1 + d((d-1)^k - 1)/(d-2)`.
pub fn moore_bound(d: u64, k: u32) -> Result<BigInt> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidParameter(format!(
            "Moore bound needs d >= 2 and k >= 1 (got d={d}, k={k})"
        )));
    }
    if d == 2 {
        return Ok(BigInt::from(2 * u64::from(k) + 1));
    }
    let d = BigInt::from(d);
    let power: BigInt = Pow::pow(&d - 1u32, k);
    Ok(1 + &d * (power - 1) / (d - 2))
}

/// Undirected Moore bound summed term by term, `1 + sum d(d-1)^(i-1)`.
pub fn moore_bound_summed(d: u64, k: u32) -> Result<BigInt> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidParameter(format!(
            "Moore bound needs d >= 2 and k >= 1 (got d={d}, k={k})"
        )));
    }
    let d = BigInt::from(d);
    let mut level = d.clone();
    let mut total = BigInt::one();
    for _ in 0..k {
        total += &level;
        level *= &d - 1;
    }
    Ok(total)
}

/// Directed Moore bound `sum_{i=0..k} d^i`; `k + 1` when `d = 1`.
pub fn directed_moore_bound(d: u64, k: u32) -> Result<BigInt> {
    if d < 1 || k < 1 {
        return Err(Error::InvalidParameter(format!(
            "directed Moore bound needs d >= 1 and k >= 1 (got d={d}, k={k})"
        )));
    }
    if d == 1 {
        return Ok(BigInt::from(u64::from(k) + 1));
    }
    let d = BigInt::from(d);
    Ok((Pow::pow(&d, k + 1) - 1) / (d - 1))
}

pub fn moore_bound_for(regime: Regime, d: u64, k: u32) -> Result<BigInt> {
    match regime {
        Regime::Undirected => moore_bound(d, k),
        Regime::Directed => directed_moore_bound(d, k),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MooreProfile {
    pub d: u64,
    pub k: u32,
    pub n: Option<u64>,
    pub regime: Regime,
    pub mu: BigInt,
    /// `mu - n`.
    pub additive_gap: Option<BigInt>,
    /// `n / mu`.
    pub alpha: Option<BigRational>,
    /// `1 - alpha`.
    pub epsilon: Option<BigRational>,
}

impl MooreProfile {
    pub fn new(regime: Regime, d: u64, k: u32, n: Option<u64>) -> Result<Self> {
        let mu = moore_bound_for(regime, d, k)?;
        let (additive_gap, alpha, epsilon) = match n {
            Some(n) => {
                let alpha = BigRational::new(BigInt::from(n), mu.clone());
                let eps = BigRational::one() - &alpha;
                (Some(&mu - BigInt::from(n)), Some(alpha), Some(eps))
            }
            None => (None, None, None),
        };
        Ok(MooreProfile { d, k, n, regime, mu, additive_gap, alpha, epsilon })
    }

    /// True when `n <= mu`, i.e. the parameters are not ruled out by counting.
    pub fn is_feasible(&self) -> bool {
        self.additive_gap.as_ref().is_none_or(|g| *g >= BigInt::zero())
    }
}

/// Profile of a measured graph. `force_d` overrides the degree of a
/// non-regular graph (the caller owns that idealization).
pub fn profile(g: &Graph, force_d: Option<u64>) -> Result<MooreProfile> {
    let deg = g.degree_profile();
    let d = match (deg.regular_degree, force_d) {
        (_, Some(d)) => d,
        (Some(d), None) => d as u64,
        (None, None) => return Err(Error::NotRegular { min: deg.min(), max: deg.max() }),
    };
    let k = g.diameter().diameter.ok_or(Error::InfiniteDiameter)?;
    MooreProfile::new(Regime::of(g), d, k as u32, Some(g.n() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(moore_bound(2, 2).unwrap(), BigInt::from(5));
        assert_eq!(moore_bound(3, 2).unwrap(), BigInt::from(10));
        assert_eq!(moore_bound(3, 3).unwrap(), BigInt::from(22));
        assert_eq!(moore_bound(7, 2).unwrap(), BigInt::from(50));
        assert_eq!(moore_bound(57, 2).unwrap(), BigInt::from(3250));
        assert_eq!(directed_moore_bound(2, 2).unwrap(), BigInt::from(7));
        assert_eq!(directed_moore_bound(2, 3).unwrap(), BigInt::from(15));
        assert_eq!(directed_moore_bound(1, 4).unwrap(), BigInt::from(5));
    }

    #[test]
    fn closed_form_matches_sum() {
        for d in 2..=50 {
            for k in 1..=10 {
                assert_eq!(moore_bound(d, k).unwrap(), moore_bound_summed(d, k).unwrap(), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(moore_bound(1, 2).is_err());
        assert!(moore_bound(3, 0).is_err());
        assert!(directed_moore_bound(0, 2).is_err());
        assert!(directed_moore_bound(2, 0).is_err());
    }

    #[test]
    fn profile_fields() {
        let p = MooreProfile::new(Regime::Directed, 2, 2, Some(6)).unwrap();
        assert_eq!(p.mu, BigInt::from(7));
        assert_eq!(p.additive_gap, Some(BigInt::from(1)));
        let alpha = p.alpha.clone().unwrap();
        assert_eq!(alpha, BigRational::new(6.into(), 7.into()));
        assert_eq!(&alpha * BigRational::from(p.mu.clone()), BigRational::from(BigInt::from(6)));
        assert_eq!(p.epsilon.clone().unwrap(), BigRational::new(1.into(), 7.into()));
        assert!(p.is_feasible());
        assert!(!MooreProfile::new(Regime::Undirected, 3, 2, Some(11)).unwrap().is_feasible());
    }

    #[test]
    fn graph_profile_needs_regular_and_finite() {
        let path = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(profile(&path, None), Err(Error::NotRegular { min: 1, max: 2 }));
        let p = profile(&path, Some(2)).unwrap();
        assert_eq!((p.d, p.k, p.mu.clone()), (2, 2, BigInt::from(5)));
        let two = Graph::undirected(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(profile(&two, None), Err(Error::InfiniteDiameter));
    }
}

//! Adjacency spectra of undirected graphs.
//!
//! The decomposition is delegated to nalgebra's symmetric eigensolver; the
//! result carries the measured residual `max ||Av - λv||_∞` so every report
//! states how far it can be trusted.

use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::BigRational;
use num_traits::{Pow, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moore::MooreProfile;
use crate::numeric::{sqrt_exact, BoundValue, NoBound};

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// `max(|λ₂|, |λₙ|)`; `None` when there are fewer than two eigenvalues.
    pub lambda_g: Option<f64>,
    /// `d - λ(G)` with `d` the maximum degree.
    pub spectral_gap: Option<f64>,
    pub solver_residual: f64,
    pub max_degree: usize,
}

impl SpectralReport {
    pub fn lambda1(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda2(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum of a nonempty graph")
    }

    /// Residual contract for graphs up to 2000 vertices: `1e-9 (d + 1)`.
    pub fn residual_ok(&self) -> bool {
        self.solver_residual < 1e-9 * (self.max_degree as f64 + 1.0)
    }

    /// Eigenvalues grouped for display, `(value, multiplicity)`, merging
    /// neighbours closer than `tol`.
    pub fn grouped(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match groups.last_mut() {
                Some((v, m)) if (*v - x).abs() < tol => *m += 1,
                _ => groups.push((x, 1)),
            }
        }
        groups
    }
}

/// Full spectrum of the adjacency matrix.
pub fn spectrum(g: &Graph) -> Result<SpectralReport> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported("spectral analysis"));
    }
    let n = g.n();
    let a = DMatrix::<f64>::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let eig = SymmetricEigen::new(a.clone());

    let mut residual = 0.0f64;
    for (idx, &lambda) in eig.eigenvalues.iter().enumerate() {
        let v = eig.eigenvectors.column(idx);
        let r = &a * v - v * lambda;
        residual = residual.max(r.amax());
    }

    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    let lambda_g = (n >= 2).then(|| eigenvalues[1].abs().max(eigenvalues[n - 1].abs()));
    let max_degree = g.degree_profile().max();
    Ok(SpectralReport {
        spectral_gap: lambda_g.map(|l| max_degree as f64 - l),
        lambda_g,
        eigenvalues,
        solver_residual: residual,
        max_degree,
    })
}

/// `λ(G) <= (1 + sqrt(1 + 4(d² + d - n))) / 2` for d-regular graphs of diameter 2.
pub fn spectral_bound_k2(d: u64, n: u64) -> Result<BoundValue, NoBound> {
    spectral_bound_k2_rational(d, &BigRational::from_integer(n.into()))
}

/// [`spectral_bound_k2`] for a parametric (possibly fractional) size.
pub fn spectral_bound_k2_rational(d: u64, n: &BigRational) -> Result<BoundValue, NoBound> {
    let d = BigRational::from_integer(d.into());
    let one = BigRational::from_integer(1.into());
    let four = BigRational::from_integer(4.into());
    let radicand = &one + four * (&d * &d + &d - n);
    if radicand < BigRational::from_integer(0.into()) {
        return Err(NoBound::Vacuous(format!(
            "1 + 4(d^2 + d - n) = {radicand} is negative"
        )));
    }
    let two = BigRational::from_integer(2.into());
    Ok(match sqrt_exact(&radicand) {
        Some(root) => BoundValue::exact((one + root) / two),
        None => BoundValue::real((1.0 + radicand.to_f64().unwrap_or(f64::NAN).sqrt()) / 2.0),
    })
}

/// Indicative spectral scales for a Moore profile. The asymptotic results
/// these mirror hide their constants, so nothing here is a pass/fail check.
#[derive(Debug, Clone, PartialEq)]
pub struct RegimeReport {
    pub additive_gap: num_bigint::BigInt,
    /// `d^(k/2)`, the additive-gap scale under which `λ(G) = O(sqrt d)`.
    pub additive_scale: f64,
    pub within_additive_scale: bool,
    pub epsilon: BigRational,
    /// `ε^(1/k) d`, the multiplicative-gap scale for `λ(G)`.
    pub epsilon_scale: f64,
    /// `2 sqrt(d-1)`.
    pub ramanujan_scale: f64,
    pub note: &'static str,
}

pub const REGIME_NOTE: &str = "indicative, constants unspecified in source";

pub fn regime_report(p: &MooreProfile) -> Result<RegimeReport> {
    let (Some(gap), Some(eps)) = (p.additive_gap.clone(), p.epsilon.clone()) else {
        return Err(Error::InvalidParameter("regime report needs a profile with n".into()));
    };
    let additive_scale = if p.k.is_multiple_of(2) {
        Pow::pow(&num_bigint::BigInt::from(p.d), p.k / 2).to_f64().unwrap_or(f64::INFINITY)
    } else {
        (p.d as f64).powf(p.k as f64 / 2.0)
    };
    let eps_f = eps.to_f64().unwrap_or(f64::NAN);
    Ok(RegimeReport {
        within_additive_scale: gap.to_f64().unwrap_or(f64::INFINITY) <= additive_scale,
        additive_gap: gap,
        additive_scale,
        epsilon_scale: eps_f.max(0.0).powf(1.0 / p.k as f64) * p.d as f64,
        epsilon: eps,
        ramanujan_scale: 2.0 * ((p.d as f64) - 1.0).max(0.0).sqrt(),
        note: REGIME_NOTE,
    })
}

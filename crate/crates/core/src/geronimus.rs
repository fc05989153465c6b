//! Geronimus polynomials and the non-backtracking walk certificate.
//!
//! For a fixed degree `d`,
//!
//! ```text
//! P_0 = 1,  P_1 = x,  P_2 = x^2 - d,  P_t = x P_{t-1} - (d-1) P_{t-2}  (t > 2)
//! ```
//!
//! Applied to the adjacency matrix of a d-regular graph, `P_t(A)[u][v]` counts
//! the non-backtracking walks of length exactly `t` from `u` to `v`. Every row
//! of `P_t(A)` sums to `d(d-1)^(t-1)`, so `sum_{t<=k} P_t(A)` has row sums
//! `mu_{d,k}` and is entrywise positive exactly when the diameter is at most
//! `k`. From that, every non-principal eigenvalue `lambda` of a (d,k)-graph on
//! `n` vertices satisfies `|sum_{t<=k} P_t(lambda)| <= mu_{d,k} - n`.
//!
//! Coefficients are available two ways: from the recurrence, and from the
//! Chebyshev closed form
//! `a_{t,t-2j} = (-1)^j [C(t-j, j)(d-1)^j + C(t-1-j, j-1)(d-1)^(j-1)]`.
//! Scalar evaluation runs the recurrence on values; [`GeronimusPoly::eval_expanded`]
//! runs Horner on the exact coefficients. Each route checks the other.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Pow, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moore::moore_bound;

/// Exact coefficients `a_{t,0..=t}` of `P_t` for a fixed `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeronimusPoly {
    d: u64,
    coeffs: Vec<BigInt>,
}

impl GeronimusPoly {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `coeffs()[i]` is the coefficient of `x^i`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Value by the three-term recurrence.
    pub fn eval(&self, x: f64) -> f64 {
        eval_scalar(self.d, self.order(), x)
    }

    /// Value by Horner's rule on the exact coefficients.
    pub fn eval_expanded(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// Coefficients of `P_t` by the defining recurrence.
pub fn geronimus_coeffs(d: u64, t: usize) -> Result<GeronimusPoly> {
    check_degree(d)?;
    Ok(GeronimusPoly { d, coeffs: recurrence_table(d, t).pop().unwrap_or_default() })
}

/// Coefficient vectors of `P_0..=P_t`.
fn recurrence_table(d: u64, t: usize) -> Vec<Vec<BigInt>> {
    let mut polys: Vec<Vec<BigInt>> = Vec::with_capacity(t + 1);
    for s in 0..=t {
        let p = match s {
            0 => vec![BigInt::one()],
            1 => vec![BigInt::zero(), BigInt::one()],
            2 => vec![-BigInt::from(d), BigInt::zero(), BigInt::one()],
            _ => {
                let c = BigInt::from(d - 1);
                let (p1, p2) = (&polys[s - 1], &polys[s - 2]);
                (0..=s)
                    .map(|i| {
                        let shifted = if i > 0 { p1.get(i - 1).cloned().unwrap_or_default() } else { BigInt::zero() };
                        shifted - &c * p2.get(i).cloned().unwrap_or_default()
                    })
                    .collect()
            }
        };
        polys.push(p);
    }
    polys
}

/// Coefficients of `P_t` from the Chebyshev closed form, without the recurrence.
pub fn expanded_coeffs(d: u64, t: usize) -> Result<Vec<BigInt>> {
    check_degree(d)?;
    let q = BigInt::from(d - 1);
    let mut coeffs = vec![BigInt::zero(); t + 1];
    for j in 0..=t / 2 {
        let mut c: BigInt = binomial(BigInt::from(t - j), BigInt::from(j)) * Pow::pow(&q, j as u32);
        if j >= 1 && t > j {
            c += binomial(BigInt::from(t - 1 - j), BigInt::from(j - 1)) * Pow::pow(&q, (j - 1) as u32);
        }
        coeffs[t - 2 * j] = if j % 2 == 0 { c } else { -c };
    }
    Ok(coeffs)
}

fn check_degree(d: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("Geronimus polynomials need d >= 2 (got {d})")));
    }
    Ok(())
}

/// `P_t(x)` by the recurrence on values.
pub fn eval_scalar(d: u64, t: usize, x: f64) -> f64 {
    values(d, t, x)[t]
}

/// `P_0(x), ..., P_t(x)`.
pub fn values(d: u64, t: usize, x: f64) -> Vec<f64> {
    let d = d as f64;
    let mut v = Vec::with_capacity(t + 1);
    for s in 0..=t {
        let p = match s {
            0 => 1.0,
            1 => x,
            2 => x * x - d,
            _ => x * v[s - 1] - (d - 1.0) * v[s - 2],
        };
        v.push(p);
    }
    v
}

/// `sum_{t=0..=k} P_t(x)`.
pub fn sum_values(d: u64, k: usize, x: f64) -> f64 {
    values(d, k, x).iter().sum()
}

/// Right-hand side of the trigonometric solution of the recurrence,
/// `(d-1)^(t/2-1) [(d-1) sin((t+1)θ) - sin((t-1)θ)] / sin θ`, which equals
/// `P_t(2 sqrt(d-1) cos θ)` for `t >= 1`.
pub fn trig_closed_form(d: u64, t: usize, theta: f64) -> f64 {
    let q = (d - 1) as f64;
    let t = t as f64;
    q.powf(t / 2.0 - 1.0) * (q * ((t + 1.0) * theta).sin() - ((t - 1.0) * theta).sin()) / theta.sin()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffViolation {
    pub t: usize,
    pub i: usize,
    pub what: &'static str,
}

/// Outcome of [`coeff_recurrence_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub d: u64,
    pub t_max: usize,
    pub pass: bool,
    pub first_violation: Option<CoeffViolation>,
}

/// Checks, for `3 <= t <= t_max`, that the closed-form coefficients obey
/// `a_{t,i} = a_{t-1,i-1} - (d-1) a_{t-2,i}`, agree with the recurrence-built
/// polynomials, have `a_{t,t} = 1`, vanish when `t - i` is odd, and have the
/// constant term `d(d-1)^(t/2-1)(-1)^(t/2)` for even `t`.
pub fn coeff_recurrence_check(d: u64, t_max: usize) -> Result<RecurrenceCheck> {
    check_degree(d)?;
    if t_max < 3 {
        return Err(Error::InvalidParameter(format!("t_max must be at least 3 (got {t_max})")));
    }
    let expanded: Vec<Vec<BigInt>> = (0..=t_max).map(|t| expanded_coeffs(d, t)).collect::<Result<_>>()?;
    let built = recurrence_table(d, t_max);
    let q = BigInt::from(d - 1);
    let at = |t: usize, i: usize| -> BigInt { expanded[t].get(i).cloned().unwrap_or_default() };

    let mut first_violation = None;
    'outer: for t in 0..=t_max {
        for i in 0..=t {
            let a = at(t, i);
            let what = if a != built[t][i] {
                Some("closed form disagrees with recurrence-built coefficient")
            } else if t >= 3 && a != (if i > 0 { at(t - 1, i - 1) } else { BigInt::zero() }) - &q * at(t - 2, i) {
                Some("a_{t,i} != a_{t-1,i-1} - (d-1) a_{t-2,i}")
            } else if (t - i) % 2 == 1 && !a.is_zero() {
                Some("nonzero coefficient with t - i odd")
            } else if i == t && !a.is_one() {
                Some("leading coefficient is not 1")
            } else if i == 0 && t >= 2 && t % 2 == 0 && a != even_constant_term(d, t) {
                Some("constant term differs from d(d-1)^(t/2-1)(-1)^(t/2)")
            } else {
                None
            };
            if let Some(what) = what {
                first_violation = Some(CoeffViolation { t, i, what });
                break 'outer;
            }
        }
    }
    Ok(RecurrenceCheck { d, t_max, pass: first_violation.is_none(), first_violation })
}

/// `d (d-1)^(t/2 - 1) (-1)^(t/2)` for even `t >= 2`.
pub fn even_constant_term(d: u64, t: usize) -> BigInt {
    let half = (t / 2) as u32;
    let v = BigInt::from(d) * Pow::pow(BigInt::from(d - 1), half - 1);
    if half.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// A dense square integer matrix that switches from `i64` to `BigInt`
/// storage once an entry would overflow.
#[derive(Debug, Clone, PartialEq)]
pub enum WalkMatrix {
    Small { n: usize, data: Vec<i64> },
    Big { n: usize, data: Vec<BigInt> },
}

impl WalkMatrix {
    fn identity(n: usize) -> Self {
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        WalkMatrix::Small { n, data }
    }

    fn adjacency(g: &Graph) -> Self {
        let n = g.n();
        let mut data = vec![0i64; n * n];
        for u in 0..n {
            for &v in g.neighbors(u) {
                data[u * n + v] = 1;
            }
        }
        WalkMatrix::Small { n, data }
    }

    pub fn n(&self) -> usize {
        match self {
            WalkMatrix::Small { n, .. } | WalkMatrix::Big { n, .. } => *n,
        }
    }

    pub fn get(&self, u: usize, v: usize) -> BigInt {
        match self {
            WalkMatrix::Small { n, data } => BigInt::from(data[u * n + v]),
            WalkMatrix::Big { n, data } => data[u * n + v].clone(),
        }
    }

    pub fn is_big(&self) -> bool {
        matches!(self, WalkMatrix::Big { .. })
    }

    fn to_big(&self) -> Vec<BigInt> {
        match self {
            WalkMatrix::Small { data, .. } => data.iter().map(|&x| BigInt::from(x)).collect(),
            WalkMatrix::Big { data, .. } => data.clone(),
        }
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        let n = self.n();
        (0..n).map(|u| (0..n).map(|v| self.get(u, v)).sum()).collect()
    }

    pub fn min_entry(&self) -> BigInt {
        match self {
            WalkMatrix::Small { data, .. } => BigInt::from(data.iter().copied().min().unwrap_or(0)),
            WalkMatrix::Big { data, .. } => data.iter().min().cloned().unwrap_or_default(),
        }
    }

    /// `A * self - c * other`, where `A` is the adjacency structure of `g`.
    fn step(&self, g: &Graph, other: &WalkMatrix, c: u64) -> WalkMatrix {
        let n = self.n();
        if let (WalkMatrix::Small { data: a, .. }, WalkMatrix::Small { data: b, .. }) = (self, other) {
            if let Ok(c) = i64::try_from(c) {
                if let Some(data) = step_rows(g, a, b, &c) {
                    return WalkMatrix::Small { n, data };
                }
            }
        }
        let data = step_rows(g, &self.to_big(), &other.to_big(), &BigInt::from(c))
            .expect("arbitrary-precision arithmetic does not overflow");
        WalkMatrix::Big { n, data }
    }

    fn add(&self, other: &WalkMatrix) -> WalkMatrix {
        let n = self.n();
        if let (WalkMatrix::Small { data: a, .. }, WalkMatrix::Small { data: b, .. }) = (self, other) {
            let sum: Option<Vec<i64>> = a.iter().zip(b).map(|(x, y)| i64::checked_add(*x, *y)).collect();
            if let Some(data) = sum {
                return WalkMatrix::Small { n, data };
            }
        }
        let data = self.to_big().into_iter().zip(other.to_big()).map(|(x, y)| x + y).collect();
        WalkMatrix::Big { n, data }
    }
}

fn step_rows<T>(g: &Graph, cur: &[T], prev: &[T], c: &T) -> Option<Vec<T>>
where
    T: Clone + Zero + CheckedAdd + CheckedSub + CheckedMul + Send + Sync,
{
    let n = g.n();
    let rows: Vec<Option<Vec<T>>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut row = Vec::with_capacity(n);
            for v in 0..n {
                let mut acc = T::zero();
                for &w in g.neighbors(u) {
                    acc = acc.checked_add(&cur[w * n + v])?;
                }
                acc = acc.checked_sub(&c.checked_mul(&prev[u * n + v])?)?;
                row.push(acc);
            }
            Some(row)
        })
        .collect();
    let mut out = Vec::with_capacity(n * n);
    for row in rows {
        out.extend(row?);
    }
    Some(out)
}

fn regular_undirected_degree(g: &Graph, what: &'static str) -> Result<u64> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported(what));
    }
    let p = g.degree_profile();
    let d = p.regular_degree.ok_or(Error::NotRegular { min: p.min(), max: p.max() })?;
    if d < 2 {
        return Err(Error::InvalidParameter(format!("{what} needs degree >= 2 (got {d})")));
    }
    Ok(d as u64)
}

/// Runs `M_0 = I, M_1 = A, M_2 = A^2 - dI, M_t = A M_{t-1} - (d-1) M_{t-2}`
/// and hands each `M_t` to `visit`.
fn walk_sequence(g: &Graph, d: u64, horizon: usize, mut visit: impl FnMut(usize, &WalkMatrix)) {
    let mut prev = WalkMatrix::identity(g.n());
    visit(0, &prev);
    if horizon == 0 {
        return;
    }
    let mut cur = WalkMatrix::adjacency(g);
    visit(1, &cur);
    for t in 2..=horizon {
        let c = if t == 2 { d } else { d - 1 };
        let next = cur.step(g, &prev, c);
        visit(t, &next);
        prev = std::mem::replace(&mut cur, next);
    }
}

/// `M_t = P_t(A)` for `t = 0..=horizon`.
#[derive(Debug, Clone, PartialEq)]
pub struct NbWalkMatrices {
    pub d: u64,
    pub horizon: usize,
    pub matrices: Vec<WalkMatrix>,
}

impl NbWalkMatrices {
    /// Entrywise `sum_{t=0..=horizon} M_t`.
    pub fn total(&self) -> WalkMatrix {
        let mut it = self.matrices.iter();
        let first = it.next().cloned().unwrap_or_else(|| WalkMatrix::identity(0));
        it.fold(first, |acc, m| acc.add(m))
    }
}

/// Non-backtracking walk-count matrices of a regular undirected graph.
pub fn nb_walk_matrices(g: &Graph, horizon: usize) -> Result<NbWalkMatrices> {
    let d = regular_undirected_degree(g, "non-backtracking walk matrices")?;
    let mut matrices = Vec::with_capacity(horizon + 1);
    walk_sequence(g, d, horizon, |_, m| matrices.push(m.clone()));
    Ok(NbWalkMatrices { d, horizon, matrices })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityCertificate {
    pub horizon: usize,
    /// Every entry of `sum_{t<=horizon} P_t(A)` is at least 1.
    pub is_positive: bool,
    pub min_entry: BigInt,
    /// Row sums of the summed matrix; all equal `mu_{d,horizon}` for a d-regular graph.
    pub row_sums: Vec<BigInt>,
}

/// Positivity of the summed walk matrix; holds iff the diameter is at most `horizon`.
pub fn positivity_certificate(g: &Graph, horizon: usize) -> Result<PositivityCertificate> {
    let d = regular_undirected_degree(g, "positivity certificate")?;
    let mut total: Option<WalkMatrix> = None;
    walk_sequence(g, d, horizon, |_, m| {
        total = Some(match total.take() {
            None => m.clone(),
            Some(acc) => acc.add(m),
        });
    });
    let total = total.expect("walk sequence visits M_0");
    let min_entry = total.min_entry();
    Ok(PositivityCertificate {
        horizon,
        is_positive: min_entry >= BigInt::one(),
        min_entry,
        row_sums: total.row_sums(),
    })
}

/// One eigenvalue tested against `|sum_{t<=k} P_t(lambda)| <= mu - n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueCheck {
    pub lambda: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub slack: f64,
    pub pass: bool,
    /// `lambda = -d` (bipartite case), where the inequality may be tight.
    pub at_minus_d: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueBoundReport {
    pub d: u64,
    pub k: u32,
    pub n: u64,
    pub mu: BigInt,
    pub rhs: BigInt,
    pub tol: f64,
    pub checks: Vec<EigenvalueCheck>,
    pub all_pass: bool,
}

impl EigenvalueBoundReport {
    pub fn min_slack(&self) -> Option<f64> {
        self.checks.iter().map(|c| c.slack).min_by(f64::total_cmp)
    }
}

/// Default tolerance `1e-6 * max(1, mu - n)`.
pub fn default_tolerance(gap: &BigInt) -> f64 {
    1e-6 * gap.abs().to_f64().unwrap_or(f64::MAX).max(1.0)
}

/// Checks every eigenvalue except one copy of the largest against the
/// eigenvalue bound for parameters `(d, k, n)`.
pub fn eigenvalue_bound_check_params(
    d: u64,
    k: u32,
    n: u64,
    spectrum: &[f64],
    tol: Option<f64>,
) -> Result<EigenvalueBoundReport> {
    let mu = moore_bound(d, k)?;
    let rhs = &mu - BigInt::from(n);
    let tol = tol.unwrap_or_else(|| default_tolerance(&rhs));
    let rhs_f = rhs.to_f64().unwrap_or(f64::MAX);

    let mut sorted = spectrum.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let checks: Vec<EigenvalueCheck> = sorted
        .iter()
        .skip(1)
        .map(|&lambda| {
            let lhs = sum_values(d, k as usize, lambda).abs();
            let slack = rhs_f - lhs;
            EigenvalueCheck {
                lambda,
                lhs,
                rhs: rhs_f,
                slack,
                pass: slack >= -tol,
                at_minus_d: (lambda + d as f64).abs() < 1e-6,
            }
        })
        .collect();
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(EigenvalueBoundReport { d, k, n, mu, rhs, tol, checks, all_pass })
}

/// [`eigenvalue_bound_check_params`] with `(d, k, n)` read off the graph.
/// `force_d` idealizes a near-regular graph as d-regular.
pub fn eigenvalue_bound_check(
    g: &Graph,
    spectrum: &[f64],
    tol: Option<f64>,
    force_d: Option<u64>,
) -> Result<EigenvalueBoundReport> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported("eigenvalue bound check"));
    }
    let p = crate::moore::profile(g, force_d)?;
    eigenvalue_bound_check_params(p.d, p.k, g.n() as u64, spectrum, tol)
}

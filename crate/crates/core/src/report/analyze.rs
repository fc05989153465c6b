use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::expansion::{bound_set, exact_expansion, BoundEntry, BoundSet, ExpansionMeasurement, Target, DEFAULT_SUBSET_CAP};
use crate::geronimus::{eigenvalue_bound_check, positivity_certificate, EigenvalueBoundReport, PositivityCertificate};
use crate::graph::{DegreeProfile, DiameterReport, Graph};
use crate::moore::{MooreProfile, Regime};
use crate::numeric::{fmt_sig, BoundValue, NoBound};
use crate::spectral::{regime_report, spectrum, RegimeReport, SpectralReport};

use super::tree::{Map, Value};

/// A one-sided gap `d - λ₂` below this fraction of `d` is flagged as near zero.
pub const SMALL_GAP_FRACTION: f64 = 0.15;

/// Absolute slack for comparisons that involve a floating-point side.
pub const REAL_SLACK: f64 = 1e-9;

/// Solver noise below this magnitude renders as 0 so reports stay byte-stable.
const NOISE_FLOOR: f64 = 1e-10;

pub(super) fn snap(x: f64) -> f64 {
    if x.abs() < NOISE_FLOOR {
        0.0
    } else {
        x
    }
}

/// Positivity matrices are `n x n` per horizon step; skip beyond this.
const POSITIVITY_MAX_N: usize = 1500;

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyzeOptions {
    pub exact_cap: usize,
    pub force_d: Option<u64>,
    pub tol: Option<f64>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { exact_cap: DEFAULT_SUBSET_CAP, force_d: None, tol: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable(String),
    /// The bound has a value but the quantity it constrains was not measured.
    NotMeasured(String),
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable(_) => "not_applicable",
            Verdict::NotMeasured(_) => "not_measured",
        }
    }

    fn reason(&self) -> Option<&str> {
        match self {
            Verdict::NotApplicable(r) | Verdict::NotMeasured(r) => Some(r),
            _ => None,
        }
    }
}

/// The measured quantity a bound is compared against.
#[derive(Debug, Clone, PartialEq)]
pub enum Measured {
    Exact(BigRational),
    Real(f64),
}

impl Measured {
    fn as_f64(&self) -> f64 {
        match self {
            Measured::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Measured::Real(x) => *x,
        }
    }

    fn to_value(&self) -> Value {
        match self {
            Measured::Exact(r) => r.into(),
            Measured::Real(x) => (*x).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundVerdict {
    pub entry: BoundEntry,
    pub measured: Option<Measured>,
    pub verdict: Verdict,
    /// Bound equals the measurement.
    pub tight: bool,
}

/// Compares one bound against the measured quantity it targets.
pub fn judge(entry: &BoundEntry, measured: Option<Measured>, unmeasured_reason: &str) -> BoundVerdict {
    let bound = match &entry.result {
        Ok(b) => b,
        Err(nb) => {
            return BoundVerdict {
                entry: entry.clone(),
                measured,
                verdict: Verdict::NotApplicable(nb.to_string()),
                tight: false,
            }
        }
    };
    let Some(m) = measured else {
        return BoundVerdict {
            entry: entry.clone(),
            measured: None,
            verdict: Verdict::NotMeasured(unmeasured_reason.to_string()),
            tight: false,
        };
    };
    let (holds, tight) = compare(entry.id.target(), bound, &m);
    BoundVerdict {
        entry: entry.clone(),
        measured: Some(m),
        verdict: if holds { Verdict::Pass } else { Verdict::Fail },
        tight,
    }
}

fn compare(target: Target, bound: &BoundValue, m: &Measured) -> (bool, bool) {
    if let (Some(b), Measured::Exact(r)) = (&bound.exact, m) {
        let holds = match target {
            Target::LambdaUpper => r <= b,
            _ => b <= r,
        };
        return (holds, b == r);
    }
    let (b, x) = (bound.value, m.as_f64());
    let scale = REAL_SLACK * b.abs().max(1.0);
    let holds = match target {
        Target::LambdaUpper => x <= b + scale,
        _ => b <= x + scale,
    };
    (holds, (b - x).abs() <= scale)
}

/// Every bound evaluated and judged for one graph.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub directed: bool,
    pub degrees: DegreeProfile,
    pub diameter: DiameterReport,
    pub profile: Option<MooreProfile>,
    pub spectral: Option<SpectralReport>,
    pub expansion: Option<ExpansionMeasurement>,
    pub bounds: Option<BoundSet>,
    pub verdicts: Vec<BoundVerdict>,
    /// Why no bound rows were produced, when none were.
    pub bounds_skipped: Option<String>,
    pub eigenvalue_bound: Option<EigenvalueBoundReport>,
    pub positivity: Option<PositivityCertificate>,
    pub regime: Option<RegimeReport>,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    /// True when no applicable bound fails and every certificate that ran passed.
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.verdict != Verdict::Fail)
            && self.eigenvalue_bound.as_ref().is_none_or(|e| e.all_pass)
    }

    pub fn verdict(&self, id: crate::expansion::BoundId) -> Option<&BoundVerdict> {
        self.verdicts.iter().find(|v| v.entry.id == id)
    }

    pub fn to_value(&self) -> Value {
        let diameter: Value = match self.diameter.diameter {
            Some(k) => k.into(),
            None => "infinite".into(),
        };
        let mut graph = Map::new()
            .with("n", self.n)
            .with("m", self.m)
            .with("directed", self.directed)
            .with("connected", self.diameter.connected)
            .with("diameter", diameter)
            .with("regular_degree", self.degrees.regular_degree)
            .with("out_degree", degree_range(self.degrees.out.min, self.degrees.out.max));
        if let Some(inc) = &self.degrees.inc {
            graph.insert("in_degree", degree_range(inc.min, inc.max));
        }

        let mut bounds = Map::new().with("rows", self.verdicts.iter().map(verdict_value).collect::<Vec<_>>());
        if let Some(b) = &self.bounds {
            bounds.insert("d", b.d);
            bounds.insert("k", b.k);
            bounds.insert("regime", b.regime.as_str());
        }
        if let Some(why) = &self.bounds_skipped {
            bounds.insert("skipped", why.as_str());
        }

        Map::new()
            .with("graph", graph)
            .with("moore_profile", self.profile.as_ref().map(profile_value))
            .with("spectrum", self.spectral.as_ref().map(spectral_value))
            .with("expansion", self.expansion.as_ref().map(expansion_value))
            .with("bounds", bounds)
            .with("eigenvalue_bound", self.eigenvalue_bound.as_ref().map(eigen_value))
            .with("positivity", self.positivity.as_ref().map(positivity_value))
            .with("regime", self.regime.as_ref().map(regime_value))
            .with("warnings", self.warnings.clone())
            .into()
    }
}

/// Runs every module against one graph.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut warnings = Vec::new();
    let degrees = g.degree_profile();
    let diameter = g.diameter();
    let regime = Regime::of(g);

    let d = match (degrees.regular_degree, opts.force_d) {
        (Some(r), Some(f)) if r as u64 != f => {
            warnings.push(format!("forced degree {f} differs from the measured regular degree {r}"));
            Some(f)
        }
        (None, Some(f)) => {
            warnings.push(format!(
                "regularity idealized: degrees range {}..={}, analysis uses d = {f}",
                degrees.min(),
                degrees.max()
            ));
            Some(f)
        }
        (_, Some(f)) => Some(f),
        (Some(r), None) => Some(r as u64),
        (None, None) => {
            warnings.push(format!(
                "graph is not regular (degrees {}..={}); Moore profile and bounds skipped, use --force-d to idealize",
                degrees.min(),
                degrees.max()
            ));
            None
        }
    };
    if diameter.diameter.is_none() {
        warnings.push("diameter is infinite; Moore profile and bounds are not applicable".into());
    }

    let profile = match (d, diameter.diameter) {
        (Some(d), Some(k)) => Some(MooreProfile::new(regime, d, k as u32, Some(g.n() as u64))?),
        _ => None,
    };

    let spectral = if g.is_directed() { None } else { Some(spectrum(g)?) };
    if let (Some(s), Some(d)) = (&spectral, degrees.regular_degree) {
        if let Some(l2) = s.lambda2() {
            let gap = d as f64 - l2;
            if d > 0 && gap < SMALL_GAP_FRACTION * d as f64 {
                warnings.push(format!(
                    "near-zero spectral gap: d - lambda_2 = {} is below {} d",
                    fmt_sig(gap),
                    fmt_sig(SMALL_GAP_FRACTION)
                ));
            }
        }
        if !s.residual_ok() {
            warnings.push(format!("eigensolver residual {} exceeds 1e-9 (d+1)", fmt_sig(s.solver_residual)));
        }
    }

    if opts.exact_cap > DEFAULT_SUBSET_CAP {
        warnings.push(format!(
            "subset cap {} exceeds {DEFAULT_SUBSET_CAP}; exhaustive enumeration may be slow",
            opts.exact_cap
        ));
    }
    let expansion = if g.n() < 2 {
        None
    } else if g.n() > opts.exact_cap {
        warnings.push(format!("exact expansion skipped: n = {} exceeds the subset cap {}", g.n(), opts.exact_cap));
        None
    } else {
        Some(exact_expansion(g, opts.exact_cap)?)
    };

    let (bounds, bounds_skipped) = match &profile {
        Some(p) if p.d >= 2 => {
            // Cheeger needs a genuinely regular graph; a forced degree does not qualify.
            let lambda2 = match (&spectral, degrees.regular_degree) {
                (Some(s), Some(r)) if r as u64 == p.d => s.lambda2(),
                _ => None,
            };
            (Some(bound_set(regime, p.d, p.k, g.n() as u64, lambda2)?), None)
        }
        Some(p) => (None, Some(format!("degree {} is below 2", p.d))),
        None if diameter.diameter.is_none() => (None, Some("diameter is infinite".to_string())),
        None => (None, Some("graph is not regular".to_string())),
    };

    let mut verdicts = Vec::new();
    if let Some(set) = &bounds {
        let unmeasured = if expansion.is_none() { "exact expansion not computed" } else { "" };
        for e in &set.entries {
            let measured = match e.id.target() {
                Target::EdgeExpansion => expansion.as_ref().map(|x| Measured::Exact(x.h_e.clone())),
                Target::VertexExpansion => expansion.as_ref().map(|x| Measured::Exact(x.phi_v.clone())),
                Target::LambdaUpper => spectral.as_ref().and_then(|s| s.lambda_g).map(Measured::Real),
            };
            let why = match e.id.target() {
                Target::LambdaUpper => "no nontrivial eigenvalue",
                _ => unmeasured,
            };
            verdicts.push(judge(e, measured, why));
        }
    }

    let eigenvalue_bound = match (&profile, &spectral) {
        (Some(p), Some(s)) if p.d >= 2 => Some(eigenvalue_bound_check(g, &s.eigenvalues, opts.tol, Some(p.d))?),
        _ => None,
    };

    let positivity = match (&profile, degrees.regular_degree) {
        (Some(p), Some(r)) if !g.is_directed() && r >= 2 && r as u64 == p.d && g.n() <= POSITIVITY_MAX_N => {
            Some(positivity_certificate(g, p.k as usize)?)
        }
        _ => None,
    };

    let regime_rep = match &profile {
        Some(p) if p.is_feasible() => Some(regime_report(p)?),
        Some(p) => {
            warnings.push(format!("n exceeds the Moore bound {} for the analysed degree", p.mu));
            None
        }
        None => None,
    };

    Ok(AnalysisReport {
        n: g.n(),
        m: g.m(),
        directed: g.is_directed(),
        degrees,
        diameter,
        profile,
        spectral,
        expansion,
        bounds,
        verdicts,
        bounds_skipped,
        eigenvalue_bound,
        positivity,
        regime: regime_rep,
        warnings,
    })
}

/// Evaluates every bound row for raw parameters.
pub fn bounds_table(regime: Regime, d: u64, k: u32, n: u64) -> Result<Value> {
    if regime == Regime::Directed && d < 2 {
        return Err(Error::InvalidParameter(format!("directed bounds need d >= 2 (got {d})")));
    }
    let profile = MooreProfile::new(regime, d, k, Some(n))?;
    let set = bound_set(regime, d, k, n, None)?;
    let mut warnings = Vec::new();
    if !profile.is_feasible() {
        warnings.push(format!("n = {n} exceeds the Moore bound {}; no such graph exists", profile.mu));
    }
    let rows: Vec<Value> = set.entries.iter().map(|e| entry_value(e).into()).collect();
    Ok(Map::new()
        .with("inputs", Map::new().with("d", d).with("k", k).with("n", n).with("regime", regime.as_str()))
        .with("moore_profile", profile_value(&profile))
        .with("rows", rows)
        .with("warnings", warnings)
        .into())
}

fn degree_range(min: usize, max: usize) -> Value {
    Map::new().with("min", min).with("max", max).into()
}

fn entry_value(e: &BoundEntry) -> Map {
    let mut m = Map::new()
        .with("id", e.id.as_str())
        .with("formula", e.id.formula())
        .with("applies_to", e.id.applicability().as_str())
        .with("alpha", e.alpha.as_ref());
    match &e.result {
        Ok(v) => {
            m.insert("bound", v);
            m.insert("status", "ok");
        }
        Err(nb) => {
            m.insert("bound", Value::Null);
            m.insert(
                "status",
                match nb {
                    NoBound::Vacuous(_) => "vacuous",
                    NoBound::NotApplicable(_) => "not_applicable",
                },
            );
            m.insert("reason", nb.to_string());
        }
    }
    m
}

fn verdict_value(v: &BoundVerdict) -> Value {
    let mut m = entry_value(&v.entry)
        .with("measured", v.measured.as_ref().map(Measured::to_value))
        .with("verdict", v.verdict.as_str())
        .with("tight", v.tight);
    if let Some(r) = v.verdict.reason() {
        m.insert("reason", r);
    }
    m.into()
}

pub(crate) fn profile_value(p: &MooreProfile) -> Value {
    Map::new()
        .with("d", p.d)
        .with("k", p.k)
        .with("n", p.n)
        .with("regime", p.regime.as_str())
        .with("mu", &p.mu)
        .with("additive_gap", p.additive_gap.as_ref())
        .with("alpha", p.alpha.as_ref())
        .with("epsilon", p.epsilon.as_ref())
        .with("feasible", p.is_feasible())
        .into()
}

fn spectral_value(s: &SpectralReport) -> Value {
    let groups: Vec<Value> = s
        .grouped(1e-8)
        .into_iter()
        .map(|(v, mult)| Map::new().with("value", snap(v)).with("multiplicity", mult).into())
        .collect();
    Map::new()
        .with("eigenvalues", groups)
        .with("lambda_1", snap(s.lambda1()))
        .with("lambda_2", s.lambda2().map(snap))
        .with("lambda_min", snap(s.lambda_min()))
        .with("lambda_g", s.lambda_g.map(snap))
        .with("spectral_gap", s.spectral_gap.map(snap))
        .with("max_degree", s.max_degree)
        .with("residual_ok", s.residual_ok())
        .into()
}

fn expansion_value(x: &ExpansionMeasurement) -> Value {
    Map::new()
        .with("h_e", &x.h_e)
        .with("h_e_witness", x.h_witness.clone())
        .with("h_e_cut", x.h_cut)
        .with("phi_v", &x.phi_v)
        .with("phi_v_witness", x.phi_witness.clone())
        .with("phi_v_boundary", x.phi_boundary)
        .with("subset_cap", x.subset_cap)
        .with("subsets_examined", x.subsets_examined)
        .into()
}

fn eigen_value(e: &EigenvalueBoundReport) -> Value {
    let checks: Vec<Value> = e
        .checks
        .iter()
        .map(|c| {
            Map::new()
                .with("lambda", snap(c.lambda))
                .with("lhs", snap(c.lhs))
                .with("slack", snap(c.slack))
                .with("pass", c.pass)
                .with("at_minus_d", c.at_minus_d)
                .into()
        })
        .collect();
    Map::new()
        .with("d", e.d)
        .with("k", e.k)
        .with("n", e.n)
        .with("rhs", &e.rhs)
        .with("tol", e.tol)
        .with("all_pass", e.all_pass)
        .with("min_slack", e.min_slack().map(snap))
        .with("checks", checks)
        .into()
}

fn positivity_value(p: &PositivityCertificate) -> Value {
    let first = p.row_sums.first().cloned();
    let uniform = p.row_sums.iter().all(|r| Some(r) == first.as_ref());
    Map::new()
        .with("horizon", p.horizon)
        .with("is_positive", p.is_positive)
        .with("min_entry", &p.min_entry)
        .with("row_sum", if uniform { first.map(Value::from) } else { None })
        .with("row_sums_uniform", uniform)
        .into()
}

fn regime_value(r: &RegimeReport) -> Value {
    Map::new()
        .with("additive_gap", &r.additive_gap)
        .with("additive_scale", r.additive_scale)
        .with("within_additive_scale", r.within_additive_scale)
        .with("epsilon", &r.epsilon)
        .with("epsilon_scale", r.epsilon_scale)
        .with("ramanujan_scale", r.ramanujan_scale)
        .with("note", r.note)
        .into()
}

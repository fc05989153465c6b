use std::f64::consts::PI;

use crate::constructions::{self_check, Family};
use crate::error::{Error, Result};
use crate::geronimus::{coeff_recurrence_check, positivity_certificate, trig_closed_form, values};
use crate::graph::Graph;
use crate::moore::{moore_bound, moore_bound_summed};
use crate::numeric::fmt_sig;

use super::analyze::{analyze, snap, AnalyzeOptions, Verdict};
use super::tree::{Map, Value};

/// One certified statement.
#[derive(Debug, Clone, PartialEq)]
pub struct CertItem {
    pub subject: String,
    pub check: String,
    pub pass: bool,
    pub detail: String,
    pub notes: Vec<String>,
}

impl CertItem {
    fn new(subject: &str, check: &str, pass: bool, detail: String) -> Self {
        CertItem { subject: subject.into(), check: check.into(), pass, detail, notes: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Certification {
    pub items: Vec<CertItem>,
}

impl Certification {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    /// 0 when everything passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_value(&self) -> Value {
        let items: Vec<Value> = self
            .items
            .iter()
            .map(|i| {
                Map::new()
                    .with("subject", i.subject.as_str())
                    .with("check", i.check.as_str())
                    .with("result", if i.pass { "pass" } else { "fail" })
                    .with("detail", i.detail.as_str())
                    .with("notes", i.notes.clone())
                    .into()
            })
            .collect();
        let failed = self.items.iter().filter(|i| !i.pass).count();
        Map::new()
            .with("status", if failed == 0 { "pass" } else { "fail" })
            .with("checked", self.items.len())
            .with("failed", failed)
            .with("items", items)
            .into()
    }
}

/// Certificates for one graph: eigenvalue bound, positivity against the
/// diameter, and every applicable bound against the exhaustive oracle.
pub fn verify_graph(g: &Graph, subject: &str, opts: &AnalyzeOptions) -> Result<Certification> {
    let report = analyze(g, opts)?;
    let mut items = Vec::new();

    if let Some(e) = &report.eigenvalue_bound {
        let mut item = CertItem::new(
            subject,
            "eigenvalue_bound",
            e.all_pass,
            match e.checks.iter().filter(|c| !c.pass).min_by(|a, b| a.slack.total_cmp(&b.slack)) {
                Some(c) => format!(
                    "lambda = {}: |sum P_t| = {} exceeds mu - n = {}",
                    fmt_sig(c.lambda),
                    fmt_sig(c.lhs),
                    e.rhs
                ),
                None => format!(
                    "{} eigenvalues within mu - n = {} (min slack {})",
                    e.checks.len(),
                    e.rhs,
                    e.min_slack().map_or("-".into(), |x| fmt_sig(snap(x)))
                ),
            },
        );
        if e.checks.iter().any(|c| c.at_minus_d && c.slack.abs() <= e.tol) {
            item.notes.push("tight: equality at lambda = -d".into());
        }
        items.push(item);
    }

    if let (Some(p), Some(profile)) = (&report.positivity, &report.profile) {
        let mu = &profile.mu;
        let sums_ok = p.row_sums.iter().all(|s| s == mu);
        items.push(CertItem::new(
            subject,
            "row_sums",
            sums_ok,
            format!("row sums of sum_t M_t at horizon {} equal mu = {mu}: {sums_ok}", p.horizon),
        ));
        let below_ok = if p.horizon >= 1 {
            !positivity_certificate(g, p.horizon - 1)?.is_positive
        } else {
            true
        };
        items.push(CertItem::new(
            subject,
            "positivity",
            p.is_positive && below_ok,
            format!(
                "positive at horizon {} (diameter): {}; not positive at horizon {}: {below_ok}",
                p.horizon,
                p.is_positive,
                p.horizon.saturating_sub(1)
            ),
        ));
    }

    for v in &report.verdicts {
        let id = v.entry.id.as_str();
        let Some(bound) = v.entry.value() else { continue };
        let measured = v.measured.as_ref();
        match &v.verdict {
            Verdict::Pass | Verdict::Fail => {
                let relation = if v.entry.id.target() == crate::expansion::Target::LambdaUpper { "<=" } else { ">=" };
                let mut item = CertItem::new(
                    subject,
                    &format!("bound:{id}"),
                    v.verdict == Verdict::Pass,
                    format!(
                        "measured {} {relation} bound {}",
                        measured.map_or("-".into(), describe_measured),
                        describe_bound(bound)
                    ),
                );
                if v.tight {
                    item.notes.push("tight: bound equals measurement".into());
                }
                items.push(item);
            }
            _ => {}
        }
    }

    if items.is_empty() {
        let why = report.bounds_skipped.clone().unwrap_or_else(|| "nothing applicable".into());
        items.push(CertItem::new(subject, "applicability", true, format!("no certificate applies: {why}")));
    }
    Ok(Certification { items })
}

fn describe_measured(m: &super::analyze::Measured) -> String {
    match m {
        super::analyze::Measured::Exact(r) => crate::numeric::fmt_rational(r),
        super::analyze::Measured::Real(x) => fmt_sig(*x),
    }
}

fn describe_bound(b: &crate::numeric::BoundValue) -> String {
    match &b.exact {
        Some(r) => crate::numeric::fmt_rational(r),
        None => fmt_sig(b.value),
    }
}

/// Maximum deviation of the value recurrence from the trigonometric closed
/// form over `samples` midpoint angles in `(0, pi)`, scaled by `(d-1)^(t/2)`.
pub fn trig_identity_deviation(d: u64, t_max: usize, samples: usize) -> f64 {
    let mut worst: f64 = 0.0;
    let r = ((d - 1) as f64).sqrt();
    for j in 0..samples {
        let theta = PI * (j as f64 + 0.5) / samples as f64;
        let x = 2.0 * r * theta.cos();
        let vals = values(d, t_max, x);
        for (t, v) in vals.iter().enumerate().skip(1) {
            let scale = ((d - 1) as f64).powf(t as f64 / 2.0);
            worst = worst.max((v - trig_closed_form(d, t, theta)).abs() / scale);
        }
    }
    worst
}

/// The built-in family grid.
pub fn standard_families() -> Vec<Family> {
    let mut f = Vec::new();
    f.extend((3..=30).map(|n| Family::Cycle { n }));
    f.push(Family::Petersen);
    f.extend((3..=10).map(|m| Family::Complete { m }));
    f.extend((2..=8).map(|m| Family::CompleteBipartite { m }));
    f.extend([(2, 2), (2, 3), (3, 2)].map(|(d, k)| Family::Kautz { d, k }));
    f.extend([(2, 3), (3, 2)].map(|(b, k)| Family::DeBruijnDigraph { b, k }));
    f.extend((6..=20).step_by(2).map(|n| Family::TwoCliquesBridged { n }));
    f.extend([2, 3, 5].map(|q| Family::Polarity { q }));
    f
}

/// Runs a named suite. Only `standard` exists.
pub fn verify_suite(name: &str, opts: &AnalyzeOptions) -> Result<Certification> {
    if name != "standard" {
        return Err(Error::InvalidParameter(format!("unknown suite `{name}` (available: standard)")));
    }
    let mut items = Vec::new();

    for d in 2..=10u64 {
        for k in 1..=8u32 {
            let (a, b) = (moore_bound(d, k)?, moore_bound_summed(d, k)?);
            if a != b {
                items.push(CertItem::new("moore", "closed_form", false, format!("d={d} k={k}: {a} != {b}")));
            }
        }
    }
    items.push(CertItem::new("moore", "closed_form", true, "closed form equals the level sum for d <= 10, k <= 8".into()));

    for d in 3..=10u64 {
        let dev = trig_identity_deviation(d, 12, 200);
        items.push(CertItem::new(
            &format!("geronimus(d={d})"),
            "trig_identity",
            dev < 1e-9,
            format!("max scaled deviation {} over t <= 12, 200 angles", fmt_sig(dev)),
        ));
    }
    for d in 2..=10u64 {
        let r = coeff_recurrence_check(d, 30)?;
        items.push(CertItem::new(
            &format!("geronimus(d={d})"),
            "coeff_recurrence",
            r.pass,
            match &r.first_violation {
                Some(v) => format!("violation at t={} i={}: {}", v.t, v.i, v.what),
                None => "exact coefficient identities hold for t <= 30".into(),
            },
        ));
    }

    for fam in standard_families() {
        let label = fam.label();
        match self_check(&fam)? {
            Err(fail) => items.push(CertItem::new(&label, "generator", false, fail.what)),
            Ok(g) => {
                let spec = fam.spec();
                items.push(CertItem::new(
                    &label,
                    "generator",
                    true,
                    format!("n = {}, diameter {}", spec.expected_n, spec.expected_k),
                ));
                // Polarity graphs are regular only after idealizing the absolute points.
                let mut o = opts.clone();
                if matches!(fam, Family::Polarity { .. }) && o.force_d.is_none() {
                    o.force_d = Some(g.degree_profile().max() as u64);
                }
                items.extend(verify_graph(&g, &label, &o)?.items);
            }
        }
    }
    Ok(Certification { items })
}

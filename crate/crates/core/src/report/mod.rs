//! Reports: per-graph analysis, raw bound tables, family implications and
//! certification. Everything renders through one key-sorted [`Value`] tree.

mod analyze;
mod table2;
mod tree;
mod verify;

pub use analyze::{
    analyze, bounds_table, judge, AnalysisReport, AnalyzeOptions, BoundVerdict, Measured, Verdict, REAL_SLACK,
    SMALL_GAP_FRACTION,
};
pub use table2::{table2, Table2, Table2Cell, Table2Family};
pub use tree::{Format, Map, Value};
pub use verify::{
    standard_families, trig_identity_deviation, verify_graph, verify_suite, CertItem, Certification,
};

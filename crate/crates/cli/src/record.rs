//! JSON output records. Field names and order are part of the tool's
//! interface: two runs on the same input and seed emit byte-identical JSON
//! except for `wall_time_ms`, which is therefore always the last field.

use serde::Serialize;

use stcvs_core::recognizers::ClassReport;
use stcvs_core::solvers::{Diagnostics, Method, Optimality, SeparatorResult};
use stcvs_core::suite::SuiteReport;

pub fn method_name(method: Method) -> &'static str {
    match method {
        Method::Oracle => "oracle",
        Method::Chordal => "chordal",
        Method::ChordalBipartite => "chordal-bipartite",
        Method::Approx => "approx",
        Method::TreewidthDp => "treewidth-dp",
    }
}

pub fn optimality_name(optimality: Optimality) -> &'static str {
    match optimality {
        Optimality::Exact => "exact",
        Optimality::UpperBound => "upper-bound",
        Optimality::NoneExists => "none-exists",
        Optimality::NoneFound => "none-found",
        Optimality::Unresolved => "unresolved",
    }
}

#[derive(Serialize)]
pub struct RecognizerRecord {
    pub chordal: bool,
    pub bipartite: bool,
    pub chordal_bipartite: bool,
    pub chordality: usize,
    pub chordality_exact: bool,
}

impl From<&ClassReport> for RecognizerRecord {
    fn from(report: &ClassReport) -> Self {
        RecognizerRecord {
            chordal: report.chordal.is_chordal(),
            bipartite: report.bipartite.is_bipartite(),
            chordal_bipartite: report.chordal_bipartite.is_chordal_bipartite(),
            chordality: report.chordality.value(),
            chordality_exact: report.chordality.is_exact(),
        }
    }
}

#[derive(Serialize)]
pub struct DiagnosticsRecord {
    pub connectivity: Option<usize>,
    pub chordality: Option<usize>,
    pub ratio_bound: Option<usize>,
    pub paths_within_bound: Option<bool>,
    pub dominator: Option<usize>,
    pub fallback: Option<&'static str>,
    pub width: Option<usize>,
}

impl From<&Diagnostics> for DiagnosticsRecord {
    fn from(d: &Diagnostics) -> Self {
        DiagnosticsRecord {
            connectivity: d.connectivity,
            chordality: d.chordality,
            ratio_bound: d.ratio_bound,
            paths_within_bound: d.paths_within_bound,
            dominator: d.dominator,
            fallback: d.fallback.map(method_name),
            width: d.width,
        }
    }
}

#[derive(Serialize)]
pub struct SolveRecord {
    pub instance: String,
    pub method: &'static str,
    pub seed: u64,
    pub k: Option<usize>,
    pub size: Option<usize>,
    pub optimality: &'static str,
    pub separator: Option<Vec<usize>>,
    pub recognizers: RecognizerRecord,
    pub diagnostics: DiagnosticsRecord,
    pub wall_time_ms: u128,
}

impl SolveRecord {
    pub fn new(
        instance: String,
        seed: u64,
        k: Option<usize>,
        result: &SeparatorResult,
        report: &ClassReport,
        wall_time_ms: u128,
    ) -> Self {
        SolveRecord {
            instance,
            method: method_name(result.method),
            seed,
            k,
            size: result.size(),
            optimality: optimality_name(result.optimality),
            separator: result
                .separator
                .as_ref()
                .map(|s| s.iter().copied().collect()),
            recognizers: report.into(),
            diagnostics: (&result.diagnostics).into(),
            wall_time_ms,
        }
    }
}

#[derive(Serialize)]
pub struct MapRecord {
    pub construction: &'static str,
    pub s: usize,
    pub t: usize,
    pub x_vertices: Vec<usize>,
    pub groups: Option<usize>,
    pub source_budget: Option<usize>,
    pub target_budget: Option<usize>,
    pub expected_connectivity: usize,
}

#[derive(Serialize)]
pub struct CheckRecord {
    pub status: &'static str,
    pub detail: String,
}

#[derive(Serialize)]
pub struct ReduceRecord {
    /// The reduced instance in canonical file format.
    pub instance: String,
    pub map: MapRecord,
    pub check: CheckRecord,
    pub seed: u64,
    pub wall_time_ms: u128,
}

#[derive(Serialize)]
pub struct PropertyRecord {
    pub name: &'static str,
    pub checked: usize,
    pub skipped: usize,
    pub violations: usize,
}

#[derive(Serialize)]
pub struct CounterexampleRecord {
    pub property: &'static str,
    pub seed: u64,
    pub description: String,
    /// The failing instance in canonical file format, ready to re-parse.
    pub instance: String,
}

#[derive(Serialize)]
pub struct SuiteRecord {
    pub seed: u64,
    pub instances: usize,
    pub max_n: usize,
    pub mutant: bool,
    pub properties: Vec<PropertyRecord>,
    pub all_passed: bool,
    pub counterexample: Option<CounterexampleRecord>,
    pub wall_time_ms: u128,
}

impl SuiteRecord {
    pub fn new(
        seed: u64,
        instances: usize,
        max_n: usize,
        mutant: bool,
        report: &SuiteReport,
        wall_time_ms: u128,
    ) -> Self {
        SuiteRecord {
            seed,
            instances,
            max_n,
            mutant,
            properties: report
                .outcomes
                .iter()
                .map(|o| PropertyRecord {
                    name: o.name,
                    checked: o.checked,
                    skipped: o.skipped,
                    violations: o.violations,
                })
                .collect(),
            all_passed: report.all_passed(),
            counterexample: report.first_counterexample().map(|ce| CounterexampleRecord {
                property: ce.property,
                seed: ce.seed,
                description: ce.description.clone(),
                instance: crate::format::serialize(&crate::format::from_suite_instance(
                    &ce.instance,
                )),
            }),
            wall_time_ms,
        }
    }
}

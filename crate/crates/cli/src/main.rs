use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use stcvs_cli::format::{self, ParsedInstance};
use stcvs_cli::record::{CheckRecord, MapRecord, ReduceRecord, SolveRecord, SuiteRecord};
use stcvs_core::connectivity::st_vertex_connectivity;
use stcvs_core::recognizers::{classify, find_induced_cycle_at_least, ClassReport};
use stcvs_core::reductions::{
    group_steiner_oracle, is_split, reduce_group_steiner, reduce_split_steiner,
    reduce_steiner_above_guarantee, steiner_oracle, GroupSteinerInstance, ReductionOutput,
    SteinerBudget, SteinerInstance,
};
use stcvs_core::solvers::{
    compute_tree_decomposition, cvs_approx_chordality, cvs_chordal, cvs_chordal_bipartite,
    cvs_oracle_with_cap, cvs_treewidth_dp, Optimality, SeparatorResult, DEFAULT_ORACLE_CAP,
};
use stcvs_core::suite::{run_suite_with_mutant, Mutant, SuiteConfig};
use stcvs_core::{Error, Graph};

/// Auto-selection (and the unforced dynamic program) refuse tree
/// decompositions wider than this.
const WIDTH_BOUND: usize = 6;

const EXIT_OK: i32 = 0;
/// An unresolved solve, a failed --check, or a suite violation.
const EXIT_FAILURE: i32 = 1;
/// A precondition refusal; --force overrides where noted.
const EXIT_REFUSED: i32 = 2;
const EXIT_PARSE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "stcvs",
    version,
    about = "Minimum connected (s,t)-vertex separators: solve, reduce, self-check"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a cvs instance file ('-' reads stdin)
    Solve {
        file: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Run the method even when its precondition is not established
        #[arg(long)]
        force: bool,
        /// Echoed into the output record
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Vertex-count cap for exhaustive search
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Reduce a steiner or gsteiner instance to a cvs instance
    Reduce {
        file: String,
        /// Cross-validate the reduction exhaustively (skipped over --cap)
        #[arg(long)]
        check: bool,
        /// Also write the reduced instance to this file
        #[arg(long)]
        output: Option<PathBuf>,
        /// Echoed into the output record
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Vertex-count cap for exhaustive search
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run the randomized property suite
    Suite {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 24)]
        instances: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Plant a known defect; the suite must catch it
        #[arg(long)]
        inject_mutant: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    Chordal,
    ChordalBipartite,
    Approx,
    TreewidthDp,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve { file, method, force, seed, cap, format } => {
            cmd_solve(&file, method, force, seed, cap, format)
        }
        Command::Reduce { file, check, output, seed, cap, format } => {
            cmd_reduce(&file, check, output.as_deref(), seed, cap, format)
        }
        Command::Suite { seed, instances, max_n, inject_mutant, format } => {
            cmd_suite(seed, instances, max_n, inject_mutant, format)
        }
    };
    std::process::exit(code);
}

fn load(file: &str) -> Result<ParsedInstance, i32> {
    let text = if file == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            eprintln!("cannot read stdin: {e}");
            return Err(EXIT_PARSE);
        }
        buf
    } else {
        match fs::read_to_string(file) {
            Ok(text) => text,
            Err(e) => {
                eprintln!("cannot read {file}: {e}");
                return Err(EXIT_PARSE);
            }
        }
    };
    format::parse_instance(&text).map_err(|e| {
        eprintln!("{file}: {e}");
        EXIT_PARSE
    })
}

fn print_json<T: serde::Serialize>(record: &T) {
    println!("{}", serde_json::to_string_pretty(record).expect("records serialize"));
}

fn join(ids: &[usize]) -> String {
    let words: Vec<String> = ids.iter().map(|v| v.to_string()).collect();
    words.join(" ")
}

fn cmd_solve(
    file: &str,
    method: MethodArg,
    force: bool,
    seed: u64,
    cap: usize,
    output_format: OutputFormat,
) -> i32 {
    let parsed = match load(file) {
        Ok(parsed) => parsed,
        Err(code) => return code,
    };
    let ParsedInstance::Cvs(graph) = parsed else {
        eprintln!("solve expects a cvs instance, got {}", parsed.kind());
        return EXIT_REFUSED;
    };
    let start = Instant::now();
    let report = classify(&graph);
    let result = match dispatch(&graph, &report, method, force, cap) {
        Ok(result) => result,
        Err(message) => {
            eprintln!("refused: {message}");
            return EXIT_REFUSED;
        }
    };
    let k = st_vertex_connectivity(&graph).ok();
    let record = SolveRecord::new(
        file.to_owned(),
        seed,
        k,
        &result,
        &report,
        start.elapsed().as_millis(),
    );
    match output_format {
        OutputFormat::Json => print_json(&record),
        OutputFormat::Text => {
            println!("method: {}", record.method);
            if let Some(k) = record.k {
                println!("k: {k}");
            }
            match &record.separator {
                Some(sep) => {
                    println!("size: {}", sep.len());
                    println!("separator: {}", join(sep));
                }
                None => println!("separator: none"),
            }
            println!("optimality: {}", record.optimality);
        }
    }
    match result.optimality {
        Optimality::Exact | Optimality::UpperBound | Optimality::NoneExists => EXIT_OK,
        Optimality::NoneFound | Optimality::Unresolved => EXIT_FAILURE,
    }
}

fn dispatch(
    g: &Graph,
    report: &ClassReport,
    method: MethodArg,
    force: bool,
    cap: usize,
) -> Result<SeparatorResult, String> {
    let forceable = |r: stcvs_core::Result<SeparatorResult>| {
        r.map_err(|e| {
            if force {
                e.to_string()
            } else {
                format!("{e}; rerun with --force")
            }
        })
    };
    match method {
        MethodArg::Auto => auto_solve(g, report, cap),
        MethodArg::Oracle => {
            let cap = if force { g.n() } else { cap };
            cvs_oracle_with_cap(g, cap)
                .map_err(|e| format!("{e}; rerun with --force or a larger --cap"))
        }
        MethodArg::Chordal => forceable(cvs_chordal(g, force)),
        MethodArg::ChordalBipartite => forceable(cvs_chordal_bipartite(g, force)),
        MethodArg::Approx => {
            if !report.chordality.is_exact() && !force {
                return Err(format!(
                    "chordality is only bounded below by {} (hole search capped); \
                     rerun with --force to approximate against the bound",
                    report.chordality.value()
                ));
            }
            cvs_approx_chordality(g, report.chordality.value()).map_err(|e| e.to_string())
        }
        MethodArg::TreewidthDp => {
            let td = compute_tree_decomposition(g);
            if td.width() > WIDTH_BOUND && !force {
                return Err(format!(
                    "decomposition width {} exceeds {WIDTH_BOUND}; rerun with --force",
                    td.width()
                ));
            }
            cvs_treewidth_dp(g, &td).map_err(|e| e.to_string())
        }
    }
}

/// Preference order: exact class solvers, then the dynamic program on a
/// narrow decomposition, then exhaustion within the cap, then the
/// approximation when chordality was verified exactly.
fn auto_solve(g: &Graph, report: &ClassReport, cap: usize) -> Result<SeparatorResult, String> {
    let lift = |r: stcvs_core::Result<SeparatorResult>| r.map_err(|e| e.to_string());
    if report.chordal.is_chordal() {
        return lift(cvs_chordal(g, false));
    }
    if report.chordal_bipartite.is_chordal_bipartite() {
        return lift(cvs_chordal_bipartite(g, false));
    }
    let td = compute_tree_decomposition(g);
    if td.width() <= WIDTH_BOUND {
        return lift(cvs_treewidth_dp(g, &td));
    }
    if g.n() <= cap {
        return lift(cvs_oracle_with_cap(g, cap));
    }
    if report.chordality.is_exact() {
        return lift(cvs_approx_chordality(g, report.chordality.value()));
    }
    Err(format!(
        "no method applies: the graph is neither chordal nor chordal bipartite, \
         the decomposition width {} exceeds {WIDTH_BOUND}, {} vertices exceed the \
         oracle cap {cap}, and chordality was not verified; pick --method explicitly",
        td.width(),
        g.n()
    ))
}

type ReduceParts = (ReductionOutput, MapRecord, CheckRecord);

fn cmd_reduce(
    file: &str,
    check: bool,
    output: Option<&std::path::Path>,
    seed: u64,
    cap: usize,
    output_format: OutputFormat,
) -> i32 {
    let parsed = match load(file) {
        Ok(parsed) => parsed,
        Err(code) => return code,
    };
    let start = Instant::now();
    let reduced = match parsed {
        ParsedInstance::Cvs(_) => {
            eprintln!("reduce expects a steiner or gsteiner instance, got cvs");
            return EXIT_REFUSED;
        }
        ParsedInstance::GroupSteiner(inst) => reduce_group(&inst, check, cap),
        ParsedInstance::Steiner(inst) => reduce_steiner(&inst, check, cap),
    };
    let (out, map, check_record) = match reduced {
        Ok(parts) => parts,
        Err(message) => {
            eprintln!("refused: {message}");
            return EXIT_REFUSED;
        }
    };
    let failed = check_record.status == "failed";
    let record = ReduceRecord {
        instance: format::serialize(&ParsedInstance::Cvs(out.instance.clone())),
        map,
        check: check_record,
        seed,
        wall_time_ms: start.elapsed().as_millis(),
    };
    if let Some(path) = output {
        if let Err(e) = fs::write(path, &record.instance) {
            eprintln!("cannot write {}: {e}", path.display());
            return EXIT_FAILURE;
        }
    }
    match output_format {
        OutputFormat::Json => print_json(&record),
        OutputFormat::Text => {
            match output {
                Some(path) => println!("wrote {} ({} vertices)", path.display(), out.instance.n()),
                None => print!("{}", record.instance),
            }
            // The summary goes to stderr so piped stdout stays a valid
            // instance file.
            eprintln!("construction: {}", record.map.construction);
            eprintln!("terminals: s = {}, t = {}", record.map.s, record.map.t);
            if !record.map.x_vertices.is_empty() {
                eprintln!("gadget vertices: {}", join(&record.map.x_vertices));
            }
            match (record.map.source_budget, record.map.target_budget) {
                (Some(r), Some(b)) => eprintln!("budget: {r} -> {b}"),
                _ => eprintln!("budget: underived"),
            }
            eprintln!("expected connectivity: {}", record.map.expected_connectivity);
            eprintln!("check: {} — {}", record.check.status, record.check.detail);
        }
    }
    if failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

fn skipped(detail: &str) -> CheckRecord {
    CheckRecord { status: "skipped", detail: detail.into() }
}

fn failed_check(detail: String) -> CheckRecord {
    CheckRecord { status: "failed", detail }
}

/// Finds the source instance's optimum budget by exhaustion, so the emitted
/// map carries the tightest translated budget. `Ok(None)` means the budget
/// could not be derived (instance over the cap, or infeasible) and carries
/// the reason.
fn derive_budget<T>(
    n: usize,
    cap: usize,
    solve: impl FnOnce() -> stcvs_core::Result<T>,
) -> Result<(Option<T>, String), String> {
    if n > cap {
        return Ok((None, format!("the source instance has {n} vertices, over the cap {cap}")));
    }
    match solve() {
        Ok(solution) => Ok((Some(solution), String::new())),
        Err(Error::Infeasible) => Ok((None, "the source instance is infeasible".into())),
        Err(Error::CapExceeded { size, cap }) => {
            Ok((None, format!("the source instance has {size} vertices, over the cap {cap}")))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn reduce_group(inst: &GroupSteinerInstance, check: bool, cap: usize) -> Result<ReduceParts, String> {
    let (solution, note) = derive_budget(inst.graph.n(), cap, || group_steiner_oracle(inst))?;
    let source = solution.map(|sol| sol.edge_count());
    let budgeted =
        GroupSteinerInstance::new(inst.graph.clone(), inst.groups.clone(), source.unwrap_or(0))
            .map_err(|e| e.to_string())?;
    let out = reduce_group_steiner(&budgeted).map_err(|e| e.to_string())?;
    let map = MapRecord {
        construction: "group",
        s: out.map.s,
        t: out.map.t,
        x_vertices: out.map.x_vertices.clone(),
        groups: out.map.groups,
        source_budget: source,
        target_budget: source.map(|_| out.target_budget),
        expected_connectivity: out.map.expected_connectivity,
    };
    let check_record = if !check {
        skipped("not requested")
    } else if source.is_some() {
        check_group(&out, cap)
    } else {
        skipped(&note)
    };
    Ok((out, map, check_record))
}

/// The group construction promises connectivity equal to the group count
/// and an optimum between that count and the translated budget.
fn check_group(out: &ReductionOutput, cap: usize) -> CheckRecord {
    let g = &out.instance;
    let result = match cvs_oracle_with_cap(g, cap) {
        Ok(result) => result,
        Err(Error::CapExceeded { size, cap }) => {
            return skipped(&format!("the reduced instance has {size} vertices, over the cap {cap}"));
        }
        Err(e) => return failed_check(format!("oracle error: {e}")),
    };
    let expected = out.map.expected_connectivity;
    let k = st_vertex_connectivity(g).expect("reduced instances carry terminals");
    if k != expected {
        return failed_check(format!("connectivity {k} differs from the group count {expected}"));
    }
    let Some(size) = result.size() else {
        return failed_check("no connected separator although the source is feasible".into());
    };
    if size < expected || size > out.target_budget {
        return failed_check(format!(
            "optimum {size} outside [{expected}, {}]",
            out.target_budget
        ));
    }
    CheckRecord {
        status: "passed",
        detail: format!(
            "connectivity {k} equals the group count; optimum {size} within the translated budget {}",
            out.target_budget
        ),
    }
}

fn reduce_steiner(inst: &SteinerInstance, check: bool, cap: usize) -> Result<ReduceParts, String> {
    let split = is_split(&inst.graph);
    let (solution, note) = derive_budget(inst.graph.n(), cap, || steiner_oracle(inst))?;
    let (source, budget) = match &solution {
        Some(sol) if split => (Some(sol.tree_edges.len()), SteinerBudget::Edges(sol.tree_edges.len())),
        Some(sol) => (Some(sol.steiner_count()), SteinerBudget::SteinerVertices(sol.steiner_count())),
        None if split => (None, SteinerBudget::Edges(0)),
        None => (None, SteinerBudget::SteinerVertices(0)),
    };
    let budgeted = SteinerInstance::new(inst.graph.clone(), inst.terminals.clone(), budget)
        .map_err(|e| e.to_string())?;
    let out = if split {
        reduce_split_steiner(&budgeted)
    } else {
        reduce_steiner_above_guarantee(&budgeted)
    }
    .map_err(|e| e.to_string())?;
    let map = MapRecord {
        construction: if split { "split" } else { "above-guarantee" },
        s: out.map.s,
        t: out.map.t,
        x_vertices: out.map.x_vertices.clone(),
        groups: out.map.groups,
        source_budget: source,
        target_budget: source.map(|_| out.target_budget),
        expected_connectivity: out.map.expected_connectivity,
    };
    let check_record = if !check {
        skipped("not requested")
    } else if source.is_some() {
        check_steiner(&out, split, cap)
    } else {
        skipped(&note)
    };
    Ok((out, map, check_record))
}

/// Both Steiner constructions promise a tight translation: the reduced
/// optimum equals the translated budget exactly, and the split construction
/// additionally leaves no induced cycle of length six or more.
fn check_steiner(out: &ReductionOutput, split: bool, cap: usize) -> CheckRecord {
    let g = &out.instance;
    let result = match cvs_oracle_with_cap(g, cap) {
        Ok(result) => result,
        Err(Error::CapExceeded { size, cap }) => {
            return skipped(&format!("the reduced instance has {size} vertices, over the cap {cap}"));
        }
        Err(e) => return failed_check(format!("oracle error: {e}")),
    };
    let expected = out.map.expected_connectivity;
    let k = st_vertex_connectivity(g).expect("reduced instances carry terminals");
    if k != expected {
        return failed_check(format!("connectivity {k} differs from the expected {expected}"));
    }
    let Some(size) = result.size() else {
        return failed_check("no connected separator although the source is feasible".into());
    };
    if size != out.target_budget {
        return failed_check(format!(
            "optimum {size} differs from the translated budget {}",
            out.target_budget
        ));
    }
    let hole_note = if split {
        match find_induced_cycle_at_least(g, 6) {
            Ok(None) => "; no induced cycle of length six or more (chordality at most five)",
            Ok(Some(_)) => {
                return failed_check("an induced cycle of length six or more survived".into());
            }
            Err(_) => "; hole search skipped (over the cap)",
        }
    } else {
        ""
    };
    CheckRecord {
        status: "passed",
        detail: format!(
            "connectivity {k} as expected; optimum {size} equals the translated budget{hole_note}"
        ),
    }
}

fn cmd_suite(
    seed: u64,
    instances: usize,
    max_n: usize,
    inject_mutant: bool,
    output_format: OutputFormat,
) -> i32 {
    let config = SuiteConfig { seed, instances, max_n };
    let start = Instant::now();
    let mutant = inject_mutant.then_some(Mutant::OffByOneOptimum);
    let report = match run_suite_with_mutant(&config, mutant) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("refused: {e}");
            return EXIT_REFUSED;
        }
    };
    let record = SuiteRecord::new(
        seed,
        instances,
        max_n,
        inject_mutant,
        &report,
        start.elapsed().as_millis(),
    );
    match output_format {
        OutputFormat::Json => print_json(&record),
        OutputFormat::Text => {
            for p in &record.properties {
                println!(
                    "{}: {} checked, {} skipped, {} violations",
                    p.name, p.checked, p.skipped, p.violations
                );
            }
            if let Some(ce) = &record.counterexample {
                println!("counterexample ({}, seed {}): {}", ce.property, ce.seed, ce.description);
                print!("{}", ce.instance);
            }
            println!(
                "suite: {}",
                if record.all_passed { "all properties passed" } else { "FAILED" }
            );
        }
    }
    if record.all_passed {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

//! Command-line interface for spectral analysis of non-commuting graphs:
//! analyze one group, verify closed forms against recomputation, sweep a
//! construction across a parameter range, enumerate perfect-square
//! parameters, and list the closed-form catalog.
//!
//! Exit codes: 0 success (and all verifications passed), 1 verification
//! failures, 2 usage errors, 3 computation errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use ncspec::closed_forms::{catalog, default_tuples, normalize_family_id, Family};
use ncspec::groups::build::{
    dicyclic, dihedral, frobenius, hanaki_p, hanaki_v, modular_m2rs, quasidihedral,
    semidihedral_8n, u6n, v8n,
};
use ncspec::groups::{Group, GroupError};
use ncspec::integrality::{square_sequence, SquareKind};
use ncspec::report::{analyze_group, analyze_spec, Analysis};
use ncspec::spectra::ExactSpectrum;
use ncspec::verify::{
    fmt_flags, fmt_shape, full_suite, small_suite, verify_family, verify_frobenius_sweep,
    verify_small_group_matrix, verify_square_table, VerifyOutcome,
};

#[derive(Parser)]
#[command(
    name = "ncspec",
    version,
    about = "Exact and numeric spectral analysis of non-commuting graphs of finite groups",
    arg_required_else_help = true
)]
struct Cli {
    /// Emit JSON on stdout instead of text or CSV.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Write CSV to this path (analyze, sweep, squares).
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,

    /// Tolerance for numeric cross-checks and comparisons.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "EPS")]
    tol: f64,

    /// Number of worker threads (defaults to all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum KindArg {
    K1,
    K2,
    K3,
    K4,
}

impl From<KindArg> for SquareKind {
    fn from(k: KindArg) -> SquareKind {
        match k {
            KindArg::K1 => SquareKind::K1,
            KindArg::K2 => SquareKind::K2,
            KindArg::K3 => SquareKind::K3,
            KindArg::K4 => SquareKind::K4,
        }
    }
}

/// Parameter ranges shared by `verify` and `sweep`. Each flag accepts a
/// single value `7`, an inclusive range `3..21`, or a filtered range
/// `3..21:odd`, `2..40:even`, `2..40:5` (step).
#[derive(clap::Args, Clone, Default)]
struct ParamRanges {
    /// Range for parameter m: `7`, `3..21`, `3..21:odd`, `2..40:even`, `2..40:5` (step)
    #[arg(long, value_name = "RANGE")]
    m: Option<String>,
    /// Range for parameter n (same grammar as --m)
    #[arg(long, value_name = "RANGE")]
    n: Option<String>,
    /// Range for parameter r (same grammar as --m)
    #[arg(long, value_name = "RANGE")]
    r: Option<String>,
    /// Range for parameter s (same grammar as --m)
    #[arg(long, value_name = "RANGE")]
    s: Option<String>,
    /// Range for parameter p (same grammar as --m)
    #[arg(long, value_name = "RANGE")]
    p: Option<String>,
    /// Range for parameter q (same grammar as --m)
    #[arg(long, value_name = "RANGE")]
    q: Option<String>,
    /// Range for parameter z (same grammar as --m)
    #[arg(long, value_name = "RANGE")]
    z: Option<String>,
}

impl ParamRanges {
    fn get(&self, name: &str) -> Option<&String> {
        match name {
            "m" => self.m.as_ref(),
            "n" => self.n.as_ref(),
            "r" => self.r.as_ref(),
            "s" => self.s.as_ref(),
            "p" => self.p.as_ref(),
            "q" => self.q.as_ref(),
            "z" => self.z.as_ref(),
            _ => None,
        }
    }

    fn given(&self) -> Vec<&'static str> {
        ["m", "n", "r", "s", "p", "q", "z"]
            .into_iter()
            .filter(|name| self.get(name).is_some())
            .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the non-commuting graph of one group.
    ///
    /// The group is described in a small grammar: family:parameter form
    /// (`D:2m=12`, `QD:2^4`, `M:r=5,s=2`, `Q:4n=16`, `U:6n=18`, `SD:8n=24`,
    /// `V:8n=16`, `F:p=7,q=3`, `HV:n=2`, `HP:n=1,p=3`, `Z:4`), canonical
    /// names (`D12`, `QD16`, `F(7,3)`, `S4`, `A5`, `SL23`, ...), and direct
    /// products (`A4xZ2`, `prod(D8,Z:3)`).
    Analyze {
        /// Group description.
        spec: String,
        /// Include the edge list and vertex labels in JSON output.
        #[arg(long)]
        edges: bool,
    },

    /// Recompute closed-form claims from scratch and check them.
    ///
    /// Targets: a family identifier from `families` (with parameter ranges,
    /// or its default tuples), `matrix` (the seventeen-group classification
    /// matrix; alias `com`), `table1` (the perfect-square hit table; alias
    /// `squares`; honors --kind/--bound), `frobenius` (the two-prime sweep;
    /// honors --bound as the order cap), or `all`.
    Verify {
        /// What to verify.
        target: String,
        #[command(flatten)]
        ranges: ParamRanges,
        /// Square expression for the hit-table target.
        #[arg(long, value_enum, value_name = "KIND", ignore_case = true)]
        kind: Option<KindArg>,
        /// Parameter bound for the hit table, or order cap for the sweep.
        #[arg(long, value_name = "N")]
        bound: Option<u64>,
        /// Reduced battery (smaller sweep caps), sized for about a minute.
        #[arg(long)]
        small: bool,
    },

    /// Tabulate energies across a parameter range of one construction.
    ///
    /// Tokens and their parameters: D --m (dihedral of order 2m), QD --n
    /// (quasidihedral of order 2^n), M --r --s (modular maximal-cyclic),
    /// Q --n (dicyclic of order 4n), U --n (order 6n), SD --n (order 8n),
    /// V --n (order 8n), F --p --q (two-prime Frobenius), HV --n,
    /// HP --n --p (extraspecial-quotient constructions).
    Sweep {
        /// Construction token (D, QD, M, Q, U, SD, V, F, HV, HP).
        token: String,
        #[command(flatten)]
        ranges: ParamRanges,
    },

    /// List parameters where a perfect-square criterion holds.
    Squares {
        /// Square expression to test.
        #[arg(long, value_enum, value_name = "KIND", ignore_case = true)]
        kind: KindArg,
        /// Inclusive parameter bound.
        #[arg(long, value_name = "N")]
        bound: u64,
    },

    /// List the closed-form family catalog.
    Families,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return usage("--tol must be a positive finite number");
    }
    if let Some(t) = cli.threads {
        if t == 0 {
            return usage("--threads must be at least 1");
        }
        // Ignore the error if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }

    match &cli.command {
        Command::Analyze { spec, edges } => run_analyze(&cli, spec, *edges),
        Command::Verify { target, ranges, kind, bound, small } => {
            run_verify(&cli, target, ranges, *kind, *bound, *small)
        }
        Command::Sweep { token, ranges } => run_sweep(&cli, token, ranges),
        Command::Squares { kind, bound } => run_squares(&cli, *kind, *bound),
        Command::Families => run_families(&cli),
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn computation(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(3)
}

/// Writes to stdout, exiting quietly when the reader has gone away
/// (a closed pipe is not an error for a well-behaved filter).
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn emitln(text: &str) {
    emit(text);
    emit("\n");
}

// ---------------------------------------------------------------------------
// Range parsing.
// ---------------------------------------------------------------------------

/// Parses `7`, `3..21`, `3..21:odd`, `2..40:even`, or `2..40:5` (step).
fn parse_range(text: &str) -> Result<Vec<u64>, String> {
    let (core, filter) = match text.split_once(':') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (text.trim(), None),
    };
    let (lo, values): (u64, Vec<u64>) = if let Some((lo_s, hi_s)) = core.split_once("..") {
        let lo: u64 =
            lo_s.trim().parse().map_err(|_| format!("bad range start {:?}", lo_s.trim()))?;
        let hi: u64 =
            hi_s.trim().parse().map_err(|_| format!("bad range end {:?}", hi_s.trim()))?;
        if hi < lo {
            return Err(format!("empty range {core:?}"));
        }
        (lo, (lo..=hi).collect())
    } else {
        let v: u64 = core.parse().map_err(|_| format!("bad value {core:?}"))?;
        (v, vec![v])
    };
    let filtered = match filter {
        None => values,
        Some("odd") => values.into_iter().filter(|v| v % 2 == 1).collect(),
        Some("even") => values.into_iter().filter(|v| v % 2 == 0).collect(),
        Some(step) => {
            let k: u64 = step
                .parse()
                .map_err(|_| format!("range filter must be odd, even, or a step, got {step:?}"))?;
            if k == 0 {
                return Err("range step must be at least 1".to_string());
            }
            values.into_iter().filter(|v| (v - lo) % k == 0).collect()
        }
    };
    if filtered.is_empty() {
        return Err(format!("range {text:?} selects no values"));
    }
    Ok(filtered)
}

/// Cartesian product of per-parameter ranges, in parameter order.
fn cartesian(ranges: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut acc: Vec<Vec<u64>> = vec![Vec::new()];
    for range in ranges {
        let mut next = Vec::with_capacity(acc.len() * range.len());
        for prefix in &acc {
            for &v in range {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        acc = next;
    }
    acc
}

/// Resolves the tuples for a family from CLI ranges: all of the family's
/// parameters when any is given, the default tuples otherwise.
fn family_tuples(
    id: &str,
    names: &[&str],
    ranges: &ParamRanges,
) -> Result<(Vec<Family>, usize), String> {
    let given = ranges.given();
    for flag in &given {
        if !names.contains(flag) {
            return Err(format!(
                "family {id} has parameters {names:?}; --{flag} does not apply"
            ));
        }
    }
    if given.is_empty() {
        let tuples = default_tuples(id).ok_or_else(|| format!("unknown family {id:?}"))?;
        return Ok((tuples, 0));
    }
    let mut parsed = Vec::new();
    for name in names {
        let text = ranges
            .get(name)
            .ok_or_else(|| format!("family {id} needs --{name} (parameters {names:?})"))?;
        parsed.push(parse_range(text)?);
    }
    let mut tuples = Vec::new();
    let mut skipped = 0usize;
    for vals in cartesian(&parsed) {
        let fam = Family::from_params(id, &vals)
            .ok_or_else(|| format!("family {id} rejected parameters {vals:?}"))?;
        match fam.validated() {
            Ok(_) => tuples.push(fam),
            Err(_) => skipped += 1,
        }
    }
    if tuples.is_empty() {
        return Err(format!("no parameter tuple in the given ranges is valid for {id}"));
    }
    Ok((tuples, skipped))
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn spectrum_text(exact: Option<&ExactSpectrum>, numeric: &[(f64, usize)]) -> String {
    match exact {
        Some(spec) => {
            let parts: Vec<String> =
                spec.entries().iter().map(|(v, m)| format!("({v})^{m}")).collect();
            parts.join(", ")
        }
        None => {
            let parts: Vec<String> =
                numeric.iter().map(|(v, m)| format!("({v:.9})^{m}")).collect();
            format!("{} (numeric)", parts.join(", "))
        }
    }
}

fn energy_text(v: &ncspec::energies::EnergyValue) -> String {
    match &v.exact {
        Some(exact) => format!("{} ≈ {:.9}", exact, v.value),
        None => format!("≈ {:.9} (numeric)", v.value),
    }
}

fn render_analysis(analysis: &Analysis) -> String {
    let rep = &analysis.report;
    let mut out = String::new();
    out.push_str(&format!(
        "group: {} (order {}, center size {})\n",
        analysis.group_name, analysis.group_order, analysis.center_size
    ));
    let shape_note = match &analysis.shape {
        Some(shape) => format!(", complete multipartite {}", fmt_shape(shape)),
        None => ", not complete multipartite".to_string(),
    };
    out.push_str(&format!(
        "graph: {} vertices, {} edges{}\n",
        analysis.n_vertices(),
        analysis.n_edges(),
        shape_note
    ));
    out.push_str(&format!(
        "adjacency spectrum: {}\n",
        spectrum_text(analysis.exact.adjacency.as_ref(), &analysis.numeric.adjacency.grouped())
    ));
    out.push_str(&format!(
        "laplacian spectrum: {}\n",
        spectrum_text(analysis.exact.laplacian.as_ref(), &analysis.numeric.laplacian.grouped())
    ));
    out.push_str(&format!(
        "signless laplacian spectrum: {}\n",
        spectrum_text(analysis.exact.signless.as_ref(), &analysis.numeric.signless.grouped())
    ));
    out.push_str(&format!("E   = {}\n", energy_text(&rep.e)));
    out.push_str(&format!("LE  = {}\n", energy_text(&rep.le)));
    out.push_str(&format!("LE+ = {}\n", energy_text(&rep.le_plus)));
    out.push_str(&format!(
        "flags: [{}]; ordering: {}; Q-integral: {}\n",
        fmt_flags(&rep.flags),
        rep.ordering,
        match rep.q_integral {
            Some(true) => "yes",
            Some(false) => "no",
            None => "undecided",
        }
    ));
    out
}

fn run_analyze(cli: &Cli, spec: &str, edges: bool) -> ExitCode {
    let analysis = match analyze_spec(spec, cli.tol) {
        Ok(a) => a,
        Err(e) => return computation(&e.to_string()),
    };
    if cli.json {
        emitln(&serde_json::to_string_pretty(&analysis.to_json(edges)).expect("JSON serialization"));
    } else if let Some(path) = &cli.csv {
        let header = ncspec::report::EnergyReport::csv_header();
        let record = analysis.report.csv_record();
        if let Err(e) = write_csv(path, header, std::iter::once(record)) {
            return computation(&e);
        }
    } else {
        emit(&render_analysis(&analysis));
    }
    ExitCode::SUCCESS
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn run_verify(
    cli: &Cli,
    target: &str,
    ranges: &ParamRanges,
    kind: Option<KindArg>,
    bound: Option<u64>,
    small: bool,
) -> ExitCode {
    if cli.csv.is_some() {
        return usage("verify has no CSV form; use --json or text output");
    }
    let key: String =
        target.chars().filter(|c| c.is_ascii_alphanumeric()).map(|c| c.to_ascii_lowercase()).collect();
    let is_family = !matches!(
        key.as_str(),
        "all" | "com" | "matrix" | "table1" | "squares" | "frobenius" | "pq"
    );
    if !is_family && !ranges.given().is_empty() {
        return usage("parameter ranges apply only to family targets");
    }
    if is_family && (kind.is_some() || bound.is_some()) {
        return usage("--kind and --bound apply only to the table1 and frobenius targets");
    }
    let outcomes: Vec<VerifyOutcome> = match key.as_str() {
        "all" => {
            if small {
                small_suite(cli.tol)
            } else {
                full_suite(cli.tol)
            }
        }
        "com" | "matrix" => vec![verify_small_group_matrix(cli.tol)],
        "table1" | "squares" => {
            vec![verify_square_table(kind.map(SquareKind::from), bound)]
        }
        "frobenius" | "pq" => {
            let cap = bound.unwrap_or(500);
            let jacobi = if small { 100 } else { 200 };
            vec![verify_frobenius_sweep(cap, jacobi.min(cap), cli.tol)]
        }
        _ => {
            let Some(id) = normalize_family_id(target) else {
                return usage(&format!(
                    "unknown verify target {target:?}; expected a family id, matrix, table1, \
                     frobenius, or all"
                ));
            };
            let names = Family::param_names(id).expect("normalized id has parameters");
            match family_tuples(id, names, ranges) {
                Ok((tuples, skipped)) => {
                    if skipped > 0 {
                        eprintln!(
                            "note: skipped {skipped} parameter tuple(s) outside the family's range"
                        );
                    }
                    verify_family(&tuples, cli.tol)
                }
                Err(e) => return usage(&e),
            }
        }
    };

    let all_pass = outcomes.iter().all(VerifyOutcome::all_pass);
    if cli.json {
        let value = json!({
            "all_pass": all_pass,
            "outcomes": outcomes.iter().map(VerifyOutcome::to_json).collect::<Vec<Value>>(),
        });
        emitln(&serde_json::to_string_pretty(&value).expect("JSON serialization"));
    } else {
        for outcome in &outcomes {
            emit(&outcome.render_text());
        }
        let checks: usize = outcomes.iter().map(|o| o.checks.len()).sum();
        let passed: usize = outcomes.iter().map(VerifyOutcome::passed).sum();
        emitln(&format!(
            "summary: {passed}/{checks} checks passed across {} subject(s) — {}",
            outcomes.len(),
            if all_pass { "PASS" } else { "FAIL" }
        ));
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

type TupleBuilder = fn(&[u64]) -> Result<Group, GroupError>;

fn sweep_construction(token: &str) -> Option<(&'static [&'static str], TupleBuilder)> {
    let t = token.to_ascii_uppercase();
    Some(match t.as_str() {
        "D" => (&["m"][..], |v| dihedral(v[0] as usize)),
        "QD" => (&["n"][..], |v| {
            let n = u32::try_from(v[0]).map_err(|_| GroupError::Parse("n too large".into()))?;
            quasidihedral(n)
        }),
        "M" => (&["r", "s"][..], |v| modular_m2rs(v[0] as usize, v[1] as usize)),
        "Q" => (&["n"][..], |v| dicyclic(v[0] as usize)),
        "U" => (&["n"][..], |v| u6n(v[0] as usize)),
        "SD" => (&["n"][..], |v| semidihedral_8n(v[0] as usize)),
        "V" => (&["n"][..], |v| v8n(v[0] as usize)),
        "F" => (&["p", "q"][..], |v| frobenius(v[0] as usize, v[1] as usize)),
        "HV" => (&["n"][..], |v| {
            let n = u32::try_from(v[0]).map_err(|_| GroupError::Parse("n too large".into()))?;
            hanaki_v(n)
        }),
        "HP" => (&["n", "p"][..], |v| {
            let n = u32::try_from(v[0]).map_err(|_| GroupError::Parse("n too large".into()))?;
            hanaki_p(n, v[1])
        }),
        _ => return None,
    })
}

const SWEEP_HEADER: [&str; 11] = [
    "param",
    "n_vertices",
    "n_edges",
    "E",
    "LEplus",
    "LE",
    "hypo",
    "hyper",
    "Lhyper",
    "Qhyper",
    "Qintegral",
];

fn sweep_record(param: &str, analysis: &Analysis) -> Vec<String> {
    let rep = &analysis.report;
    vec![
        param.to_string(),
        analysis.n_vertices().to_string(),
        analysis.n_edges().to_string(),
        format!("{:.12}", rep.e.value),
        format!("{:.12}", rep.le_plus.value),
        format!("{:.12}", rep.le.value),
        rep.flags.hypoenergetic.to_string(),
        rep.flags.hyperenergetic.to_string(),
        rep.flags.l_hyperenergetic.to_string(),
        rep.flags.q_hyperenergetic.to_string(),
        match rep.q_integral {
            Some(b) => b.to_string(),
            None => String::new(),
        },
    ]
}

fn run_sweep(cli: &Cli, token: &str, ranges: &ParamRanges) -> ExitCode {
    let Some((names, builder)) = sweep_construction(token) else {
        return usage(&format!(
            "unknown construction token {token:?}; expected one of D, QD, M, Q, U, SD, V, F, HV, HP"
        ));
    };
    for flag in ranges.given() {
        if !names.contains(&flag) {
            return usage(&format!(
                "construction {token} takes {names:?}; --{flag} does not apply"
            ));
        }
    }
    let mut parsed = Vec::new();
    for name in names {
        let Some(text) = ranges.get(name) else {
            return usage(&format!("construction {token} needs --{name}"));
        };
        match parse_range(text) {
            Ok(vals) => parsed.push(vals),
            Err(e) => return usage(&e),
        }
    }
    let tuples = cartesian(&parsed);

    let results: Vec<(String, Result<Analysis, String>)> = tuples
        .par_iter()
        .map(|vals| {
            let param =
                vals.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
            let analysis = builder(vals)
                .map_err(|e| e.to_string())
                .and_then(|g| analyze_group(&g, cli.tol).map_err(|e| e.to_string()));
            (param, analysis)
        })
        .collect();

    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for (param, result) in &results {
        match result {
            Ok(analysis) => rows.push((param.clone(), analysis)),
            Err(e) => notes.push(format!("{param}: {e}")),
        }
    }
    for note in &notes {
        eprintln!("note: skipped {note}");
    }
    if rows.is_empty() {
        return computation("no tuple in the given ranges produced a graph");
    }

    if cli.json {
        let value: Vec<Value> = rows
            .iter()
            .map(|(param, analysis)| {
                let mut v = analysis.report.to_json();
                v["param"] = json!(param);
                v
            })
            .collect();
        emitln(&serde_json::to_string_pretty(&Value::Array(value)).expect("JSON serialization"));
        return ExitCode::SUCCESS;
    }

    let records = rows.iter().map(|(param, analysis)| sweep_record(param, analysis));
    let result = match &cli.csv {
        Some(path) => write_csv(path, &SWEEP_HEADER, records),
        None => stream_csv(&SWEEP_HEADER, records),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => computation(&e),
    }
}

// ---------------------------------------------------------------------------
// squares
// ---------------------------------------------------------------------------

fn run_squares(cli: &Cli, kind: KindArg, bound: u64) -> ExitCode {
    let kind = SquareKind::from(kind);
    let effective = bound.min(kind.max_bound());
    if effective < bound {
        eprintln!(
            "note: bound clamped to {effective} to keep {} within integer range",
            kind.id()
        );
    }
    let hits = square_sequence(kind, effective);

    if cli.json {
        let value: Vec<Value> = hits
            .iter()
            .map(|(n, root)| {
                json!({
                    "n": n,
                    "value": kind.eval(*n).to_string(),
                    "root": root.to_string(),
                })
            })
            .collect();
        emitln(
            &serde_json::to_string_pretty(&json!({
                "kind": kind.id(),
                "expression": kind.expression(),
                "bound": effective,
                "hits": value,
            }))
            .expect("JSON serialization"),
        );
        return ExitCode::SUCCESS;
    }

    let header = ["n", "value", "root"];
    let records =
        hits.iter().map(|(n, root)| vec![n.to_string(), kind.eval(*n).to_string(), root.to_string()]);
    let result = match &cli.csv {
        Some(path) => write_csv(path, &header, records),
        None => stream_csv(&header, records),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => computation(&e),
    }
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

fn run_families(cli: &Cli) -> ExitCode {
    if cli.csv.is_some() {
        return usage("families has no CSV form; use --json or text output");
    }
    let entries = catalog();
    if cli.json {
        let value: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "groups": e.groups,
                    "parameters": e.parameters,
                    "example": e.example.to_string(),
                })
            })
            .collect();
        emitln(&serde_json::to_string_pretty(&Value::Array(value)).expect("JSON serialization"));
    } else {
        for e in entries {
            emitln(&format!("{:<18} {}", e.id, e.groups));
            emitln(&format!("{:<18}   parameters: {}; e.g. {}", "", e.parameters, e.example));
        }
    }
    ExitCode::SUCCESS
}

// ---------------------------------------------------------------------------
// CSV plumbing.
// ---------------------------------------------------------------------------

enum CsvFailure {
    ReaderGone,
    Other(String),
}

fn csv_failure(e: &csv::Error) -> CsvFailure {
    match e.kind() {
        csv::ErrorKind::Io(io) if io.kind() == std::io::ErrorKind::BrokenPipe => {
            CsvFailure::ReaderGone
        }
        _ => CsvFailure::Other(e.to_string()),
    }
}

fn write_records<W: std::io::Write>(
    mut writer: csv::Writer<W>,
    header: &[&str],
    records: impl Iterator<Item = Vec<String>>,
) -> Result<(), String> {
    let mut push = |record: &[String]| -> Result<bool, String> {
        match writer.write_record(record) {
            Ok(()) => Ok(true),
            Err(e) => match csv_failure(&e) {
                CsvFailure::ReaderGone => Ok(false),
                CsvFailure::Other(msg) => Err(msg),
            },
        }
    };
    let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    if !push(&header)? {
        return Ok(());
    }
    for record in records {
        if !push(&record)? {
            return Ok(());
        }
    }
    match writer.flush() {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.to_string()),
    }
}

fn write_csv(
    path: &std::path::Path,
    header: &[&str],
    records: impl Iterator<Item = Vec<String>>,
) -> Result<(), String> {
    let writer = csv::Writer::from_path(path).map_err(|e| e.to_string())?;
    write_records(writer, header, records)
}

fn stream_csv(
    header: &[&str],
    records: impl Iterator<Item = Vec<String>>,
) -> Result<(), String> {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let writer = csv::Writer::from_writer(&mut lock);
    write_records(writer, header, records)?;
    match lock.flush() {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.to_string()),
    }
}

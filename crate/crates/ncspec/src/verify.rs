//! Verification engine: recomputes every closed-form claim from scratch
//! (group table → graph → exact and numeric spectra → energies) and checks
//! the results against the formulas in [`crate::closed_forms`], against a
//! classification matrix for seventeen named small groups, against pinned
//! perfect-square sequences, and across a full sweep of the two-prime
//! Frobenius family.
//!
//! Every claim is recomputed by at least two independent routes before a
//! check passes. Checks marked `adjudicated` carry a pinned reference value
//! that is reproduced from its own stated data but disagrees with the
//! recomputed truth; such checks pass with both numbers in the detail text.

use serde_json::{json, Value};

use crate::closed_forms::{default_tuples, ClosedForm, Family, FAMILY_IDS};
use crate::energies::{
    classify, energy_ordering, graph_energy, laplacian_energy, signless_laplacian_energy,
    EnergyValue, Flags, SpectrumData,
};
use crate::groups::build::{
    alternating4, alternating5, cyclic, dicyclic, dihedral, frobenius, modular16, modular_m2rs,
    pauli16, sg16_3, sl23, symmetric4,
};
use crate::groups::{Group, GroupError};
use crate::integrality::{is_perfect_square, square_sequence, SquareKind};
use crate::ncgraph::noncommuting_graph;
use crate::poly::charpoly_int;
use crate::report::{analyze_group, Analysis};
use crate::spectra::{
    a_shape_poly, eigenvalues_sym, laplacian_spectrum_clique_complement, matrix_f64, matrix_i64,
    q_shape_poly, spectra_agree, trace_identity_ok, ExactSpectrum, MatrixKind,
    DEFAULT_JACOBI_TOL,
};
use crate::surd::{rat_frac, rat_int, Surd, SurdSum};

use rayon::prelude::*;

/// One verified claim: a short name, the outcome, and the evidence.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// Set when a pinned reference value disagrees with the recomputed
    /// truth; the check passes with both numbers recorded in `detail`.
    pub adjudicated: bool,
}

impl CheckResult {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), pass, detail: detail.into(), adjudicated: false }
    }

    fn adjudicated(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), pass, detail: detail.into(), adjudicated: true }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.pass,
            "adjudicated": self.adjudicated,
            "detail": self.detail,
        })
    }
}

/// All checks run against one subject (a family tuple, the small-group
/// matrix, a sweep, or a square-sequence table).
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub subject: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyOutcome {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subject": self.subject,
            "all_pass": self.all_pass(),
            "passed": self.passed(),
            "failed": self.failed(),
            "checks": self.checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
        })
    }

    /// Plain-text rendering: a header line plus one line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.all_pass() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "== {} — {} ({}/{} checks)\n",
            self.subject,
            verdict,
            self.passed(),
            self.checks.len()
        ));
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            let adj = if c.adjudicated { " [adjudicated]" } else { "" };
            out.push_str(&format!("  {}  {}{} — {}\n", mark, c.name, adj, c.detail));
        }
        out
    }
}

/// Renders a multipartite shape as `[p^a, ...]`.
pub fn fmt_shape(shape: &[(usize, usize)]) -> String {
    let parts: Vec<String> = shape.iter().map(|(p, a)| format!("{}^{}", p, a)).collect();
    format!("[{}]", parts.join(", "))
}

/// Renders an exact spectrum as `{(v)^m, ...}`.
pub fn fmt_spectrum(spec: &ExactSpectrum) -> String {
    let parts: Vec<String> =
        spec.entries().iter().map(|(s, m)| format!("({})^{}", s, m)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Renders the classification flags as a comma list or `none`.
pub fn fmt_flags(f: &Flags) -> String {
    let mut set = Vec::new();
    if f.hypoenergetic {
        set.push("hypo");
    }
    if f.hyperenergetic {
        set.push("hyper");
    }
    if f.l_hyperenergetic {
        set.push("L-hyper");
    }
    if f.q_hyperenergetic {
        set.push("Q-hyper");
    }
    if set.is_empty() {
        "none".to_string()
    } else {
        set.join(",")
    }
}

/// Exact energies recomputed from exact spectra, or an explanation of why a
/// route declined.
struct ExactEnergies {
    e: SurdSum,
    le: SurdSum,
    le_plus: SurdSum,
}

/// Recomputes the three energies of a complete multipartite graph from its
/// detected shape and clique decomposition, entirely in exact arithmetic.
fn exact_energies_from_graph(
    shape: &[(usize, usize)],
    cliques: &[usize],
    n: usize,
    m: usize,
) -> Option<(ExactEnergies, ExactSpectrum, ExactSpectrum, ExactSpectrum)> {
    let aspec = a_shape_poly(shape).exact_spectrum()?;
    let qspec = q_shape_poly(shape).exact_spectrum()?;
    let lspec = laplacian_spectrum_clique_complement(cliques);
    let e = graph_energy(SpectrumData::Exact(&aspec)).exact?;
    let le = laplacian_energy(SpectrumData::Exact(&lspec), n, m).exact?;
    let le_plus = signless_laplacian_energy(SpectrumData::Exact(&qspec), n, m).exact?;
    Some((ExactEnergies { e, le, le_plus }, aspec, lspec, qspec))
}

/// Runs the full battery of checks for one parameter tuple of one family:
/// the witness group is constructed, its graph measured, both spectra routes
/// recomputed, and every closed formula compared against them.
pub fn verify_family_tuple(form: &ClosedForm, tol: f64) -> VerifyOutcome {
    let subject = form.family().to_string();
    let mut checks = Vec::new();

    let group = match form.build_witness() {
        Ok(g) => g,
        Err(e) => {
            checks.push(CheckResult::new("witness-group", false, format!("construction failed: {e}")));
            return VerifyOutcome { subject, checks };
        }
    };
    let order_ok = group.order() as u64 == form.group_order();
    let center_ok = group.center().len() as u64 == form.center_size();
    checks.push(CheckResult::new(
        "witness-group",
        order_ok && center_ok,
        format!(
            "{}: order {} (expected {}), center {} (expected {})",
            group.name(),
            group.order(),
            form.group_order(),
            group.center().len(),
            form.center_size()
        ),
    ));

    let graph = match noncommuting_graph(&group) {
        Ok(g) => g,
        Err(e) => {
            checks.push(CheckResult::new("graph", false, format!("graph construction failed: {e}")));
            return VerifyOutcome { subject, checks };
        }
    };
    let n = graph.n();
    let m = graph.edge_count();
    checks.push(CheckResult::new(
        "graph-counts",
        n as u64 == form.n_vertices() && m as u64 == form.n_edges(),
        format!(
            "n = {} (expected {}), m = {} (expected {})",
            n,
            form.n_vertices(),
            m,
            form.n_edges()
        ),
    ));

    let expected_shape = form.expected_shape();
    let shape = match graph.multipartite_shape() {
        Some(s) => s,
        None => {
            checks.push(CheckResult::new(
                "multipartite-shape",
                false,
                "graph is not complete multipartite".to_string(),
            ));
            return VerifyOutcome { subject, checks };
        }
    };
    checks.push(CheckResult::new(
        "multipartite-shape",
        shape == expected_shape,
        format!("detected {} (expected {})", fmt_shape(&shape), fmt_shape(&expected_shape)),
    ));

    let cliques = match graph.complement_clique_decomposition() {
        Some(c) => c,
        None => {
            checks.push(CheckResult::new(
                "clique-decomposition",
                false,
                "complement is not a disjoint union of cliques".to_string(),
            ));
            return VerifyOutcome { subject, checks };
        }
    };

    let (energies, aspec, lspec, qspec) = match exact_energies_from_graph(&shape, &cliques, n, m)
    {
        Some(t) => t,
        None => {
            checks.push(CheckResult::new(
                "exact-route",
                false,
                "shape-polynomial route declined to produce exact spectra".to_string(),
            ));
            return VerifyOutcome { subject, checks };
        }
    };

    // Closed Q-spectrum against the detected-shape route.
    let closed_q = form.closed_qspec();
    checks.push(CheckResult::new(
        "q-spectrum-closed",
        closed_q == qspec,
        if closed_q == qspec {
            format!("closed form matches shape route: {}", fmt_spectrum(&qspec))
        } else {
            format!(
                "closed {} != recomputed {}",
                fmt_spectrum(&closed_q),
                fmt_spectrum(&qspec)
            )
        },
    ));

    // Closed L/A spectra where the family states them explicitly.
    if let Some(closed_l) = form.closed_lspec() {
        checks.push(CheckResult::new(
            "l-spectrum-closed",
            closed_l == lspec,
            format!("closed form vs clique-complement route: {}", fmt_spectrum(&lspec)),
        ));
    }
    if let Some(closed_a) = form.closed_aspec() {
        checks.push(CheckResult::new(
            "a-spectrum-closed",
            closed_a == aspec,
            format!("closed form vs shape route: {}", fmt_spectrum(&aspec)),
        ));
    }

    // Trace identities for all three exact spectra.
    let traces_ok = trace_identity_ok(MatrixKind::Adjacency, &aspec, m)
        && trace_identity_ok(MatrixKind::Laplacian, &lspec, m)
        && trace_identity_ok(MatrixKind::SignlessLaplacian, &qspec, m)
        && aspec.total_multiplicity() == n
        && lspec.total_multiplicity() == n
        && qspec.total_multiplicity() == n;
    checks.push(CheckResult::new(
        "trace-identities",
        traces_ok,
        format!("tr(A) = 0, tr(L) = tr(Q) = 2m = {}, multiplicities sum to n = {}", 2 * m, n),
    ));

    // Numeric cross-check of all three spectra via the dense eigensolver.
    let numeric_ok = [
        (MatrixKind::Adjacency, &aspec),
        (MatrixKind::Laplacian, &lspec),
        (MatrixKind::SignlessLaplacian, &qspec),
    ]
    .iter()
    .try_fold(true, |acc, (kind, exact)| {
        let numeric = eigenvalues_sym(&matrix_f64(&graph, *kind), n, DEFAULT_JACOBI_TOL)
            .map_err(|e| e.to_string())?;
        let agree = spectra_agree(exact, &numeric, tol).map_err(|e| e.to_string())?;
        Ok::<bool, String>(acc && agree)
    });
    checks.push(match numeric_ok {
        Ok(ok) => CheckResult::new(
            "spectra-numeric",
            ok,
            format!("dense eigensolver agrees with exact spectra within {tol:e}"),
        ),
        Err(e) => CheckResult::new("spectra-numeric", false, format!("eigensolver failed: {e}")),
    });

    // Closed energies against full recomputation.
    let closed_en = form.closed_energies();
    let e_ok = closed_en.e == energies.e;
    let le_ok = closed_en.le == energies.le;
    let lep_ok = closed_en.le_plus == energies.le_plus;
    let energies_detail = if e_ok && le_ok && lep_ok {
        format!("E = {}, LE = {}, LE+ = {}", closed_en.e, closed_en.le, closed_en.le_plus)
    } else {
        format!(
            "closed (E = {}, LE = {}, LE+ = {}) vs recomputed (E = {}, LE = {}, LE+ = {})",
            closed_en.e, closed_en.le, closed_en.le_plus, energies.e, energies.le, energies.le_plus
        )
    };
    checks.push(CheckResult::new("energies-closed", e_ok && le_ok && lep_ok, energies_detail));

    // Classification flags and the E ≤ LE⁺ ≤ LE ordering.
    let ev = EnergyValue::from_exact(energies.e.clone());
    let lv = EnergyValue::from_exact(energies.le.clone());
    let qv = EnergyValue::from_exact(energies.le_plus.clone());
    let flags = classify(&ev, &lv, &qv, n, tol);
    if let Some(expected) = form.expected_flags() {
        checks.push(CheckResult::new(
            "flags",
            flags == expected,
            format!("computed [{}], expected [{}]", fmt_flags(&flags), fmt_flags(&expected)),
        ));
    }
    let ordering = energy_ordering(&ev, &qv, &lv, tol);
    checks.push(CheckResult::new(
        "energy-ordering",
        ordering.is_nondecreasing() && ordering.exact,
        format!("{ordering}"),
    ));

    // Integrality criterion: the perfect-square predicate must coincide with
    // actual integrality of the exact Q-spectrum.
    if let Some((kind, param)) = form.q_integral_square_kind() {
        let value = kind.eval(param);
        let square = is_perfect_square(&value).ok().flatten();
        let integral = qspec.is_integral();
        checks.push(CheckResult::new(
            "square-criterion",
            square.is_some() == integral,
            format!(
                "{}({}) = {} is {}a perfect square; Q-spectrum is {}integral",
                kind.id(),
                param,
                value,
                if square.is_some() { "" } else { "not " },
                if integral { "" } else { "not " },
            ),
        ));
    }

    VerifyOutcome { subject, checks }
}

/// Verifies every tuple of one family; tuples that fail parameter
/// validation become single-check failing outcomes.
pub fn verify_family(tuples: &[Family], tol: f64) -> Vec<VerifyOutcome> {
    tuples
        .par_iter()
        .map(|fam| match fam.clone().validated() {
            Ok(form) => verify_family_tuple(&form, tol),
            Err(e) => VerifyOutcome {
                subject: fam.to_string(),
                checks: vec![CheckResult::new("parameter-range", false, e.to_string())],
            },
        })
        .collect()
}

/// Verifies one family at its default parameter tuples.
pub fn verify_family_default(id: &str, tol: f64) -> Option<Vec<VerifyOutcome>> {
    default_tuples(id).map(|tuples| verify_family(&tuples, tol))
}

// ---------------------------------------------------------------------------
// The seventeen-group classification matrix.
// ---------------------------------------------------------------------------

struct MatrixRow {
    label: &'static str,
    build: fn() -> Result<Group, GroupError>,
    q_integral: bool,
    hyper: bool,
    q_hyper: bool,
    l_hyper: bool,
    /// The pinned reference classifies this row's LE⁺ flag differently from
    /// the recomputed truth; the row passes against truth and an extra
    /// adjudicated check records both values.
    q_hyper_adjudicated: bool,
}

fn z2_x_d8() -> Result<Group, GroupError> {
    cyclic(2)?.direct_product(&dihedral(4)?)
}

fn z2_x_q8() -> Result<Group, GroupError> {
    cyclic(2)?.direct_product(&dicyclic(2)?)
}

fn z4_s_z4() -> Result<Group, GroupError> {
    modular_m2rs(4, 2)
}

fn suzuki2() -> Result<Group, GroupError> {
    frobenius(5, 4)
}

fn a4_x_z2() -> Result<Group, GroupError> {
    alternating4()?.direct_product(&cyclic(2)?)
}

fn dihedral7() -> Result<Group, GroupError> {
    dihedral(7)
}

const MATRIX_ROWS: &[MatrixRow] = &[
    MatrixRow { label: "D6", build: || dihedral(3), q_integral: false, hyper: false, q_hyper: false, l_hyper: true, q_hyper_adjudicated: false },
    MatrixRow { label: "D8", build: || dihedral(4), q_integral: true, hyper: false, q_hyper: false, l_hyper: false, q_hyper_adjudicated: false },
    MatrixRow { label: "Q8", build: || dicyclic(2), q_integral: true, hyper: false, q_hyper: false, l_hyper: false, q_hyper_adjudicated: false },
    MatrixRow { label: "D10", build: || dihedral(5), q_integral: false, hyper: false, q_hyper: true, l_hyper: true, q_hyper_adjudicated: false },
    MatrixRow { label: "D12", build: || dihedral(6), q_integral: false, hyper: false, q_hyper: true, l_hyper: true, q_hyper_adjudicated: false },
    MatrixRow { label: "Q12", build: || dicyclic(3), q_integral: false, hyper: false, q_hyper: true, l_hyper: true, q_hyper_adjudicated: false },
    MatrixRow { label: "Z2xD8", build: z2_x_d8, q_integral: true, hyper: false, q_hyper: false, l_hyper: false, q_hyper_adjudicated: false },
    MatrixRow { label: "Z2xQ8", build: z2_x_q8, q_integral: true, hyper: false, q_hyper: false, l_hyper: false, q_hyper_adjudicated: false },
    MatrixRow { label: "M16", build: modular16, q_integral: true, hyper: false, q_hyper: false, l_hyper: false, q_hyper_adjudicated: false },
    MatrixRow { label: "Z4sZ4", build: z4_s_z4, q_integral: true, hyper: false, q_hyper: false, l_hyper: false, q_hyper_adjudicated: false },
    MatrixRow { label: "Pauli16", build: pauli16, q_integral: true, hyper: false, q_hyper: false, l_hyper: false, q_hyper_adjudicated: false },
    MatrixRow { label: "SG16-3", build: sg16_3, q_integral: true, hyper: false, q_hyper: false, l_hyper: false, q_hyper_adjudicated: false },
    MatrixRow { label: "A4", build: alternating4, q_integral: false, hyper: false, q_hyper: false, l_hyper: true, q_hyper_adjudicated: true },
    MatrixRow { label: "A5", build: alternating5, q_integral: false, hyper: false, q_hyper: true, l_hyper: true, q_hyper_adjudicated: false },
    MatrixRow { label: "S4", build: symmetric4, q_integral: false, hyper: true, q_hyper: true, l_hyper: true, q_hyper_adjudicated: false },
    MatrixRow { label: "SL23", build: sl23, q_integral: false, hyper: false, q_hyper: true, l_hyper: true, q_hyper_adjudicated: false },
    MatrixRow { label: "Sz2", build: suzuki2, q_integral: false, hyper: false, q_hyper: false, l_hyper: true, q_hyper_adjudicated: false },
];

fn surd_sum(rational: crate::surd::Rat, coeff: i64, radicand: u64) -> SurdSum {
    SurdSum::rational(rational) + SurdSum::radical(rat_int(coeff), radicand)
}

fn exact_equals(value: &EnergyValue, expected: &SurdSum) -> bool {
    value.exact.as_ref() == Some(expected)
}

fn numeric_close(value: f64, expected: f64, tol: f64) -> bool {
    (value - expected).abs() <= tol
}

/// Golden-value checks for individual rows of the matrix, keyed by label.
fn golden_checks(label: &str, analysis: &Analysis, tol: f64) -> Vec<CheckResult> {
    let rep = &analysis.report;
    let mut checks = Vec::new();
    match label {
        "D6" => {
            let expected = surd_sum(rat_frac(9, 5), 1, 33);
            checks.push(CheckResult::new(
                "D6-LE+-exact",
                exact_equals(&rep.le_plus, &expected),
                format!("LE+ = {} ≈ {:.9}", expected, expected.to_f64()),
            ));
            let expected_le = SurdSum::rational(rat_frac(42, 5));
            checks.push(CheckResult::new(
                "D6-LE-exact",
                exact_equals(&rep.le, &expected_le),
                "LE = 42/5, just above the bound 2(n-1) = 8".to_string(),
            ));
        }
        "A4" => {
            let expected_lep = surd_sum(rat_frac(85, 11), 1, 145);
            let expected_le = SurdSum::rational(rat_frac(224, 11));
            let expected_e = surd_sum(rat_int(6), 2, 33);
            checks.push(CheckResult::new(
                "A4-energies-exact",
                exact_equals(&rep.le_plus, &expected_lep)
                    && exact_equals(&rep.le, &expected_le)
                    && exact_equals(&rep.e, &expected_e),
                format!(
                    "E = {}, LE = {}, LE+ = {} ≈ {:.9}",
                    expected_e,
                    expected_le,
                    expected_lep,
                    expected_lep.to_f64()
                ),
            ));
            checks.push(CheckResult::adjudicated(
                "A4-reference-LE+-flag",
                exact_equals(&rep.le_plus, &expected_lep) && !rep.flags.q_hyperenergetic,
                format!(
                    "pinned reference lists this group with LE+ > 2(n-1); recomputed \
                     LE+ = 85/11 + sqrt(145) ≈ {:.9} < 20, so the flag is off \
                     (17545 < 18225 decides the comparison exactly)",
                    expected_lep.to_f64()
                ),
            ));
        }
        "A5" => {
            let expected_le = SurdSum::rational(rat_frac(8580, 59));
            checks.push(CheckResult::new(
                "A5-LE-exact",
                exact_equals(&rep.le, &expected_le),
                format!("LE = 8580/59 ≈ {:.9} > 2(n-1) = 116", expected_le.to_f64()),
            ));
            checks.push(CheckResult::new(
                "A5-q-integrality",
                rep.q_integral == Some(false),
                "cubic factor of the Q-polynomial has no integer roots, so the \
                 spectrum is decided non-integral without closed roots"
                    .to_string(),
            ));
        }
        "S4" => {
            let expected_le = surd_sum(rat_frac(1072, 23), 4, 13);
            checks.push(CheckResult::new(
                "S4-LE-exact",
                exact_equals(&rep.le, &expected_le),
                format!("LE = {} ≈ {:.9}", expected_le, expected_le.to_f64()),
            ));
            checks.push(CheckResult::new(
                "S4-E-numeric",
                numeric_close(rep.e.value, 44.811_237_256_696_6, tol.max(1e-9)),
                format!("E ≈ {:.13} (44.8112372566966 expected)", rep.e.value),
            ));
            checks.push(CheckResult::new(
                "S4-LE+-numeric",
                numeric_close(rep.le_plus.value, 51.884_547_825_987_67, tol.max(1e-9)),
                format!("LE+ ≈ {:.13} (51.88454782598767 expected)", rep.le_plus.value),
            ));
            // The pinned reference value 4836/23 for LE⁺ equals the mean
            // absolute deviation sum of a sign-mixed reading of a stated
            // eigenvalue multiset that is not this graph's spectrum.
            let reference = ExactSpectrum::new(vec![
                (Surd::integer(0), 1),
                (Surd::integer(20), 4),
                (Surd::integer(21), 7),
                (Surd::integer(23), 7),
                (Surd::new(rat_int(-20), rat_int(-1), 6), 2),
                (Surd::new(rat_int(-20), rat_int(1), 6), 2),
            ]);
            let deviation = reference.abs_deviation_sum(&rat_frac(456, 23));
            let reproduced = deviation == SurdSum::rational(rat_frac(4836, 23));
            checks.push(CheckResult::adjudicated(
                "S4-reference-LE+",
                reproduced,
                format!(
                    "reference value 4836/23 ≈ {:.6} equals the deviation sum of the \
                     multiset {{0, 20^4, 21^7, 23^7, (-20±sqrt(6))^2}}, which is not the \
                     spectrum of this graph (its trace is 308, the graph needs 456); \
                     recomputed LE+ ≈ {:.9}",
                    4836.0 / 23.0,
                    rep.le_plus.value
                ),
            ));
        }
        "SL23" => {
            let expected = surd_sum(rat_frac(282, 11), 1, 420);
            checks.push(CheckResult::new(
                "SL23-LE+-exact",
                exact_equals(&rep.le_plus, &expected),
                format!("LE+ = {} ≈ {:.9} > 2(n-1) = 42", expected, expected.to_f64()),
            ));
        }
        "Sz2" => {
            let expected_le = SurdSum::rational(rat_frac(690, 19));
            let expected_e = surd_sum(rat_int(12), 8, 6);
            let expected_lep = surd_sum(rat_frac(297, 19), 1, 409);
            checks.push(CheckResult::new(
                "Sz2-energies-exact",
                exact_equals(&rep.le, &expected_le)
                    && exact_equals(&rep.e, &expected_e)
                    && exact_equals(&rep.le_plus, &expected_lep),
                format!(
                    "E = {}, LE = 690/19 (margin 6/19 above 36), LE+ = {} ≈ {:.9} < 36",
                    expected_e,
                    expected_lep,
                    expected_lep.to_f64()
                ),
            ));
        }
        _ => {}
    }
    checks
}

/// Verifies the classification matrix for the seventeen named groups whose
/// commuting structure is planar: integrality of the Q-spectrum and the
/// four energy flags, each recomputed from scratch, plus golden exact
/// values and two adjudicated reference rows.
pub fn verify_small_group_matrix(tol: f64) -> VerifyOutcome {
    let mut checks: Vec<CheckResult> = MATRIX_ROWS
        .par_iter()
        .map(|row| {
            let mut row_checks = Vec::new();
            let analysis = match (row.build)().map_err(|e| e.to_string()).and_then(|g| {
                analyze_group(&g, tol).map_err(|e| e.to_string())
            }) {
                Ok(a) => a,
                Err(e) => {
                    return vec![CheckResult::new(
                        row.label,
                        false,
                        format!("analysis failed: {e}"),
                    )]
                }
            };
            let rep = &analysis.report;
            let expected = Flags {
                hypoenergetic: false,
                hyperenergetic: row.hyper,
                l_hyperenergetic: row.l_hyper,
                q_hyperenergetic: row.q_hyper,
            };
            let flags_ok = rep.flags == expected;
            let integral_ok = rep.q_integral == Some(row.q_integral);
            let detail = format!(
                "n = {}, m = {}, E ≈ {:.6}, LE ≈ {:.6}, LE+ ≈ {:.6}, flags [{}], Q-integral {}",
                analysis.n_vertices(),
                analysis.n_edges(),
                rep.e.value,
                rep.le.value,
                rep.le_plus.value,
                fmt_flags(&rep.flags),
                match rep.q_integral {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "undecided",
                }
            );
            if row.q_hyper_adjudicated {
                row_checks.push(CheckResult::adjudicated(
                    row.label,
                    flags_ok && integral_ok,
                    detail,
                ));
            } else {
                row_checks.push(CheckResult::new(row.label, flags_ok && integral_ok, detail));
            }
            row_checks.extend(golden_checks(row.label, &analysis, tol));
            row_checks
        })
        .flatten()
        .collect();

    checks.extend(toroidal_extras(tol));

    VerifyOutcome { subject: "small-group-matrix".to_string(), checks }
}

/// Two additional rows: the dihedral group of order 14 (integral
/// Q-spectrum) and the direct product of the order-12 alternating group
/// with a 2-cycle, whose pinned reference spectrum fails a power-sum test.
fn toroidal_extras(tol: f64) -> Vec<CheckResult> {
    let mut checks = Vec::new();

    match dihedral7().map_err(|e| e.to_string()).and_then(|g| {
        analyze_group(&g, tol).map_err(|e| e.to_string())
    }) {
        Ok(analysis) => {
            let expected = ExactSpectrum::new(vec![
                (Surd::integer(4), 1),
                (Surd::integer(7), 5),
                (Surd::integer(11), 6),
                (Surd::integer(21), 1),
            ]);
            let spec_ok = analysis.exact.signless.as_ref() == Some(&expected);
            let rep = &analysis.report;
            let flags_ok = !rep.flags.hypoenergetic
                && !rep.flags.hyperenergetic
                && rep.flags.q_hyperenergetic
                && rep.flags.l_hyperenergetic;
            checks.push(CheckResult::new(
                "D14-q-integral",
                spec_ok && rep.q_integral == Some(true) && flags_ok,
                format!(
                    "Q-spectrum {} is integral (discriminant 289 = 17^2); flags [{}]",
                    fmt_spectrum(&expected),
                    fmt_flags(&rep.flags)
                ),
            ));
        }
        Err(e) => checks.push(CheckResult::new("D14-q-integral", false, e)),
    }

    match a4_x_z2().map_err(|e| e.to_string()).and_then(|g| {
        analyze_group(&g, tol).map_err(|e| e.to_string())
    }) {
        Ok(analysis) => {
            let expected = ExactSpectrum::new(vec![
                (Surd::integer(14), 3),
                (Surd::integer(16), 5),
                (Surd::integer(18), 12),
                (Surd::new(rat_int(23), rat_int(-1), 145), 1),
                (Surd::new(rat_int(23), rat_int(1), 145), 1),
            ]);
            let rep = &analysis.report;
            let spec_ok = analysis.exact.signless.as_ref() == Some(&expected);
            let expected_lep = surd_sum(rat_frac(266, 11), 2, 145);
            let flags_ok = !rep.flags.hypoenergetic
                && !rep.flags.hyperenergetic
                && rep.flags.q_hyperenergetic
                && rep.flags.l_hyperenergetic;
            checks.push(CheckResult::adjudicated(
                "A4xZ2-q-spectrum",
                spec_ok
                    && rep.q_integral == Some(false)
                    && exact_equals(&rep.le_plus, &expected_lep)
                    && flags_ok,
                format!(
                    "pinned reference spectrum {{18^12, 16^5, 14^3, 36, 10}} has second \
                     power sum 7152, but the degree sequence forces 7104; recomputed \
                     Q-spectrum {} is not integral, LE+ = {} ≈ {:.9}",
                    fmt_spectrum(&expected),
                    expected_lep,
                    expected_lep.to_f64()
                ),
            ));
        }
        Err(e) => checks.push(CheckResult::adjudicated("A4xZ2-q-spectrum", false, e)),
    }

    checks
}

// ---------------------------------------------------------------------------
// Sweep of the two-prime Frobenius family.
// ---------------------------------------------------------------------------

fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut k = p * p;
            while k <= n {
                sieve[k] = false;
                k += p;
            }
        }
        p += 1;
    }
    (2..=n as u64).filter(|&k| sieve[k as usize]).collect()
}

/// All `(p, q)` with both prime, `q` dividing `p − 1`, and `p·q ≤ max_pq`.
pub fn frobenius_pairs(max_pq: u64) -> Vec<(u64, u64)> {
    let primes = primes_up_to(max_pq / 2);
    let mut pairs = Vec::new();
    for &q in &primes {
        for &p in &primes {
            if p > q && (p - 1) % q == 0 && p * q <= max_pq {
                pairs.push((p, q));
            }
        }
    }
    pairs.sort();
    pairs
}

/// The numerator of the rational part of LE⁺ for the order-`pq` Frobenius
/// group, as a function of which side of the spectrum mean the eigenvalue
/// `pq − 2q + 1` falls on.
fn frobenius_le_plus(p: i64, q: i64) -> (SurdSum, SurdSum, i64) {
    let base = 2 * p.pow(3) * q - p * p * q * q + 2 * p * q * q - 6 * p * q - 4 * p.pow(3)
        + 6 * p * p
        + 2 * q
        - 1;
    let s = p * p - p * q * q - p + 2 * q - 1;
    let numerator = if s > 0 { base + 2 * (p - 1) * s } else { base };
    let printed = base - 4 * p * q * q;
    let d = (p * q * (p * q - 2) + 4 * (p - q) * (p * q - p - q + 1) + 1) as u64;
    let truth = SurdSum::rational(rat_frac(numerator, p * q - 1)) + SurdSum::radical(rat_int(1), d);
    let printed_value =
        SurdSum::rational(rat_frac(printed, p * q - 1)) + SurdSum::radical(rat_int(1), d);
    (truth, printed_value, s)
}

struct PairResult {
    pair: (u64, u64),
    closed_match: bool,
    spectrum_match: bool,
    printed_matches_truth: bool,
    below_mean_regime: bool,
    ordering_ok: bool,
    jacobi: Option<bool>,
    charpoly: Option<bool>,
    error: Option<String>,
}

fn sweep_pair(p: u64, q: u64, jacobi_cap: u64, tol: f64) -> PairResult {
    let mut result = PairResult {
        pair: (p, q),
        closed_match: false,
        spectrum_match: false,
        printed_matches_truth: false,
        below_mean_regime: false,
        ordering_ok: false,
        jacobi: None,
        charpoly: None,
        error: None,
    };
    let form = match (Family::FrobeniusPQ { p, q }).validated() {
        Ok(f) => f,
        Err(e) => {
            result.error = Some(e.to_string());
            return result;
        }
    };
    let group = match form.build_witness() {
        Ok(g) => g,
        Err(e) => {
            result.error = Some(e.to_string());
            return result;
        }
    };
    let graph = match noncommuting_graph(&group) {
        Ok(g) => g,
        Err(e) => {
            result.error = Some(e.to_string());
            return result;
        }
    };
    let n = graph.n();
    let m = graph.edge_count();
    let (shape, cliques) = match (graph.multipartite_shape(), graph.complement_clique_decomposition())
    {
        (Some(s), Some(c)) => (s, c),
        _ => {
            result.error = Some("graph is not complete multipartite".to_string());
            return result;
        }
    };
    if shape != form.expected_shape() || n as u64 != form.n_vertices() || m as u64 != form.n_edges()
    {
        result.error = Some(format!(
            "measured shape {} or counts (n={n}, m={m}) disagree with the closed form",
            fmt_shape(&shape)
        ));
        return result;
    }
    let (energies, _aspec, _lspec, qspec) = match exact_energies_from_graph(&shape, &cliques, n, m)
    {
        Some(t) => t,
        None => {
            result.error = Some("exact route declined".to_string());
            return result;
        }
    };
    let closed = form.closed_energies();
    result.closed_match =
        closed.e == energies.e && closed.le == energies.le && closed.le_plus == energies.le_plus;
    result.spectrum_match = form.closed_qspec() == qspec;

    let (truth, printed, s) = frobenius_le_plus(p as i64, q as i64);
    result.below_mean_regime = s < 0;
    result.printed_matches_truth = printed == energies.le_plus;
    if truth != energies.le_plus {
        result.error = Some(format!(
            "piecewise closed value {} disagrees with recomputed {}",
            truth, energies.le_plus
        ));
        return result;
    }

    let ev = EnergyValue::from_exact(energies.e);
    let lv = EnergyValue::from_exact(energies.le);
    let qv = EnergyValue::from_exact(energies.le_plus);
    let ordering = energy_ordering(&ev, &qv, &lv, tol);
    result.ordering_ok = ordering.is_nondecreasing() && ordering.exact;

    if p * q <= jacobi_cap {
        let numeric =
            eigenvalues_sym(&matrix_f64(&graph, MatrixKind::SignlessLaplacian), n, DEFAULT_JACOBI_TOL);
        result.jacobi = Some(match numeric {
            Ok(spec) => spectra_agree(&qspec, &spec, tol).unwrap_or(false),
            Err(_) => false,
        });
    }
    if n <= 40 {
        let direct = charpoly_int(&matrix_i64(&graph, MatrixKind::SignlessLaplacian));
        let from_shape = q_shape_poly(&shape).expand();
        result.charpoly = Some(direct == from_shape);
    }
    result
}

/// Sweeps every two-prime Frobenius group of order at most `max_pq`:
/// closed spectra and energies against full recomputation, the dense
/// eigensolver on orders up to `jacobi_cap`, direct characteristic
/// polynomials on graphs with at most 40 vertices, and an adjudicated
/// comparison against a printed variant of the LE⁺ numerator.
pub fn verify_frobenius_sweep(max_pq: u64, jacobi_cap: u64, tol: f64) -> VerifyOutcome {
    let pairs = frobenius_pairs(max_pq);
    let mut checks = Vec::new();

    if max_pq == 500 {
        checks.push(CheckResult::new(
            "pair-enumeration",
            pairs.len() == 79,
            format!("{} pairs with both primes, q | p-1, pq <= 500 (expected 79)", pairs.len()),
        ));
    } else {
        checks.push(CheckResult::new(
            "pair-enumeration",
            !pairs.is_empty(),
            format!("{} pairs with both primes, q | p-1, pq <= {max_pq}", pairs.len()),
        ));
    }

    let results: Vec<PairResult> =
        pairs.par_iter().map(|&(p, q)| sweep_pair(p, q, jacobi_cap, tol)).collect();

    let errors: Vec<String> = results
        .iter()
        .filter_map(|r| r.error.as_ref().map(|e| format!("({}, {}): {e}", r.pair.0, r.pair.1)))
        .collect();
    checks.push(CheckResult::new(
        "recomputation",
        errors.is_empty(),
        if errors.is_empty() {
            format!("all {} groups rebuilt; shapes, counts and exact routes agree", results.len())
        } else {
            errors.join("; ")
        },
    ));

    let closed_bad: Vec<&PairResult> = results.iter().filter(|r| !r.closed_match).collect();
    checks.push(CheckResult::new(
        "closed-energies",
        closed_bad.is_empty(),
        if closed_bad.is_empty() {
            format!("closed E, LE, LE+ match exact recomputation on {}/{} pairs", results.len(), results.len())
        } else {
            format!(
                "mismatch at {:?}",
                closed_bad.iter().map(|r| r.pair).collect::<Vec<_>>()
            )
        },
    ));

    let spec_bad: Vec<&PairResult> = results.iter().filter(|r| !r.spectrum_match).collect();
    checks.push(CheckResult::new(
        "closed-q-spectrum",
        spec_bad.is_empty(),
        if spec_bad.is_empty() {
            format!("closed Q-spectrum matches the shape route on {}/{} pairs", results.len(), results.len())
        } else {
            format!("mismatch at {:?}", spec_bad.iter().map(|r| r.pair).collect::<Vec<_>>())
        },
    ));

    let ordering_bad: Vec<&PairResult> = results.iter().filter(|r| !r.ordering_ok).collect();
    checks.push(CheckResult::new(
        "energy-ordering",
        ordering_bad.is_empty(),
        if ordering_bad.is_empty() {
            "E <= LE+ <= LE holds exactly on every pair".to_string()
        } else {
            format!("violated at {:?}", ordering_bad.iter().map(|r| r.pair).collect::<Vec<_>>())
        },
    ));

    let below: Vec<(u64, u64)> =
        results.iter().filter(|r| r.below_mean_regime).map(|r| r.pair).collect();
    let pinned_below: Vec<(u64, u64)> =
        [(3, 2), (7, 3), (11, 5), (23, 11), (29, 7), (43, 7)]
            .iter()
            .copied()
            .filter(|&(p, q)| p * q <= max_pq)
            .collect();
    let mut below_sorted = below.clone();
    below_sorted.sort();
    let mut pinned_sorted = pinned_below;
    pinned_sorted.sort();
    checks.push(CheckResult::new(
        "mean-regime-split",
        below_sorted == pinned_sorted,
        format!(
            "{} pairs keep the eigenvalue pq-2q+1 below the spectrum mean: {:?}; \
             the other {} need the corrected numerator",
            below_sorted.len(),
            below_sorted,
            results.len() - below_sorted.len()
        ),
    ));

    let printed_matches = results.iter().filter(|r| r.printed_matches_truth).count();
    let (truth_73, printed_73, _) = frobenius_le_plus(7, 3);
    let reproduction_ok = printed_73
        == SurdSum::rational(rat_frac(73, 5)) + SurdSum::radical(rat_int(4), 37)
        && truth_73 == SurdSum::rational(rat_frac(136, 5)) + SurdSum::radical(rat_int(4), 37);
    checks.push(CheckResult::adjudicated(
        "printed-numerator-variant",
        reproduction_ok && printed_matches == 0,
        format!(
            "a printed variant of the LE+ numerator (one monomial entering with the \
             opposite sign, no mean-side correction) matches the recomputed truth on \
             {printed_matches}/{} pairs; at (7, 3) it yields 292/20 + 4*sqrt(37) ≈ {:.6} \
             while the recomputed value is 136/5 + 4*sqrt(37) ≈ {:.6}",
            results.len(),
            printed_73.to_f64(),
            truth_73.to_f64()
        ),
    ));

    let jacobi_results: Vec<&PairResult> = results.iter().filter(|r| r.jacobi.is_some()).collect();
    let jacobi_bad: Vec<(u64, u64)> = jacobi_results
        .iter()
        .filter(|r| r.jacobi == Some(false))
        .map(|r| r.pair)
        .collect();
    checks.push(CheckResult::new(
        "q-spectrum-numeric",
        jacobi_bad.is_empty() && !jacobi_results.is_empty(),
        if jacobi_bad.is_empty() {
            format!(
                "dense eigensolver agrees with the closed Q-spectrum within {tol:e} on \
                 {} pairs of order <= {jacobi_cap}",
                jacobi_results.len()
            )
        } else {
            format!("disagreement at {jacobi_bad:?}")
        },
    ));

    let charpoly_results: Vec<&PairResult> =
        results.iter().filter(|r| r.charpoly.is_some()).collect();
    let charpoly_bad: Vec<(u64, u64)> = charpoly_results
        .iter()
        .filter(|r| r.charpoly == Some(false))
        .map(|r| r.pair)
        .collect();
    checks.push(CheckResult::new(
        "q-charpoly-direct",
        charpoly_bad.is_empty() && !charpoly_results.is_empty(),
        if charpoly_bad.is_empty() {
            format!(
                "integer characteristic polynomial of Q matches the shape polynomial \
                 on {} graphs with at most 40 vertices",
                charpoly_results.len()
            )
        } else {
            format!("disagreement at {charpoly_bad:?}")
        },
    ));

    VerifyOutcome { subject: format!("frobenius-sweep(pq<={max_pq})"), checks }
}

// ---------------------------------------------------------------------------
// Perfect-square sequences.
// ---------------------------------------------------------------------------

fn sequence_check(
    name: &str,
    kind: SquareKind,
    bound: u64,
    expected: &[(u64, u64)],
) -> CheckResult {
    let hits = square_sequence(kind, bound);
    let got: Vec<(u64, u64)> = hits
        .iter()
        .map(|(n, root)| (*n, root.to_string().parse::<u64>().unwrap_or(u64::MAX)))
        .collect();
    CheckResult::new(
        name,
        got == expected,
        format!("{}(n) square for n = {:?} with roots {:?}", kind.id(), got.iter().map(|(n, _)| *n).collect::<Vec<_>>(), got.iter().map(|(_, r)| *r).collect::<Vec<_>>()),
    )
}

/// The bound at which a kind's pinned hit list applies.
fn pinned_bound(kind: SquareKind) -> u64 {
    match kind {
        SquareKind::K1 => 10_000,
        SquareKind::K2 | SquareKind::K3 => 1_000,
        SquareKind::K4 => SquareKind::K4.max_bound().min(1_000),
    }
}

fn pinned_hits(kind: SquareKind) -> &'static [(u64, u64)] {
    match kind {
        SquareKind::K1 => {
            &[(1, 1), (2, 3), (7, 17), (36, 99), (205, 577), (1190, 3363), (6931, 19601)]
        }
        SquareKind::K2 => &[(2, 1), (4, 3), (14, 17), (72, 99), (410, 577)],
        SquareKind::K3 => &[(1, 3), (18, 99), (595, 3363)],
        SquareKind::K4 => &[(2, 1), (3, 3)],
    }
}

/// Verifies the perfect-square hit list of one expression (or all four) up
/// to `bound`: each reported root actually squares to the evaluated
/// expression, parameters are strictly increasing, the pinned prefix is
/// reproduced when the bound permits, and the first kind's hits satisfy
/// their three-term recurrence.
pub fn verify_square_table(kind: Option<SquareKind>, bound: Option<u64>) -> VerifyOutcome {
    let kinds: Vec<SquareKind> = match kind {
        Some(k) => vec![k],
        None => vec![SquareKind::K1, SquareKind::K2, SquareKind::K3, SquareKind::K4],
    };
    let mut checks = Vec::new();
    for k in kinds {
        let effective = bound.unwrap_or_else(|| pinned_bound(k)).min(k.max_bound());
        let hits = square_sequence(k, effective);

        let roots_ok = hits.iter().all(|(n, root)| root * root == k.eval(*n));
        let increasing = hits.windows(2).all(|w| w[0].0 < w[1].0);
        checks.push(CheckResult::new(
            format!("{}-roots", k.id()),
            roots_ok && increasing,
            format!(
                "{} hits up to {}; every root squares back to {}(n); parameters strictly increase",
                hits.len(),
                effective,
                k.id()
            ),
        ));

        let pinned: Vec<(u64, u64)> = pinned_hits(k)
            .iter()
            .copied()
            .filter(|(n, _)| *n <= effective)
            .collect();
        let got: Vec<(u64, u64)> = hits
            .iter()
            .map(|(n, root)| (*n, root.to_string().parse::<u64>().unwrap_or(u64::MAX)))
            .collect();
        let prefix_ok = if effective <= pinned_bound(k) {
            got == pinned
        } else {
            got.starts_with(&pinned)
        };
        checks.push(CheckResult::new(
            format!("{}-pinned-prefix", k.id()),
            prefix_ok,
            format!("hit list {:?} against the pinned prefix {:?}", got, pinned),
        ));

        if k == SquareKind::K1 && got.len() >= 3 {
            let rec_ok = got.windows(3).all(|w| w[2].0 == 6 * w[1].0 - w[0].0 - 4)
                && got.windows(3).all(|w| w[2].1 == 6 * w[1].1 - w[0].1);
            checks.push(CheckResult::new(
                "K1-recurrences",
                rec_ok,
                "n(k+1) = 6 n(k) - n(k-1) - 4 and r(k+1) = 6 r(k) - r(k-1)".to_string(),
            ));
        }
    }
    VerifyOutcome { subject: "square-table".to_string(), checks }
}

/// Verifies the perfect-square hit lists of all four quadratic/exponential
/// expressions, their square roots, and the three-term recurrence that
/// generates the first family's hits.
pub fn verify_square_sequences() -> VerifyOutcome {
    let mut checks = Vec::new();

    checks.push(sequence_check(
        "K1-hits",
        SquareKind::K1,
        10_000,
        &[(1, 1), (2, 3), (7, 17), (36, 99), (205, 577), (1190, 3363), (6931, 19601)],
    ));
    checks.push(sequence_check(
        "K2-hits",
        SquareKind::K2,
        1_000,
        &[(2, 1), (4, 3), (14, 17), (72, 99), (410, 577)],
    ));
    checks.push(sequence_check(
        "K3-hits",
        SquareKind::K3,
        1_000,
        &[(1, 3), (18, 99), (595, 3363)],
    ));
    checks.push(sequence_check(
        "K4-hits",
        SquareKind::K4,
        SquareKind::K4.max_bound().min(1_000),
        &[(2, 1), (3, 3)],
    ));

    let k1: Vec<u64> = square_sequence(SquareKind::K1, 10_000).iter().map(|(n, _)| *n).collect();
    let recurrence_ok = k1.windows(3).all(|w| w[2] == 6 * w[1] - w[0] - 4);
    checks.push(CheckResult::new(
        "K1-recurrence",
        recurrence_ok && k1.len() >= 3,
        "hit parameters satisfy n(k+1) = 6 n(k) - n(k-1) - 4".to_string(),
    ));

    let roots: Vec<u64> = square_sequence(SquareKind::K1, 10_000)
        .iter()
        .map(|(_, r)| r.to_string().parse::<u64>().unwrap_or(0))
        .collect();
    let root_rec_ok = roots.windows(3).all(|w| w[2] == 6 * w[1] - w[0]);
    checks.push(CheckResult::new(
        "K1-root-recurrence",
        root_rec_ok && roots.len() >= 3,
        "square roots satisfy r(k+1) = 6 r(k) - r(k-1)".to_string(),
    ));

    VerifyOutcome { subject: "square-sequences".to_string(), checks }
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

/// Verifies every catalog family at its default tuples plus the small-group
/// matrix and the square sequences, with a reduced Frobenius sweep; sized to
/// finish within a minute.
pub fn small_suite(tol: f64) -> Vec<VerifyOutcome> {
    let mut outcomes = Vec::new();
    for id in FAMILY_IDS {
        if let Some(tuples) = default_tuples(id) {
            outcomes.extend(verify_family(&tuples, tol));
        }
    }
    outcomes.push(verify_small_group_matrix(tol));
    outcomes.push(verify_square_sequences());
    outcomes.push(verify_frobenius_sweep(150, 100, tol));
    outcomes
}

/// The full battery: default family tuples, the small-group matrix, the
/// square sequences, and the complete Frobenius sweep up to order 500.
pub fn full_suite(tol: f64) -> Vec<VerifyOutcome> {
    let mut outcomes = Vec::new();
    for id in FAMILY_IDS {
        if let Some(tuples) = default_tuples(id) {
            outcomes.extend(verify_family(&tuples, tol));
        }
    }
    outcomes.push(verify_small_group_matrix(tol));
    outcomes.push(verify_square_sequences());
    outcomes.push(verify_frobenius_sweep(500, 200, tol));
    outcomes
}

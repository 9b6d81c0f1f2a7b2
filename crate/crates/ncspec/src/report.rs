//! End-to-end analysis of one group: construct the non-commuting graph,
//! compute exact and numeric spectra for all three matrices, derive the
//! energies, classification flags, energy ordering and integrality verdict,
//! and package everything for JSON/CSV output.
//!
//! Exact spectra are preferred wherever they exist:
//!
//! * complete multipartite graphs use the factored characteristic
//!   polynomials from [`crate::spectra`] (only a residual factor of degree
//!   = number of distinct part sizes is ever solved);
//! * other graphs up to [`CHARPOLY_EXACT_LIMIT`] vertices go through the
//!   exact integer characteristic polynomial;
//! * everything else is numeric only.
//!
//! The numeric eigensolver always runs as an independent cross-check; an
//! analysis is returned only if exact and numeric routes agree and the
//! trace identities hold.

use serde_json::{json, Value};
use thiserror::Error;

use crate::energies::{
    classify, energy_ordering, graph_energy, laplacian_energy, signless_laplacian_energy,
    EnergyOrdering, EnergyValue, Flags, SpectrumData,
};
use crate::groups::parse::parse_group_spec;
use crate::groups::{Group, GroupError};
use crate::ncgraph::{noncommuting_graph, NcGraph, NcGraphError};
use crate::poly::{charpoly_int, deflate_integer_roots, exact_roots, RatPoly};
use crate::spectra::{
    a_shape_poly, eigenvalues_sym, laplacian_spectrum_clique_complement, matrix_f64, matrix_i64,
    q_shape_poly, spectra_agree, trace_identity_numeric_ok, trace_identity_ok, ExactSpectrum,
    MatrixKind, NumericSpectrum, SpectraError, DEFAULT_JACOBI_TOL,
};

/// Vertex-count cap for the exact integer characteristic-polynomial route
/// on graphs that are not complete multipartite.
pub const CHARPOLY_EXACT_LIMIT: usize = 128;

/// Default absolute tolerance for exact-vs-numeric agreement checks and for
/// tolerance-based flag comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error("group error: {0}")]
    Group(#[from] GroupError),
    #[error("graph error: {0}")]
    Graph(#[from] NcGraphError),
    #[error("spectra error: {0}")]
    Spectra(#[from] SpectraError),
    /// An internal cross-check failed (exact vs numeric disagreement or a
    /// violated trace identity); indicates a defect, never bad input.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Exact spectra per matrix kind, where available.
#[derive(Clone, Debug, Default)]
pub struct ExactSpectra {
    pub adjacency: Option<ExactSpectrum>,
    pub laplacian: Option<ExactSpectrum>,
    pub signless: Option<ExactSpectrum>,
}

/// Numeric spectra per matrix kind (always computed).
#[derive(Clone, Debug)]
pub struct NumericSpectra {
    pub adjacency: NumericSpectrum,
    pub laplacian: NumericSpectrum,
    pub signless: NumericSpectrum,
}

/// The energy-level summary of one graph: everything a table row needs.
#[derive(Clone, Debug)]
pub struct EnergyReport {
    /// The group description this row was computed from.
    pub spec: String,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub mean_degree: f64,
    pub e: EnergyValue,
    pub le: EnergyValue,
    pub le_plus: EnergyValue,
    pub flags: Flags,
    pub ordering: EnergyOrdering,
    /// Whether every signless-Laplacian eigenvalue is an integer; `None`
    /// when no exact route could decide.
    pub q_integral: Option<bool>,
}

impl EnergyReport {
    /// Column names for [`EnergyReport::csv_record`], in order.
    pub fn csv_header() -> &'static [&'static str] {
        &[
            "spec",
            "n",
            "m",
            "E",
            "LE",
            "LEplus",
            "hypo",
            "hyper",
            "Lhyper",
            "Qhyper",
            "ordering",
            "q_integral",
        ]
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.spec.clone(),
            self.n_vertices.to_string(),
            self.n_edges.to_string(),
            format_value(&self.e),
            format_value(&self.le),
            format_value(&self.le_plus),
            self.flags.hypoenergetic.to_string(),
            self.flags.hyperenergetic.to_string(),
            self.flags.l_hyperenergetic.to_string(),
            self.flags.q_hyperenergetic.to_string(),
            self.ordering.to_string(),
            match self.q_integral {
                Some(b) => b.to_string(),
                None => String::new(),
            },
        ]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "spec": self.spec,
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "mean_degree": self.mean_degree,
            "E": energy_value_json(&self.e),
            "LE": energy_value_json(&self.le),
            "LEplus": energy_value_json(&self.le_plus),
            "flags": {
                "hypoenergetic": self.flags.hypoenergetic,
                "hyperenergetic": self.flags.hyperenergetic,
                "l_hyperenergetic": self.flags.l_hyperenergetic,
                "q_hyperenergetic": self.flags.q_hyperenergetic,
            },
            "ordering": self.ordering.to_string(),
            "q_integral": self.q_integral,
        })
    }
}

fn format_value(v: &EnergyValue) -> String {
    format!("{:.12}", v.value)
}

fn energy_value_json(v: &EnergyValue) -> Value {
    json!({
        "value": v.value,
        "exact": v.exact.as_ref().map(|s| s.to_string()),
    })
}

/// Full analysis of one group's non-commuting graph.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub group_name: String,
    pub group_order: usize,
    pub center_size: usize,
    pub graph: NcGraph,
    /// `(part size, count)` pairs when the graph is complete multipartite.
    pub shape: Option<Vec<(usize, usize)>>,
    pub exact: ExactSpectra,
    pub numeric: NumericSpectra,
    pub report: EnergyReport,
}

impl Analysis {
    pub fn n_vertices(&self) -> usize {
        self.graph.n()
    }

    pub fn n_edges(&self) -> usize {
        self.graph.edge_count()
    }

    /// JSON rendering; `include_graph` adds the full edge list.
    pub fn to_json(&self, include_graph: bool) -> Value {
        let spectrum_pair = |exact: &Option<ExactSpectrum>, numeric: &NumericSpectrum| {
            json!({
                "exact": exact.as_ref().map(|s| s.to_json()),
                "numeric": numeric.values,
            })
        };
        let mut value = json!({
            "group": {
                "name": self.group_name,
                "order": self.group_order,
                "center_size": self.center_size,
            },
            "graph": {
                "n_vertices": self.n_vertices(),
                "n_edges": self.n_edges(),
                "multipartite_shape": self.shape,
            },
            "spectra": {
                "adjacency": spectrum_pair(&self.exact.adjacency, &self.numeric.adjacency),
                "laplacian": spectrum_pair(&self.exact.laplacian, &self.numeric.laplacian),
                "signless_laplacian": spectrum_pair(&self.exact.signless, &self.numeric.signless),
            },
            "energies": self.report.to_json(),
        });
        if include_graph {
            value["graph"]["edges"] = self.graph.to_json()["edges"].clone();
            value["graph"]["labels"] = self.graph.to_json()["labels"].clone();
        }
        value
    }
}

/// Analyzes the group described by `spec` (see the group-description
/// grammar in [`crate::groups::parse`]).
pub fn analyze_spec(spec: &str, tol: f64) -> Result<Analysis, AnalyzeError> {
    let group = parse_group_spec(spec)?;
    let mut analysis = analyze_group(&group, tol)?;
    analysis.report.spec = spec.to_string();
    Ok(analysis)
}

/// Analyzes an already-constructed group.
pub fn analyze_group(group: &Group, tol: f64) -> Result<Analysis, AnalyzeError> {
    let graph = noncommuting_graph(group)?;
    let n = graph.n();
    let m = graph.edge_count();
    let shape = graph.multipartite_shape();

    // Numeric route: always runs, is the independent cross-check.
    let numeric = NumericSpectra {
        adjacency: numeric_spectrum(&graph, MatrixKind::Adjacency)?,
        laplacian: numeric_spectrum(&graph, MatrixKind::Laplacian)?,
        signless: numeric_spectrum(&graph, MatrixKind::SignlessLaplacian)?,
    };

    // Exact route: factored shape polynomials for complete multipartite
    // graphs, integer characteristic polynomials for small general graphs.
    let mut q_charpoly: Option<RatPoly> = None;
    let exact = if let Some(ref shape) = shape {
        ExactSpectra {
            adjacency: a_shape_poly(shape).exact_spectrum(),
            laplacian: Some(laplacian_spectrum_clique_complement(&expand_shape(shape))),
            signless: q_shape_poly(shape).exact_spectrum(),
        }
    } else if n <= CHARPOLY_EXACT_LIMIT {
        let qp = charpoly_int(&matrix_i64(&graph, MatrixKind::SignlessLaplacian));
        let spectra = ExactSpectra {
            adjacency: exact_spectrum_of(&charpoly_int(&matrix_i64(
                &graph,
                MatrixKind::Adjacency,
            ))),
            laplacian: exact_spectrum_of(&charpoly_int(&matrix_i64(
                &graph,
                MatrixKind::Laplacian,
            ))),
            signless: exact_spectrum_of(&qp),
        };
        q_charpoly = Some(qp);
        spectra
    } else {
        ExactSpectra::default()
    };

    // Cross-checks: trace identities and exact-vs-numeric agreement.
    let kinds = [
        (MatrixKind::Adjacency, &exact.adjacency, &numeric.adjacency),
        (MatrixKind::Laplacian, &exact.laplacian, &numeric.laplacian),
        (MatrixKind::SignlessLaplacian, &exact.signless, &numeric.signless),
    ];
    for (kind, exact_spec, numeric_spec) in kinds {
        if !trace_identity_numeric_ok(kind, numeric_spec, m) {
            return Err(AnalyzeError::Inconsistent(format!(
                "{}: numeric trace identity violated (sum {:.6})",
                kind.short_name(),
                numeric_spec.sum()
            )));
        }
        if let Some(spec) = exact_spec {
            if spec.total_multiplicity() != n {
                return Err(AnalyzeError::Inconsistent(format!(
                    "{}: exact spectrum has {} eigenvalues for {} vertices",
                    kind.short_name(),
                    spec.total_multiplicity(),
                    n
                )));
            }
            if !trace_identity_ok(kind, spec, m) {
                return Err(AnalyzeError::Inconsistent(format!(
                    "{}: exact trace identity violated",
                    kind.short_name()
                )));
            }
            let agree = spectra_agree(spec, numeric_spec, tol.max(1e-12))
                .map_err(|e| AnalyzeError::Inconsistent(e.to_string()))?;
            if !agree {
                return Err(AnalyzeError::Inconsistent(format!(
                    "{}: exact and numeric spectra disagree beyond {:.1e}",
                    kind.short_name(),
                    tol.max(1e-12)
                )));
            }
        }
    }

    // Energies from the best available data.
    let e = match &exact.adjacency {
        Some(s) => graph_energy(SpectrumData::Exact(s)),
        None => graph_energy(SpectrumData::Numeric(&numeric.adjacency.values)),
    };
    let le = match &exact.laplacian {
        Some(s) => laplacian_energy(SpectrumData::Exact(s), n, m),
        None => laplacian_energy(SpectrumData::Numeric(&numeric.laplacian.values), n, m),
    };
    let le_plus = match &exact.signless {
        Some(s) => signless_laplacian_energy(SpectrumData::Exact(s), n, m),
        None => signless_laplacian_energy(SpectrumData::Numeric(&numeric.signless.values), n, m),
    };

    let flags = classify(&e, &le, &le_plus, n, tol);
    let ordering = energy_ordering(&e, &le_plus, &le, tol);
    let q_integral = q_integral_verdict(&exact.signless, shape.as_deref(), q_charpoly.as_ref(), n);

    let report = EnergyReport {
        spec: group.name().to_string(),
        n_vertices: n,
        n_edges: m,
        mean_degree: 2.0 * m as f64 / n as f64,
        e,
        le,
        le_plus,
        flags,
        ordering,
        q_integral,
    };

    Ok(Analysis {
        group_name: group.name().to_string(),
        group_order: group.order(),
        center_size: group.center().len(),
        graph,
        shape,
        exact,
        numeric,
        report,
    })
}

fn numeric_spectrum(graph: &NcGraph, kind: MatrixKind) -> Result<NumericSpectrum, SpectraError> {
    eigenvalues_sym(&matrix_f64(graph, kind), graph.n(), DEFAULT_JACOBI_TOL)
}

fn exact_spectrum_of(p: &RatPoly) -> Option<ExactSpectrum> {
    exact_roots(p).map(ExactSpectrum::new)
}

/// Part sizes with repetition (the clique sizes of the complement).
fn expand_shape(shape: &[(usize, usize)]) -> Vec<usize> {
    let mut out = Vec::new();
    for &(size, count) in shape {
        out.extend(std::iter::repeat_n(size, count));
    }
    out
}

/// Decides whether every signless-Laplacian eigenvalue is an integer.
///
/// In order of preference: an exact spectrum answers directly; for a
/// multipartite graph the factored polynomial's residual factor is deflated
/// over the eigenvalue window `[0, 2n]` (integral iff nothing is left); a
/// general exact characteristic polynomial is deflated the same way. With
/// no exact route the answer is `None` — numerics cannot certify
/// integrality.
fn q_integral_verdict(
    exact_q: &Option<ExactSpectrum>,
    shape: Option<&[(usize, usize)]>,
    q_charpoly: Option<&RatPoly>,
    n: usize,
) -> Option<bool> {
    if let Some(spec) = exact_q {
        return Some(spec.is_integral());
    }
    let window = 2 * n as i64;
    if let Some(shape) = shape {
        let bracket = q_shape_poly(shape).bracket;
        let (_, residual) = deflate_integer_roots(&bracket, 0, window);
        return Some(residual.degree() == 0);
    }
    if let Some(p) = q_charpoly {
        let (_, residual) = deflate_integer_roots(p, 0, window);
        return Some(residual.degree() == 0);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build;
    use crate::surd::{rat_frac, rat_int, SurdSum};

    #[test]
    fn dihedral6_full_analysis() {
        let analysis = analyze_spec("D:2m=6", DEFAULT_TOL).unwrap();
        assert_eq!(analysis.group_order, 6);
        assert_eq!(analysis.center_size, 1);
        assert_eq!(analysis.n_vertices(), 5);
        assert_eq!(analysis.n_edges(), 9);
        assert_eq!(analysis.shape, Some(vec![(1, 3), (2, 1)]));
        let report = &analysis.report;
        assert!((report.e.value - 7.2915026221292).abs() < 1e-9);
        let le = report.le.exact.as_ref().unwrap();
        assert_eq!(le, &SurdSum::rational(rat_frac(42, 5)));
        let le_plus = report.le_plus.exact.as_ref().unwrap();
        let expected = SurdSum::rational(rat_frac(9, 5)) + SurdSum::radical(rat_int(1), 33);
        assert_eq!(le_plus, &expected);
        assert_eq!(report.q_integral, Some(false));
        assert!(report.flags.l_hyperenergetic);
        assert!(!report.flags.q_hyperenergetic);
        assert!(!report.flags.hypoenergetic);
        assert!(!report.flags.hyperenergetic);
        assert!(report.ordering.is_nondecreasing());
        assert_eq!(report.spec, "D:2m=6");
    }

    #[test]
    fn symmetric4_uses_charpoly_route() {
        let group = build::symmetric4().unwrap();
        let analysis = analyze_group(&group, DEFAULT_TOL).unwrap();
        assert_eq!(analysis.n_vertices(), 23);
        assert_eq!(analysis.n_edges(), 228);
        assert_eq!(analysis.shape, None);
        // The adjacency and signless-Laplacian polynomials have irreducible
        // factors of degree >= 3; the Laplacian splits with one surd pair.
        assert!(analysis.exact.adjacency.is_none());
        assert!(analysis.exact.signless.is_none());
        let lspec = analysis.exact.laplacian.as_ref().expect("L splits");
        assert_eq!(lspec.total_multiplicity(), 23);
        // LE = 1072/23 + 4*sqrt(13).
        let expected =
            SurdSum::rational(rat_frac(1072, 23)) + SurdSum::radical(rat_int(4), 13);
        assert_eq!(analysis.report.le.exact.as_ref().unwrap(), &expected);
        // Q-integrality is still decided exactly (negatively) by deflation.
        assert_eq!(analysis.report.q_integral, Some(false));
        // The only hyperenergetic graph in the catalog's orbit.
        assert!(analysis.report.flags.hyperenergetic);
        assert!(analysis.report.flags.l_hyperenergetic);
        assert!(analysis.report.flags.q_hyperenergetic);
        assert!((analysis.report.le_plus.value - 51.884_547_8).abs() < 1e-6);
    }

    #[test]
    fn alternating5_cubic_bracket_is_numeric_but_integrality_decided() {
        let group = build::alternating5().unwrap();
        let analysis = analyze_group(&group, DEFAULT_TOL).unwrap();
        assert_eq!(analysis.n_vertices(), 59);
        assert_eq!(analysis.shape, Some(vec![(2, 10), (3, 5), (4, 6)]));
        // Three distinct part sizes: cubic residual, no exact A/Q spectrum.
        assert!(analysis.exact.adjacency.is_none());
        assert!(analysis.exact.signless.is_none());
        // L-spectrum is exact regardless: LE = 8580/59.
        let le = analysis.report.le.exact.as_ref().unwrap();
        assert_eq!(le, &SurdSum::rational(rat_frac(8580, 59)));
        // The cubic residual has no integer roots.
        assert_eq!(analysis.report.q_integral, Some(false));
        assert!(analysis.report.flags.l_hyperenergetic);
        assert!(analysis.report.flags.q_hyperenergetic);
        assert!(!analysis.report.flags.hyperenergetic);
        assert!(!analysis.report.flags.hypoenergetic);
    }

    #[test]
    fn abelian_input_is_reported_as_graph_error() {
        let err = analyze_spec("Z:4", DEFAULT_TOL).unwrap_err();
        assert!(matches!(err, AnalyzeError::Graph(NcGraphError::AbelianGroup(_))));
    }

    #[test]
    fn json_round_trip_is_stable() {
        let analysis = analyze_spec("Q:4n=12", DEFAULT_TOL).unwrap();
        let rendered = analysis.to_json(true);
        let text = serde_json::to_string(&rendered).unwrap();
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, rendered);
        assert_eq!(parsed["graph"]["n_vertices"], json!(10));
        assert_eq!(parsed["energies"]["flags"]["l_hyperenergetic"], json!(true));
        assert!(parsed["spectra"]["signless_laplacian"]["exact"].is_array());
        assert_eq!(
            parsed["spectra"]["signless_laplacian"]["numeric"].as_array().unwrap().len(),
            10
        );
    }

    #[test]
    fn csv_record_matches_header_arity() {
        let analysis = analyze_spec("U:n=2", DEFAULT_TOL).unwrap();
        let record = analysis.report.csv_record();
        assert_eq!(record.len(), EnergyReport::csv_header().len());
        assert_eq!(record[0], "U:n=2");
        assert_eq!(record[1], "10");
        // Flags columns are booleans in fixed positions.
        assert_eq!(record[6], "false");
        assert_eq!(record[9], "true");
    }

    #[test]
    fn integral_spectrum_is_detected() {
        let analysis = analyze_spec("D:2m=8", DEFAULT_TOL).unwrap();
        assert_eq!(analysis.report.q_integral, Some(true));
        let ordering = &analysis.report.ordering;
        assert!(ordering.all_equal());
        assert_eq!(analysis.report.e.exact.as_ref().unwrap(), &SurdSum::integer(8));
    }
}

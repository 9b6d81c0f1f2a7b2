//! Graph spectra, exact and numeric.
//!
//! Three routes are implemented and cross-checked against each other:
//!
//! * a dense symmetric eigensolver (cyclic Jacobi) for any graph matrix;
//! * exact characteristic polynomials of complete multipartite graphs in
//!   factored form ([`ShapePoly`]), for the adjacency and signless
//!   Laplacian matrices;
//! * the exact Laplacian spectrum of any complement of a disjoint union of
//!   cliques.
//!
//! Exact spectra carry quadratic-surd entries; polynomials whose
//! non-rational part is an irreducible factor of degree three or more have
//! no exact spectrum here and callers fall back to the numeric route.

use num_traits::Zero;
use serde_json::json;
use thiserror::Error;

use crate::ncgraph::NcGraph;
use crate::poly::{exact_roots, RatPoly};
use crate::surd::{rat_int, Rat, Surd, SurdSum};

/// Eigensolver dimension cap.
pub const MAX_EIGEN_DIM: usize = 4096;
/// Cyclic Jacobi sweep cap.
pub const MAX_JACOBI_SWEEPS: usize = 100;
/// Default convergence tolerance (relative to the Frobenius norm); tight
/// enough that eigenvalues of the graphs under study are accurate to well
/// below 1e-9 absolute.
pub const DEFAULT_JACOBI_TOL: f64 = 1e-13;
/// Default relative tolerance for grouping numeric eigenvalues into
/// multiplicity classes.
pub const DEFAULT_GROUPING_TOL: f64 = 1e-7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectraError {
    #[error("matrix dimension {0} exceeds the eigensolver cap {MAX_EIGEN_DIM}")]
    TooLarge(usize),
    #[error("Jacobi iteration did not converge within {MAX_JACOBI_SWEEPS} sweeps")]
    NoConvergence,
    #[error("spectrum length mismatch: exact has {exact} entries, numeric has {numeric}")]
    LengthMismatch { exact: usize, numeric: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] =
        [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian];

    pub fn short_name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
        }
    }
}

/// Dense integer matrix of the requested kind (rows are `Vec<i64>` so the
/// exact characteristic-polynomial route can consume it directly).
pub fn matrix_i64(graph: &NcGraph, kind: MatrixKind) -> Vec<Vec<i64>> {
    let n = graph.n();
    let mut m = vec![vec![0i64; n]; n];
    for (u, row) in m.iter_mut().enumerate() {
        for (v, cell) in row.iter_mut().enumerate() {
            if u != v && graph.adjacent(u, v) {
                *cell = match kind {
                    MatrixKind::Adjacency | MatrixKind::SignlessLaplacian => 1,
                    MatrixKind::Laplacian => -1,
                };
            }
        }
        if kind != MatrixKind::Adjacency {
            row[u] = graph.degree(u) as i64;
        }
    }
    m
}

/// Flat row-major float matrix of the requested kind.
pub fn matrix_f64(graph: &NcGraph, kind: MatrixKind) -> Vec<f64> {
    let n = graph.n();
    let mut m = vec![0f64; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v && graph.adjacent(u, v) {
                m[u * n + v] = match kind {
                    MatrixKind::Adjacency | MatrixKind::SignlessLaplacian => 1.0,
                    MatrixKind::Laplacian => -1.0,
                };
            }
        }
        if kind != MatrixKind::Adjacency {
            m[u * n + u] = graph.degree(u) as f64;
        }
    }
    m
}

/// All eigenvalues of a symmetric matrix, sorted descending, with the
/// absolute tolerance used to group them into multiplicity classes.
#[derive(Clone, Debug)]
pub struct NumericSpectrum {
    pub values: Vec<f64>,
    pub grouping_tol: f64,
}

impl NumericSpectrum {
    /// Group into `(representative, multiplicity)` runs using the stored
    /// absolute tolerance; the representative is the mean of each run.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        group_multiplicities_abs(&self.values, self.grouping_tol)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

fn group_multiplicities_abs(values_desc: &[f64], abs_tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut run_start = 0usize;
    for i in 0..values_desc.len() {
        if i > run_start && (values_desc[run_start] - values_desc[i]).abs() > abs_tol {
            let run = &values_desc[run_start..i];
            out.push((run.iter().sum::<f64>() / run.len() as f64, run.len()));
            run_start = i;
        }
    }
    if run_start < values_desc.len() {
        let run = &values_desc[run_start..];
        out.push((run.iter().sum::<f64>() / run.len() as f64, run.len()));
    }
    out
}

/// Group a descending list of eigenvalues with a tolerance relative to the
/// spectral radius.
pub fn group_multiplicities(values_desc: &[f64], rel_tol: f64) -> Vec<(f64, usize)> {
    let radius = values_desc.iter().fold(0f64, |m, v| m.max(v.abs()));
    group_multiplicities_abs(values_desc, rel_tol * radius.max(1.0))
}

fn off_diagonal_sq(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    s
}

/// Cyclic-by-row Jacobi on a private copy of `matrix` (flat row-major,
/// symmetric). Converges when the off-diagonal Frobenius norm drops below
/// `tol * max(1, ||A||_F)`. Optionally accumulates eigenvectors.
fn jacobi_core(
    a: &mut [f64],
    n: usize,
    tol: f64,
    mut vectors: Option<&mut [f64]>,
) -> Result<(), SpectraError> {
    if n > MAX_EIGEN_DIM {
        return Err(SpectraError::TooLarge(n));
    }
    debug_assert_eq!(a.len(), n * n);
    if let Some(v) = vectors.as_deref_mut() {
        v.fill(0.0);
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
    }
    if n <= 1 {
        return Ok(());
    }
    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = tol.max(f64::EPSILON) * fro.max(1.0);
    let target_sq = target * target;

    for _sweep in 0..MAX_JACOBI_SWEEPS {
        if off_diagonal_sq(a, n) <= target_sq {
            return Ok(());
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    a[k * n + p] = new_p;
                    a[p * n + k] = new_p;
                    a[k * n + q] = new_q;
                    a[q * n + k] = new_q;
                }
                if let Some(v) = vectors.as_deref_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    if off_diagonal_sq(a, n) <= target_sq {
        Ok(())
    } else {
        Err(SpectraError::NoConvergence)
    }
}

/// All eigenvalues of a symmetric matrix, sorted descending.
pub fn eigenvalues_sym(matrix: &[f64], n: usize, tol: f64) -> Result<NumericSpectrum, SpectraError> {
    let mut a = matrix.to_vec();
    jacobi_core(&mut a, n, tol, None)?;
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let radius = values.iter().fold(0f64, |m, v| m.max(v.abs()));
    Ok(NumericSpectrum { values, grouping_tol: DEFAULT_GROUPING_TOL * radius.max(1.0) })
}

/// Eigenvalues (descending) and matching orthonormal eigenvectors; column
/// `i` of the returned flat matrix is the eigenvector for `values[i]`.
pub fn eigen_decomposition_sym(
    matrix: &[f64],
    n: usize,
    tol: f64,
) -> Result<(NumericSpectrum, Vec<f64>), SpectraError> {
    let mut a = matrix.to_vec();
    let mut v = vec![0f64; n * n];
    jacobi_core(&mut a, n, tol, Some(&mut v))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0f64; n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for k in 0..n {
            vectors[k * n + new_col] = v[k * n + old_col];
        }
    }
    let radius = values.iter().fold(0f64, |m, x| m.max(x.abs()));
    Ok((NumericSpectrum { values, grouping_tol: DEFAULT_GROUPING_TOL * radius.max(1.0) }, vectors))
}

/// Exact spectrum: quadratic-surd eigenvalues with multiplicities, sorted
/// descending by value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSpectrum {
    entries: Vec<(Surd, usize)>,
}

impl ExactSpectrum {
    /// Merge duplicate values, drop zero multiplicities, sort descending.
    pub fn new(entries: Vec<(Surd, usize)>) -> Self {
        let mut merged: Vec<(Surd, usize)> = Vec::new();
        for (value, mult) in entries {
            if mult == 0 {
                continue;
            }
            match merged.iter_mut().find(|(v, _)| *v == value) {
                Some((_, m)) => *m += mult,
                None => merged.push((value, mult)),
            }
        }
        merged.sort_by(|a, b| b.0.cmp_exact(&a.0));
        ExactSpectrum { entries: merged }
    }

    pub fn entries(&self) -> &[(Surd, usize)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Exact sum of all eigenvalues with multiplicity.
    pub fn sum(&self) -> SurdSum {
        let mut acc = SurdSum::zero();
        for (value, mult) in &self.entries {
            acc += SurdSum::from_surd(value).scale(&rat_int(*mult as i64));
        }
        acc
    }

    /// Exact sum of `mult * |value - center|` — the common kernel of the
    /// three energy definitions.
    pub fn abs_deviation_sum(&self, center: &Rat) -> SurdSum {
        let mut acc = SurdSum::zero();
        for (value, mult) in &self.entries {
            let dev = value.add_rational(&-center.clone()).abs();
            acc += SurdSum::from_surd(&dev).scale(&rat_int(*mult as i64));
        }
        acc
    }

    /// All eigenvalues integers?
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_integer())
    }

    /// Float rendering, each value repeated by multiplicity, descending.
    pub fn to_f64_descending(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for (value, mult) in &self.entries {
            let x = value.to_f64();
            out.extend(std::iter::repeat_n(x, *mult));
        }
        out
    }

    /// JSON: one object per entry, `a + b*sqrt(d)` with multiplicity and a
    /// float rendering.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(v, m)| {
                json!({
                    "a": v.a().to_string(),
                    "b": v.b().to_string(),
                    "d": v.d(),
                    "mult": m,
                    "value": v.to_f64(),
                })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

/// Characteristic polynomial kept in factored form: a set of known linear
/// roots with multiplicities times one small residual factor. The closed
/// forms for complete multipartite graphs always land in this shape, and
/// keeping it factored means only the residual (degree = number of distinct
/// part sizes) ever needs root-solving, independent of the graph size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapePoly {
    pub fixed: Vec<(Rat, usize)>,
    pub bracket: RatPoly,
}

impl ShapePoly {
    pub fn degree(&self) -> usize {
        self.fixed.iter().map(|(_, m)| m).sum::<usize>() + self.bracket.degree()
    }

    /// Full expansion (monic, integer coefficients for graph charpolys).
    pub fn expand(&self) -> RatPoly {
        let mut acc = self.bracket.clone();
        for (root, mult) in &self.fixed {
            acc = acc.mul(&RatPoly::linear_root(root).pow(*mult));
        }
        acc
    }

    /// Exact root multiset; `None` when the residual factor does not split
    /// into rational roots and at most one quadratic.
    pub fn exact_spectrum(&self) -> Option<ExactSpectrum> {
        let bracket_roots = exact_roots(&self.bracket)?;
        let mut entries: Vec<(Surd, usize)> =
            self.fixed.iter().map(|(r, m)| (Surd::rational(r.clone()), *m)).collect();
        entries.extend(bracket_roots);
        Some(ExactSpectrum::new(entries))
    }
}

/// `(part_size, count)` pairs with sizes strictly increasing.
pub type MultipartiteShape = [(usize, usize)];

fn validate_shape(shape: &MultipartiteShape) {
    assert!(!shape.is_empty(), "shape must have at least one part class");
    for window in shape.windows(2) {
        assert!(window[0].0 < window[1].0, "part sizes must be strictly increasing");
    }
    for &(p, a) in shape {
        assert!(p >= 1 && a >= 1, "part sizes and counts must be positive");
    }
}

pub fn shape_vertex_count(shape: &MultipartiteShape) -> usize {
    shape.iter().map(|&(p, a)| p * a).sum()
}

pub fn shape_part_count(shape: &MultipartiteShape) -> usize {
    shape.iter().map(|&(_, a)| a).sum()
}

/// `prod_i (x - c_i)  -  sum_j w_j prod_{i != j} (x - c_i)`; the residual
/// factor shared by both characteristic-polynomial closed forms.
fn weighted_bracket(centers: &[Rat], weights: &[Rat]) -> RatPoly {
    let mut acc = RatPoly::one();
    for c in centers {
        acc = acc.mul(&RatPoly::linear_root(c));
    }
    for (j, w) in weights.iter().enumerate() {
        let mut partial = RatPoly::constant(w.clone());
        for (i, c) in centers.iter().enumerate() {
            if i != j {
                partial = partial.mul(&RatPoly::linear_root(c));
            }
        }
        acc = acc.sub(&partial);
    }
    acc
}

/// Factored adjacency characteristic polynomial of the complete multipartite
/// graph with the given shape:
/// `x^(n-r) * prod_i (x + p_i)^(a_i - 1) * bracket`.
pub fn a_shape_poly(shape: &MultipartiteShape) -> ShapePoly {
    validate_shape(shape);
    let n = shape_vertex_count(shape);
    let r = shape_part_count(shape);
    let mut fixed = Vec::new();
    if n > r {
        fixed.push((rat_int(0), n - r));
    }
    for &(p, a) in shape {
        if a > 1 {
            fixed.push((rat_int(-(p as i64)), a - 1));
        }
    }
    let centers: Vec<Rat> = shape.iter().map(|&(p, _)| rat_int(-(p as i64))).collect();
    let weights: Vec<Rat> = shape.iter().map(|&(p, a)| rat_int((p * a) as i64)).collect();
    ShapePoly { fixed, bracket: weighted_bracket(&centers, &weights) }
}

/// Factored signless-Laplacian characteristic polynomial of the complete
/// multipartite graph with the given shape:
/// `prod_i (x - n + p_i)^(a_i (p_i - 1)) * prod_i (x - n + 2 p_i)^(a_i - 1) * bracket`.
pub fn q_shape_poly(shape: &MultipartiteShape) -> ShapePoly {
    validate_shape(shape);
    let n = shape_vertex_count(shape) as i64;
    let mut fixed = Vec::new();
    for &(p, a) in shape {
        if p > 1 {
            fixed.push((rat_int(n - p as i64), a * (p - 1)));
        }
        if a > 1 {
            fixed.push((rat_int(n - 2 * p as i64), a - 1));
        }
    }
    let centers: Vec<Rat> = shape.iter().map(|&(p, _)| rat_int(n - 2 * p as i64)).collect();
    let weights: Vec<Rat> = shape.iter().map(|&(p, a)| rat_int((p * a) as i64)).collect();
    ShapePoly { fixed, bracket: weighted_bracket(&centers, &weights) }
}

/// Expanded adjacency characteristic polynomial (monic, degree `n`).
pub fn a_charpoly_multipartite(shape: &MultipartiteShape) -> RatPoly {
    a_shape_poly(shape).expand()
}

/// Expanded signless-Laplacian characteristic polynomial (monic, degree `n`).
pub fn q_polynomial_multipartite(shape: &MultipartiteShape) -> RatPoly {
    q_shape_poly(shape).expand()
}

/// Exact Laplacian spectrum of the complement of a disjoint union of
/// cliques, given the clique sizes: with `l_i` cliques of each distinct size
/// `m_i` and `N` total vertices, the spectrum is
/// `{0^1} ∪ {(N - m_i)^(l_i (m_i - 1))} ∪ {N^(Σl_i - 1)}`.
pub fn laplacian_spectrum_clique_complement(cliques: &[usize]) -> ExactSpectrum {
    assert!(!cliques.is_empty(), "at least one clique required");
    assert!(cliques.iter().all(|&m| m >= 1), "clique sizes must be positive");
    let total: usize = cliques.iter().sum();
    let clique_count = cliques.len();
    let mut entries = vec![(Surd::integer(0), 1)];
    let mut sorted = cliques.to_vec();
    sorted.sort_unstable();
    let mut i = 0;
    while i < sorted.len() {
        let m = sorted[i];
        let mut l = 0;
        while i < sorted.len() && sorted[i] == m {
            l += 1;
            i += 1;
        }
        entries.push((Surd::integer((total - m) as i64), l * (m - 1)));
    }
    entries.push((Surd::integer(total as i64), clique_count - 1));
    ExactSpectrum::new(entries)
}

/// Exact root multiset of an expanded polynomial, as a spectrum; `None`
/// when an irreducible factor of degree three or more remains.
pub fn exact_spectrum_of_poly(p: &RatPoly) -> Option<ExactSpectrum> {
    Some(ExactSpectrum::new(exact_roots(p)?))
}

/// Pairwise comparison of an exact spectrum against a numeric one, both
/// descending, within an absolute tolerance.
pub fn spectra_agree(
    exact: &ExactSpectrum,
    numeric: &NumericSpectrum,
    tol: f64,
) -> Result<bool, SpectraError> {
    let exact_values = exact.to_f64_descending();
    if exact_values.len() != numeric.values.len() {
        return Err(SpectraError::LengthMismatch {
            exact: exact_values.len(),
            numeric: numeric.values.len(),
        });
    }
    Ok(exact_values
        .iter()
        .zip(&numeric.values)
        .all(|(e, v)| (e - v).abs() <= tol))
}

/// Exact trace identities: adjacency eigenvalues sum to zero; Laplacian and
/// signless-Laplacian eigenvalues sum to twice the edge count.
pub fn trace_identity_ok(kind: MatrixKind, spectrum: &ExactSpectrum, edge_count: usize) -> bool {
    let expected = match kind {
        MatrixKind::Adjacency => Rat::zero(),
        _ => rat_int(2 * edge_count as i64),
    };
    match spectrum.sum().as_rational() {
        Some(s) => s == expected,
        None => false,
    }
}

/// Numeric trace identity with tolerance `1e-6 * n`.
pub fn trace_identity_numeric_ok(
    kind: MatrixKind,
    spectrum: &NumericSpectrum,
    edge_count: usize,
) -> bool {
    let expected = match kind {
        MatrixKind::Adjacency => 0.0,
        _ => 2.0 * edge_count as f64,
    };
    (spectrum.sum() - expected).abs() <= 1e-6 * spectrum.values.len().max(1) as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build;
    use crate::ncgraph::noncommuting_graph;
    use crate::surd::rat_frac;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_poly(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn adjacency_charpoly_examples() {
        // 5 parts of size 3 plus 1 part of size 4: x^13 (x+3)^4 (x^2-12x-60).
        let shape = [(3usize, 5usize), (4, 1)];
        let expected = int_poly(&[-60, -12, 1])
            .mul(&RatPoly::linear_root(&rat_int(-3)).pow(4))
            .mul(&RatPoly::linear_root(&rat_int(0)).pow(13));
        assert_eq!(a_charpoly_multipartite(&shape), expected);

        // Single part of size n: the empty graph, x^n.
        let empty = a_charpoly_multipartite(&[(4, 1)]);
        assert_eq!(empty, RatPoly::linear_root(&rat_int(0)).pow(4));

        // n parts of size 1: the complete graph, (x-n+1)(x+1)^(n-1).
        let complete = a_charpoly_multipartite(&[(1, 5)]);
        let expected =
            RatPoly::linear_root(&rat_int(4)).mul(&RatPoly::linear_root(&rat_int(-1)).pow(4));
        assert_eq!(complete, expected);
    }

    #[test]
    fn q_polynomial_examples() {
        // 3 parts of size 1 plus 1 part of size 2: (x-3)^3 (x^2-9x+12).
        let shape = [(1usize, 3usize), (2, 1)];
        let expected = int_poly(&[12, -9, 1]).mul(&RatPoly::linear_root(&rat_int(3)).pow(3));
        assert_eq!(q_polynomial_multipartite(&shape), expected);

        // 4 parts of size 2 plus 1 part of size 3:
        // (x-9)^4 (x-8)^2 (x-7)^3 (x^2-23x+96).
        let shape = [(2usize, 4usize), (3, 1)];
        let expected = int_poly(&[96, -23, 1])
            .mul(&RatPoly::linear_root(&rat_int(9)).pow(4))
            .mul(&RatPoly::linear_root(&rat_int(8)).pow(2))
            .mul(&RatPoly::linear_root(&rat_int(7)).pow(3));
        assert_eq!(q_polynomial_multipartite(&shape), expected);

        // 2 parts of size 1 = a single edge: x(x-2).
        let edge = q_polynomial_multipartite(&[(1, 2)]);
        assert_eq!(edge, int_poly(&[0, -2, 1]));
    }

    #[test]
    fn q_spectrum_of_dihedral6() {
        let sp = q_shape_poly(&[(1, 3), (2, 1)]).exact_spectrum().unwrap();
        let hi = Surd::new(rat_frac(9, 2), rat_frac(1, 2), 33);
        let lo = Surd::new(rat_frac(9, 2), rat_frac(-1, 2), 33);
        assert_eq!(sp.entries(), &[(hi, 1), (Surd::integer(3), 3), (lo, 1)]);
        assert!(trace_identity_ok(MatrixKind::SignlessLaplacian, &sp, 9));
    }

    #[test]
    fn laplacian_clique_complement_examples() {
        // Three cliques of size 4 (complement is complete tripartite).
        let v16 = laplacian_spectrum_clique_complement(&[4, 4, 4]);
        assert_eq!(
            v16.entries(),
            &[(Surd::integer(12), 2), (Surd::integer(8), 9), (Surd::integer(0), 1)]
        );

        // Cliques [1,1,1,2]: N = 5, spectrum {5^3, 3^1, 0^1}.
        let d6 = laplacian_spectrum_clique_complement(&[1, 1, 1, 2]);
        assert_eq!(
            d6.entries(),
            &[(Surd::integer(5), 3), (Surd::integer(3), 1), (Surd::integer(0), 1)]
        );
        assert!(trace_identity_ok(MatrixKind::Laplacian, &d6, 9));

        // A single clique: complement is edgeless, all-zero spectrum.
        let lone = laplacian_spectrum_clique_complement(&[5]);
        assert_eq!(lone.entries(), &[(Surd::integer(0), 5)]);
    }

    #[test]
    fn laplacian_theorem_matches_numeric_eigensolver() {
        // Complement of [1,1,1,2] is the non-commuting graph of the order-6
        // dihedral group; check the closed form against Jacobi.
        let g = noncommuting_graph(&build::dihedral(3).unwrap()).unwrap();
        let exact = laplacian_spectrum_clique_complement(
            &g.complement_clique_decomposition().unwrap(),
        );
        let numeric =
            eigenvalues_sym(&matrix_f64(&g, MatrixKind::Laplacian), g.n(), DEFAULT_JACOBI_TOL)
                .unwrap();
        assert!(spectra_agree(&exact, &numeric, 1e-9).unwrap());
    }

    #[test]
    fn jacobi_small_closed_forms() {
        // Signless Laplacian of the path on 3 vertices: {3, 1, 0}.
        let p3 = NcGraph::from_edges("P3", 3, &[(0, 1), (1, 2)]).unwrap();
        let q = matrix_f64(&p3, MatrixKind::SignlessLaplacian);
        let s = eigenvalues_sym(&q, 3, DEFAULT_JACOBI_TOL).unwrap();
        for (got, want) in s.values.iter().zip([3.0, 1.0, 0.0]) {
            assert!((got - want).abs() < 1e-12, "{} vs {}", got, want);
        }

        // Signless Laplacian of the complete graph on 4 vertices: {6, 2, 2, 2}.
        let k4 = NcGraph::from_edges(
            "K4",
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let s = eigenvalues_sym(&matrix_f64(&k4, MatrixKind::SignlessLaplacian), 4, 1e-13).unwrap();
        for (got, want) in s.values.iter().zip([6.0, 2.0, 2.0, 2.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(s.grouped().len(), 2);
        assert_eq!(s.grouped()[1], (2.0, 3));
    }

    #[test]
    fn jacobi_residuals_on_random_symmetric() {
        let n = 200;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut m = vec![0f64; n * n];
        for i in 0..n {
            for j in i..n {
                let x: f64 = rng.gen_range(-3.0..3.0);
                m[i * n + j] = x;
                m[j * n + i] = x;
            }
        }
        let (spec, vectors) = eigen_decomposition_sym(&m, n, DEFAULT_JACOBI_TOL).unwrap();
        let norm = m.iter().map(|x| x * x).sum::<f64>().sqrt();
        for col in 0..n {
            let lambda = spec.values[col];
            let mut residual_sq = 0f64;
            for row in 0..n {
                let mut av = 0f64;
                for k in 0..n {
                    av += m[row * n + k] * vectors[k * n + col];
                }
                let r = av - lambda * vectors[row * n + col];
                residual_sq += r * r;
            }
            assert!(
                residual_sq.sqrt() <= 1e-8 * norm,
                "residual {} too large at column {}",
                residual_sq.sqrt(),
                col
            );
        }
    }

    #[test]
    fn exact_spectrum_routes() {
        // Expanded-polynomial route agrees with the factored route.
        let shape = [(1usize, 3usize), (2, 1)];
        let from_poly = exact_spectrum_of_poly(&q_polynomial_multipartite(&shape)).unwrap();
        let from_factored = q_shape_poly(&shape).exact_spectrum().unwrap();
        assert_eq!(from_poly, from_factored);

        // An irreducible cubic factor has no exact spectrum.
        let cubic = int_poly(&[-314760, 14685, -218, 1]);
        assert!(exact_spectrum_of_poly(&cubic).is_none());
    }

    #[test]
    fn spectra_agree_detects_perturbation_and_length() {
        let g = noncommuting_graph(&build::dihedral(3).unwrap()).unwrap();
        let exact = q_shape_poly(&g.multipartite_shape().unwrap()).exact_spectrum().unwrap();
        let numeric = eigenvalues_sym(
            &matrix_f64(&g, MatrixKind::SignlessLaplacian),
            g.n(),
            DEFAULT_JACOBI_TOL,
        )
        .unwrap();
        assert!(spectra_agree(&exact, &numeric, 1e-9).unwrap());

        let mut perturbed = numeric.clone();
        perturbed.values[2] += 1e-3;
        assert!(!spectra_agree(&exact, &perturbed, 1e-9).unwrap());

        let mut short = numeric.clone();
        short.values.pop();
        assert_eq!(
            spectra_agree(&exact, &short, 1e-9).unwrap_err(),
            SpectraError::LengthMismatch { exact: 5, numeric: 4 }
        );
    }

    #[test]
    fn matrices_are_consistent() {
        let g = noncommuting_graph(&build::dihedral(3).unwrap()).unwrap();
        let n = g.n();
        let a = matrix_i64(&g, MatrixKind::Adjacency);
        let l = matrix_i64(&g, MatrixKind::Laplacian);
        let q = matrix_i64(&g, MatrixKind::SignlessLaplacian);
        for i in 0..n {
            assert_eq!(l[i].iter().sum::<i64>(), 0, "Laplacian row sums vanish");
            for j in 0..n {
                assert!(q[i][j] >= 0);
                // Q - L = 2A and Q + L = 2D.
                assert_eq!(q[i][j] - l[i][j], 2 * a[i][j]);
            }
        }
        // Adjacency trace 0; degree multiset from the shape (n - p per part).
        assert_eq!((0..n).map(|i| a[i][i]).sum::<i64>(), 0);
    }

    #[test]
    fn numeric_trace_identities() {
        let g = noncommuting_graph(&build::dicyclic(3).unwrap()).unwrap();
        for kind in MatrixKind::ALL {
            let s = eigenvalues_sym(&matrix_f64(&g, kind), g.n(), DEFAULT_JACOBI_TOL).unwrap();
            assert!(trace_identity_numeric_ok(kind, &s, g.edge_count()), "{:?}", kind);
        }
    }
}

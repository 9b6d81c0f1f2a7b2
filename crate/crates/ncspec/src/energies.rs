//! Graph energies and energy-based classification.
//!
//! For a graph with `n` vertices, `m` edges, adjacency eigenvalues `λ`,
//! Laplacian eigenvalues `β` and signless-Laplacian eigenvalues `γ`:
//!
//! * energy `E = Σ |λ|`;
//! * Laplacian energy `LE = Σ |β − 2m/n|`;
//! * signless-Laplacian energy `LE⁺ = Σ |γ − 2m/n|`.
//!
//! A graph is hypoenergetic when `E < n`, hyperenergetic when
//! `E > 2(n−1)` (the complete-graph energy), and L-/Q-hyperenergetic when
//! `LE` / `LE⁺` exceed that same reference. All comparisons are strict; the
//! complete graph itself gets no flag. Comparisons and equality detection
//! run in exact surd arithmetic whenever the spectrum is exact, and fall
//! back to tolerance-based float comparison otherwise.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::spectra::ExactSpectrum;
use crate::surd::{rat_int, Rat, SurdSum};

/// An energy: always a float, plus the exact value when the underlying
/// spectrum was exact.
#[derive(Clone, Debug)]
pub struct EnergyValue {
    pub value: f64,
    pub exact: Option<SurdSum>,
}

impl EnergyValue {
    pub fn from_exact(exact: SurdSum) -> Self {
        EnergyValue { value: exact.to_f64(), exact: Some(exact) }
    }

    pub fn from_numeric(value: f64) -> Self {
        EnergyValue { value, exact: None }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Exact comparison against a rational threshold when possible.
    fn cmp_rational(&self, threshold: &Rat, tol: f64) -> Ordering {
        match &self.exact {
            Some(exact) => exact.cmp_exact(&SurdSum::rational(threshold.clone())),
            None => {
                let t = rat_to_f64(threshold);
                if (self.value - t).abs() <= tol {
                    Ordering::Equal
                } else if self.value < t {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl fmt::Display for EnergyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(exact) => write!(f, "{} ({:.6})", exact, self.value),
            None => write!(f, "{:.6}", self.value),
        }
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Spectrum input for the energy functions: exact entries or a plain list
/// of numeric eigenvalues.
#[derive(Clone, Copy, Debug)]
pub enum SpectrumData<'a> {
    Exact(&'a ExactSpectrum),
    Numeric(&'a [f64]),
}

fn deviation_energy(spec: SpectrumData<'_>, center: &Rat) -> EnergyValue {
    match spec {
        SpectrumData::Exact(s) => EnergyValue::from_exact(s.abs_deviation_sum(center)),
        SpectrumData::Numeric(values) => {
            let c = rat_to_f64(center);
            EnergyValue::from_numeric(values.iter().map(|v| (v - c).abs()).sum())
        }
    }
}

/// Mean degree `2m/n` as an exact rational.
pub fn mean_degree(n_vertices: usize, n_edges: usize) -> Rat {
    Rat::new((2 * n_edges as i64).into(), (n_vertices as i64).into())
}

/// `E = Σ |λ|` over an adjacency spectrum.
pub fn graph_energy(spec: SpectrumData<'_>) -> EnergyValue {
    deviation_energy(spec, &Rat::zero())
}

/// `LE = Σ |β − 2m/n|` over a Laplacian spectrum.
pub fn laplacian_energy(spec: SpectrumData<'_>, n_vertices: usize, n_edges: usize) -> EnergyValue {
    deviation_energy(spec, &mean_degree(n_vertices, n_edges))
}

/// `LE⁺ = Σ |γ − 2m/n|` over a signless-Laplacian spectrum.
pub fn signless_laplacian_energy(
    spec: SpectrumData<'_>,
    n_vertices: usize,
    n_edges: usize,
) -> EnergyValue {
    deviation_energy(spec, &mean_degree(n_vertices, n_edges))
}

/// Classification flags; all comparisons strict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub hypoenergetic: bool,
    pub hyperenergetic: bool,
    pub l_hyperenergetic: bool,
    pub q_hyperenergetic: bool,
}

/// Flags from the three energies: hypo `E < n`; hyper `E > 2(n−1)`;
/// L-/Q-hyper `LE`/`LE⁺ > 2(n−1)`. Exact when exact values are present,
/// within `tol` otherwise (values within `tol` of the reference count as
/// equal, hence unflagged).
pub fn classify(
    e: &EnergyValue,
    le: &EnergyValue,
    le_plus: &EnergyValue,
    n_vertices: usize,
    tol: f64,
) -> Flags {
    let n = rat_int(n_vertices as i64);
    let complete = rat_int(2 * (n_vertices as i64 - 1));
    Flags {
        hypoenergetic: e.cmp_rational(&n, tol) == Ordering::Less,
        hyperenergetic: e.cmp_rational(&complete, tol) == Ordering::Greater,
        l_hyperenergetic: le.cmp_rational(&complete, tol) == Ordering::Greater,
        q_hyperenergetic: le_plus.cmp_rational(&complete, tol) == Ordering::Greater,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Less,
    Equal,
    Greater,
}

impl Rel {
    fn from_ordering(o: Ordering) -> Rel {
        match o {
            Ordering::Less => Rel::Less,
            Ordering::Equal => Rel::Equal,
            Ordering::Greater => Rel::Greater,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Less => "<",
            Rel::Equal => "=",
            Rel::Greater => ">",
        }
    }
}

/// Pairwise relations among the three energies. `exact` is true when every
/// pair was decided in exact arithmetic; otherwise equality is only
/// within-tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnergyOrdering {
    pub e_vs_leplus: Rel,
    pub leplus_vs_le: Rel,
    pub exact: bool,
}

impl EnergyOrdering {
    pub fn all_equal(&self) -> bool {
        self.e_vs_leplus == Rel::Equal && self.leplus_vs_le == Rel::Equal
    }

    /// True when `E ≤ LE⁺ ≤ LE`.
    pub fn is_nondecreasing(&self) -> bool {
        self.e_vs_leplus != Rel::Greater && self.leplus_vs_le != Rel::Greater
    }
}

impl fmt::Display for EnergyOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "E {} LE+ {} LE{}",
            self.e_vs_leplus.symbol(),
            self.leplus_vs_le.symbol(),
            if self.exact { "" } else { " (approx)" }
        )
    }
}

fn compare_pair(a: &EnergyValue, b: &EnergyValue, tol: f64) -> (Rel, bool) {
    match (&a.exact, &b.exact) {
        (Some(x), Some(y)) => (Rel::from_ordering(x.cmp_exact(y)), true),
        _ => {
            let rel = if (a.value - b.value).abs() <= tol {
                Rel::Equal
            } else if a.value < b.value {
                Rel::Less
            } else {
                Rel::Greater
            };
            (rel, false)
        }
    }
}

/// Relations `E` vs `LE⁺` vs `LE`, exact whenever both sides of a pair are.
pub fn energy_ordering(
    e: &EnergyValue,
    le_plus: &EnergyValue,
    le: &EnergyValue,
    tol: f64,
) -> EnergyOrdering {
    let (first, first_exact) = compare_pair(e, le_plus, tol);
    let (second, second_exact) = compare_pair(le_plus, le, tol);
    EnergyOrdering { e_vs_leplus: first, leplus_vs_le: second, exact: first_exact && second_exact }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{laplacian_spectrum_clique_complement, a_shape_poly, q_shape_poly};
    use crate::surd::rat_frac;

    fn d6_energies() -> (EnergyValue, EnergyValue, EnergyValue) {
        let shape = [(1usize, 3usize), (2, 1)];
        let aspec = a_shape_poly(&shape).exact_spectrum().unwrap();
        let qspec = q_shape_poly(&shape).exact_spectrum().unwrap();
        let lspec = laplacian_spectrum_clique_complement(&[1, 1, 1, 2]);
        (
            graph_energy(SpectrumData::Exact(&aspec)),
            laplacian_energy(SpectrumData::Exact(&lspec), 5, 9),
            signless_laplacian_energy(SpectrumData::Exact(&qspec), 5, 9),
        )
    }

    #[test]
    fn dihedral6_energy_goldens() {
        let (e, le, le_plus) = d6_energies();
        // E = 2 + 2*sqrt(7)
        let expected_e = SurdSum::rational(rat_int(2)) + SurdSum::radical(rat_int(2), 7);
        assert_eq!(e.exact.as_ref().unwrap(), &expected_e);
        // LE = 42/5
        assert_eq!(le.exact.as_ref().unwrap(), &SurdSum::rational(rat_frac(42, 5)));
        // LE+ = 9/5 + sqrt(33)
        let expected_q = SurdSum::rational(rat_frac(9, 5)) + SurdSum::radical(rat_int(1), 33);
        assert_eq!(le_plus.exact.as_ref().unwrap(), &expected_q);
        assert_eq!(le_plus.exact.as_ref().unwrap().to_string(), "9/5 + sqrt(33)");
        assert!((le_plus.value - 7.544_562_646_538_029).abs() < 1e-12);
    }

    #[test]
    fn dihedral6_classification() {
        let (e, le, le_plus) = d6_energies();
        let flags = classify(&e, &le, &le_plus, 5, 1e-9);
        assert_eq!(
            flags,
            Flags {
                hypoenergetic: false,
                hyperenergetic: false,
                l_hyperenergetic: true,
                q_hyperenergetic: false,
            }
        );
        let ordering = energy_ordering(&e, &le_plus, &le, 1e-9);
        assert!(ordering.exact);
        assert_eq!(ordering.e_vs_leplus, Rel::Less);
        assert_eq!(ordering.leplus_vs_le, Rel::Less);
        assert!(ordering.is_nondecreasing());
    }

    #[test]
    fn complete_graph_gets_no_flags() {
        // K5: all three energies equal 2(n-1) = 8 exactly.
        let shape = [(1usize, 5usize)];
        let aspec = a_shape_poly(&shape).exact_spectrum().unwrap();
        let qspec = q_shape_poly(&shape).exact_spectrum().unwrap();
        let lspec = laplacian_spectrum_clique_complement(&[1, 1, 1, 1, 1]);
        let e = graph_energy(SpectrumData::Exact(&aspec));
        let le = laplacian_energy(SpectrumData::Exact(&lspec), 5, 10);
        let le_plus = signless_laplacian_energy(SpectrumData::Exact(&qspec), 5, 10);
        for v in [&e, &le, &le_plus] {
            assert_eq!(v.exact.as_ref().unwrap(), &SurdSum::rational(rat_int(8)));
        }
        let flags = classify(&e, &le, &le_plus, 5, 1e-9);
        assert_eq!(
            flags,
            Flags {
                hypoenergetic: false,
                hyperenergetic: false,
                l_hyperenergetic: false,
                q_hyperenergetic: false,
            }
        );
        assert!(energy_ordering(&e, &le_plus, &le, 1e-9).all_equal());
    }

    #[test]
    fn quaternion8_equality_is_exact() {
        // Shape of the order-8 dihedral and quaternion graphs: three parts
        // of size 2; complement cliques [2,2,2]. All energies equal 8.
        let shape = [(2usize, 3usize)];
        let aspec = a_shape_poly(&shape).exact_spectrum().unwrap();
        let qspec = q_shape_poly(&shape).exact_spectrum().unwrap();
        let lspec = laplacian_spectrum_clique_complement(&[2, 2, 2]);
        let e = graph_energy(SpectrumData::Exact(&aspec));
        let le = laplacian_energy(SpectrumData::Exact(&lspec), 6, 12);
        let le_plus = signless_laplacian_energy(SpectrumData::Exact(&qspec), 6, 12);
        let ordering = energy_ordering(&e, &le_plus, &le, 1e-9);
        assert!(ordering.all_equal());
        assert!(ordering.exact);
        assert_eq!(e.exact.as_ref().unwrap(), &SurdSum::rational(rat_int(8)));
    }

    #[test]
    fn numeric_path_is_approximate() {
        let e = EnergyValue::from_numeric(8.0);
        let le = EnergyValue::from_numeric(8.0 + 1e-12);
        let ordering = energy_ordering(&e, &le, &le, 1e-9);
        assert!(ordering.all_equal());
        assert!(!ordering.exact);
        assert_eq!(ordering.to_string(), "E = LE+ = LE (approx)");

        // Within-tolerance values do not set strict flags.
        let flags = classify(
            &EnergyValue::from_numeric(8.0 + 1e-12),
            &EnergyValue::from_numeric(8.0),
            &EnergyValue::from_numeric(8.0),
            5,
            1e-9,
        );
        assert!(!flags.hyperenergetic);
    }

    #[test]
    fn mean_degree_is_exact() {
        assert_eq!(mean_degree(5, 9), rat_frac(18, 5));
        assert_eq!(mean_degree(23, 228), rat_frac(456, 23));
    }
}

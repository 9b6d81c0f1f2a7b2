//! Closed-form spectra and energies for the supported group families.
//!
//! Every family in [`Family`] names a class of finite non-abelian groups
//! whose non-commuting graph is complete multipartite with a known shape.
//! For each family this module states, as exact arithmetic:
//!
//! * the multipartite shape of the graph ([`ClosedForm::expected_shape`]),
//! * the full signless-Laplacian spectrum ([`ClosedForm::closed_qspec`]),
//!   plus adjacency/Laplacian spectra where a closed display exists,
//! * the three energies `E`, `LE`, `LE⁺` ([`ClosedForm::closed_energies`]),
//!   with their piecewise case splits,
//! * expected classification flags and the perfect-square criterion that
//!   decides Q-integrality, where one applies.
//!
//! These formulas are written down independently of the spectral machinery
//! in [`crate::spectra`]; the verification suite recomputes everything from
//! explicitly constructed groups and compares the two routes exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::energies::Flags;
use crate::groups::{build, Group, GroupError};
use crate::integrality::SquareKind;
use crate::spectra::ExactSpectrum;
use crate::surd::{Rat, Surd, SurdSum};

/// Errors from closed-form evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedFormError {
    /// The parameter tuple lies outside the range for which the family's
    /// formulas are stated.
    ParameterOutOfTheoremRange { family: &'static str, detail: String },
}

impl fmt::Display for ClosedFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormError::ParameterOutOfTheoremRange { family, detail } => {
                write!(f, "{family}: parameter out of range: {detail}")
            }
        }
    }
}

impl std::error::Error for ClosedFormError {}

/// A group family with its parameters. Construct freely; call
/// [`Family::validated`] to obtain a [`ClosedForm`] whose accessors are
/// infallible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Dihedral groups of order `2m`, `m` odd, `m ≥ 3`.
    Dihedral1 { m: u64 },
    /// Dihedral groups of order `2m`, `m` even, `m ≥ 4`.
    Dihedral2 { m: u64 },
    /// Quasidihedral groups of order `2^n`, `n ≥ 4`.
    Quasidihedral { n: u64 },
    /// `⟨a,b : a^r = b^(2s) = 1, bab⁻¹ = a⁻¹⟩` of order `2rs`, `r` odd `≥ 3`.
    M2rs1 { r: u64, s: u64 },
    /// Same presentation with `r` even `≥ 4`.
    M2rs2 { r: u64, s: u64 },
    /// Dicyclic groups of order `4n`, `n ≥ 2`.
    Dicyclic { n: u64 },
    /// `⟨a,b : a^(2n) = b³ = 1, a⁻¹ba = b⁻¹⟩` of order `6n`, `n ≥ 1`.
    U6n { n: u64 },
    /// Semidihedral groups of order `8n`, `n` odd `≥ 3`.
    SD8n1 { n: u64 },
    /// Semidihedral groups of order `8n`, `n` even `≥ 2`.
    SD8n2 { n: u64 },
    /// The order-`8n` bi-twisted product family, `n` odd `≥ 3`.
    V8n1 { n: u64 },
    /// The same family with `n` even `≥ 2`.
    V8n2 { n: u64 },
    /// Frobenius groups `Z_p ⋊ Z_q` with `p > q` primes and `q | p−1`.
    FrobeniusPQ { p: u64, q: u64 },
    /// Unitriangular matrix groups over `GF(2^n)` of order `2^(2n)`, `n ≥ 2`.
    HanakiV { n: u64 },
    /// Unitriangular matrix groups over `GF(p^n)` of order `p^(3n)`, `n ≥ 1`.
    HanakiP { n: u64, p: u64 },
    /// Any group whose central quotient is dihedral of order `2m` (`m ≥ 3`)
    /// with center size `z`.
    QuotientDihedral { m: u64, z: u64 },
    /// Any group whose central quotient is `Z_p × Z_p` with center size `z`.
    QuotientZpZp { p: u64, z: u64 },
    /// Any group whose central quotient is the order-20 Frobenius group
    /// `Z_5 ⋊ Z_4` with center size `z`.
    QuotientSz2 { z: u64 },
}

/// All catalog identifiers, in display order.
pub const FAMILY_IDS: [&str; 17] = [
    "Dihedral1",
    "Dihedral2",
    "Quasidihedral",
    "M_2rs1",
    "M_2rs2",
    "Dicyclic",
    "U6n",
    "SD_8n1",
    "SD_8n2",
    "V_8n1",
    "V_8n2",
    "FrobeniusPQ",
    "HanakiV",
    "HanakiP",
    "QuotientDihedral",
    "QuotientZpZp",
    "QuotientSz2",
];

fn rint(v: i128) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

fn rq(n: i128, d: i128) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn ss_rat(n: i128, d: i128) -> SurdSum {
    SurdSum::rational(rq(n, d))
}

fn ss_int(v: i128) -> SurdSum {
    SurdSum::rational(rint(v))
}

/// `c·sqrt(k)` as a sum term.
fn ss_rad(c: Rat, k: u64) -> SurdSum {
    SurdSum::radical(c, k)
}

/// The conjugate pair `(base ± coeff·sqrt(d))`, each with multiplicity 1.
fn qpair(base: Rat, coeff: Rat, d: u64) -> [(Surd, usize); 2] {
    [
        (Surd::new(base.clone(), coeff.clone(), d), 1),
        (Surd::new(base, -coeff, d), 1),
    ]
}

fn int_entry(value: i128, mult: u64) -> (Surd, usize) {
    (Surd::rational(rint(value)), mult as usize)
}

/// Exact values of the three energies of one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedEnergies {
    pub e: SurdSum,
    pub le: SurdSum,
    pub le_plus: SurdSum,
}

impl Family {
    /// Catalog identifier, stable across releases.
    pub fn id(&self) -> &'static str {
        match self {
            Family::Dihedral1 { .. } => "Dihedral1",
            Family::Dihedral2 { .. } => "Dihedral2",
            Family::Quasidihedral { .. } => "Quasidihedral",
            Family::M2rs1 { .. } => "M_2rs1",
            Family::M2rs2 { .. } => "M_2rs2",
            Family::Dicyclic { .. } => "Dicyclic",
            Family::U6n { .. } => "U6n",
            Family::SD8n1 { .. } => "SD_8n1",
            Family::SD8n2 { .. } => "SD_8n2",
            Family::V8n1 { .. } => "V_8n1",
            Family::V8n2 { .. } => "V_8n2",
            Family::FrobeniusPQ { .. } => "FrobeniusPQ",
            Family::HanakiV { .. } => "HanakiV",
            Family::HanakiP { .. } => "HanakiP",
            Family::QuotientDihedral { .. } => "QuotientDihedral",
            Family::QuotientZpZp { .. } => "QuotientZpZp",
            Family::QuotientSz2 { .. } => "QuotientSz2",
        }
    }

    /// Parameter list as `name=value` pairs.
    pub fn params(&self) -> String {
        match *self {
            Family::Dihedral1 { m } | Family::Dihedral2 { m } => format!("m={m}"),
            Family::Quasidihedral { n } => format!("n={n}"),
            Family::M2rs1 { r, s } | Family::M2rs2 { r, s } => format!("r={r},s={s}"),
            Family::Dicyclic { n }
            | Family::U6n { n }
            | Family::SD8n1 { n }
            | Family::SD8n2 { n }
            | Family::V8n1 { n }
            | Family::V8n2 { n }
            | Family::HanakiV { n } => format!("n={n}"),
            Family::FrobeniusPQ { p, q } => format!("p={p},q={q}"),
            Family::HanakiP { n, p } => format!("n={n},p={p}"),
            Family::QuotientDihedral { m, z } => format!("m={m},z={z}"),
            Family::QuotientZpZp { p, z } => format!("p={p},z={z}"),
            Family::QuotientSz2 { z } => format!("z={z}"),
        }
    }

    /// Ordered parameter names for this family's identifier.
    pub fn param_names(id: &str) -> Option<&'static [&'static str]> {
        Some(match normalize_id(id)?.as_str() {
            "dihedral1" | "dihedral2" => &["m"],
            "quasidihedral" => &["n"],
            "m2rs1" | "m2rs2" => &["r", "s"],
            "dicyclic" | "u6n" | "sd8n1" | "sd8n2" | "v8n1" | "v8n2" | "hanakiv" => &["n"],
            "frobeniuspq" => &["p", "q"],
            "hanakip" => &["n", "p"],
            "quotientdihedral" => &["m", "z"],
            "quotientzpzp" => &["p", "z"],
            "quotientsz2" => &["z"],
            _ => return None,
        })
    }

    /// Builds a family value from its identifier and ordered parameter
    /// values (in [`Family::param_names`] order). Range is not checked here.
    pub fn from_params(id: &str, vals: &[u64]) -> Option<Family> {
        let key = normalize_id(id)?;
        let arity = Self::param_names(id)?.len();
        if vals.len() != arity {
            return None;
        }
        Some(match key.as_str() {
            "dihedral1" => Family::Dihedral1 { m: vals[0] },
            "dihedral2" => Family::Dihedral2 { m: vals[0] },
            "quasidihedral" => Family::Quasidihedral { n: vals[0] },
            "m2rs1" => Family::M2rs1 { r: vals[0], s: vals[1] },
            "m2rs2" => Family::M2rs2 { r: vals[0], s: vals[1] },
            "dicyclic" => Family::Dicyclic { n: vals[0] },
            "u6n" => Family::U6n { n: vals[0] },
            "sd8n1" => Family::SD8n1 { n: vals[0] },
            "sd8n2" => Family::SD8n2 { n: vals[0] },
            "v8n1" => Family::V8n1 { n: vals[0] },
            "v8n2" => Family::V8n2 { n: vals[0] },
            "frobeniuspq" => Family::FrobeniusPQ { p: vals[0], q: vals[1] },
            "hanakiv" => Family::HanakiV { n: vals[0] },
            "hanakip" => Family::HanakiP { n: vals[0], p: vals[1] },
            "quotientdihedral" => Family::QuotientDihedral { m: vals[0], z: vals[1] },
            "quotientzpzp" => Family::QuotientZpZp { p: vals[0], z: vals[1] },
            "quotientsz2" => Family::QuotientSz2 { z: vals[0] },
            _ => return None,
        })
    }

    /// Checks that the parameters lie in the stated range of the family's
    /// formulas (including parity constraints).
    pub fn check_range(&self) -> Result<(), ClosedFormError> {
        let err = |detail: String| {
            Err(ClosedFormError::ParameterOutOfTheoremRange { family: self.id(), detail })
        };
        match *self {
            Family::Dihedral1 { m } => {
                if m < 3 || m % 2 == 0 {
                    return err(format!("need m odd and m >= 3, got m={m}"));
                }
            }
            Family::Dihedral2 { m } => {
                if m < 4 || m % 2 == 1 {
                    return err(format!("need m even and m >= 4, got m={m}"));
                }
            }
            Family::Quasidihedral { n } => {
                if !(4..=40).contains(&n) {
                    return err(format!("need 4 <= n <= 40, got n={n}"));
                }
            }
            Family::M2rs1 { r, s } => {
                if r < 3 || r % 2 == 0 || s < 1 {
                    return err(format!("need r odd, r >= 3, s >= 1, got r={r},s={s}"));
                }
            }
            Family::M2rs2 { r, s } => {
                if r < 4 || r % 2 == 1 || s < 1 {
                    return err(format!("need r even, r >= 4, s >= 1, got r={r},s={s}"));
                }
            }
            Family::Dicyclic { n } => {
                if n < 2 {
                    return err(format!("need n >= 2, got n={n}"));
                }
            }
            Family::U6n { n } => {
                if n < 1 {
                    return err(format!("need n >= 1, got n={n}"));
                }
            }
            Family::SD8n1 { n } | Family::V8n1 { n } => {
                if n < 3 || n % 2 == 0 {
                    return err(format!("need n odd and n >= 3, got n={n}"));
                }
            }
            Family::SD8n2 { n } | Family::V8n2 { n } => {
                if n < 2 || n % 2 == 1 {
                    return err(format!("need n even and n >= 2, got n={n}"));
                }
            }
            Family::FrobeniusPQ { p, q } => {
                if !crate::gf::is_prime(p) || !crate::gf::is_prime(q) {
                    return err(format!("need p and q prime, got p={p},q={q}"));
                }
                if p <= q || (p - 1) % q != 0 {
                    return err(format!("need p > q and q | p-1, got p={p},q={q}"));
                }
            }
            Family::HanakiV { n } => {
                if !(2..=20).contains(&n) {
                    return err(format!("need 2 <= n <= 20, got n={n}"));
                }
            }
            Family::HanakiP { n, p } => {
                if n < 1 || !crate::gf::is_prime(p) {
                    return err(format!("need n >= 1 and p prime, got n={n},p={p}"));
                }
                if p.checked_pow((3 * n) as u32).is_none() {
                    return err(format!("p^(3n) overflows: n={n},p={p}"));
                }
            }
            Family::QuotientDihedral { m, z } => {
                if m < 3 || z < 1 {
                    return err(format!("need m >= 3 and z >= 1, got m={m},z={z}"));
                }
            }
            Family::QuotientZpZp { p, z } => {
                if !crate::gf::is_prime(p) || z < 1 {
                    return err(format!("need p prime and z >= 1, got p={p},z={z}"));
                }
            }
            Family::QuotientSz2 { z } => {
                if z < 1 {
                    return err(format!("need z >= 1, got z={z}"));
                }
            }
        }
        Ok(())
    }

    /// Range-checks the parameters and wraps the family for infallible
    /// formula evaluation.
    pub fn validated(self) -> Result<ClosedForm, ClosedFormError> {
        self.check_range()?;
        Ok(ClosedForm(self))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.id(), self.params())
    }
}

fn normalize_id(id: &str) -> Option<String> {
    let key: String =
        id.chars().filter(|c| c.is_ascii_alphanumeric()).map(|c| c.to_ascii_lowercase()).collect();
    if key.is_empty() {
        None
    } else {
        Some(key)
    }
}

/// Canonical spelling of a family identifier, matched ignoring case and
/// punctuation; `None` when the identifier names no catalog family.
pub fn normalize_family_id(id: &str) -> Option<&'static str> {
    let key = normalize_id(id)?;
    FAMILY_IDS.iter().copied().find(|c| normalize_id(c).as_deref() == Some(key.as_str()))
}

/// Sorts `(part size, part count)` pairs ascending by size and merges equal
/// sizes — the normal form produced by shape detection on a graph.
fn normalize_shape(parts: &[(u64, u64)]) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = parts
        .iter()
        .filter(|&&(_, count)| count > 0)
        .map(|&(size, count)| (size as usize, count as usize))
        .collect();
    v.sort_unstable();
    let mut merged: Vec<(usize, usize)> = Vec::new();
    for (size, count) in v {
        match merged.last_mut() {
            Some((s, c)) if *s == size => *c += count,
            _ => merged.push((size, count)),
        }
    }
    merged
}

/// A range-checked family; every accessor is a total function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForm(Family);

impl ClosedForm {
    pub fn family(&self) -> Family {
        self.0
    }

    /// Order of the groups in the family at these parameters.
    pub fn group_order(&self) -> u64 {
        match self.0 {
            Family::Dihedral1 { m } | Family::Dihedral2 { m } => 2 * m,
            Family::Quasidihedral { n } => 1u64 << n,
            Family::M2rs1 { r, s } | Family::M2rs2 { r, s } => 2 * r * s,
            Family::Dicyclic { n } => 4 * n,
            Family::U6n { n } => 6 * n,
            Family::SD8n1 { n } | Family::SD8n2 { n } => 8 * n,
            Family::V8n1 { n } | Family::V8n2 { n } => 8 * n,
            Family::FrobeniusPQ { p, q } => p * q,
            Family::HanakiV { n } => 1u64 << (2 * n),
            Family::HanakiP { n, p } => p.pow((3 * n) as u32),
            Family::QuotientDihedral { m, z } => 2 * m * z,
            Family::QuotientZpZp { p, z } => p * p * z,
            Family::QuotientSz2 { z } => 20 * z,
        }
    }

    /// Size of the center of any group in the family.
    pub fn center_size(&self) -> u64 {
        match self.0 {
            Family::Dihedral1 { .. } | Family::FrobeniusPQ { .. } => 1,
            Family::Dihedral2 { .. }
            | Family::Quasidihedral { .. }
            | Family::Dicyclic { .. }
            | Family::SD8n2 { .. }
            | Family::V8n1 { .. } => 2,
            Family::M2rs1 { s, .. } => s,
            Family::M2rs2 { s, .. } => 2 * s,
            Family::U6n { n } => n,
            Family::SD8n1 { .. } | Family::V8n2 { .. } => 4,
            Family::HanakiV { n } => 1u64 << n,
            Family::HanakiP { n, p } => p.pow(n as u32),
            Family::QuotientDihedral { z, .. }
            | Family::QuotientZpZp { z, .. }
            | Family::QuotientSz2 { z } => z,
        }
    }

    /// Number of vertices of the non-commuting graph.
    pub fn n_vertices(&self) -> u64 {
        self.group_order() - self.center_size()
    }

    /// Number of edges of the non-commuting graph, from the shape.
    pub fn n_edges(&self) -> u64 {
        let shape = self.expected_shape();
        let n: u64 = shape.iter().map(|&(size, count)| (size * count) as u64).sum();
        let sq: u64 = shape.iter().map(|&(size, count)| (size * size * count) as u64).sum();
        (n * n - sq) / 2
    }

    /// The multipartite shape `(part size, part count)` of the graph,
    /// ascending by size with equal sizes merged.
    pub fn expected_shape(&self) -> Vec<(usize, usize)> {
        let parts: Vec<(u64, u64)> = match self.0 {
            Family::Dihedral1 { m } => vec![(1, m), (m - 1, 1)],
            Family::Dihedral2 { m } => vec![(2, m / 2), (m - 2, 1)],
            Family::Quasidihedral { n } => {
                vec![(2, 1 << (n - 2)), ((1 << (n - 1)) - 2, 1)]
            }
            Family::M2rs1 { r, s } => vec![(s, r), ((r - 1) * s, 1)],
            Family::M2rs2 { r, s } => vec![(2 * s, r / 2), ((r - 2) * s, 1)],
            Family::Dicyclic { n } => vec![(2, n), (2 * n - 2, 1)],
            Family::U6n { n } => vec![(n, 3), (2 * n, 1)],
            Family::SD8n1 { n } | Family::V8n2 { n } => vec![(4, n), (4 * n - 4, 1)],
            Family::SD8n2 { n } | Family::V8n1 { n } => vec![(2, 2 * n), (4 * n - 2, 1)],
            Family::FrobeniusPQ { p, q } => vec![(q - 1, p), (p - 1, 1)],
            Family::HanakiV { n } => vec![(1 << n, (1 << n) - 1)],
            Family::HanakiP { n, p } => {
                let pn = p.pow(n as u32);
                vec![(pn * pn - pn, pn + 1)]
            }
            Family::QuotientDihedral { m, z } => vec![(z, m), ((m - 1) * z, 1)],
            Family::QuotientZpZp { p, z } => vec![((p - 1) * z, p + 1)],
            Family::QuotientSz2 { z } => vec![(3 * z, 5), (4 * z, 1)],
        };
        let shape = normalize_shape(&parts);
        debug_assert_eq!(
            shape.iter().map(|&(size, count)| (size * count) as u64).sum::<u64>(),
            self.n_vertices()
        );
        shape
    }

    /// Sizes of the cliques forming the complement of the graph (the parts
    /// of the multipartite shape, with repetition), ascending.
    pub fn clique_sizes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (size, count) in self.expected_shape() {
            out.extend(std::iter::repeat_n(size, count));
        }
        out
    }

    /// The closed-form signless-Laplacian spectrum.
    pub fn closed_qspec(&self) -> ExactSpectrum {
        let mut entries: Vec<(Surd, usize)> = Vec::new();
        match self.0 {
            Family::Dihedral1 { m } => {
                let m = m as i128;
                entries.push(int_entry(m, (m - 2) as u64));
                entries.push(int_entry(2 * m - 3, (m - 1) as u64));
                entries.extend(qpair(
                    rq(4 * m - 3, 2),
                    rq(1, 2),
                    (8 * m * m - 16 * m + 9) as u64,
                ));
            }
            Family::Dihedral2 { m } => {
                let m = m as i128;
                entries.push(int_entry(2 * m - 4, (m / 2) as u64));
                entries.push(int_entry(m, (m - 3) as u64));
                entries.push(int_entry(2 * m - 6, (m / 2 - 1) as u64));
                entries.extend(qpair(
                    rint(2 * m - 3),
                    Rat::one(),
                    (2 * m * m - 8 * m + 9) as u64,
                ));
            }
            Family::Quasidihedral { n } => {
                let pow = |e: u64| 1i128 << e;
                entries.push(int_entry(pow(n) - 4, (pow(n - 2)) as u64));
                entries.push(int_entry(pow(n - 1), (pow(n - 1) - 3) as u64));
                entries.push(int_entry(pow(n) - 6, (pow(n - 2) - 1) as u64));
                entries.extend(qpair(
                    rint(pow(n) - 3),
                    Rat::one(),
                    (pow(2 * n - 1) - pow(n + 2) + 9) as u64,
                ));
            }
            Family::M2rs1 { r, s } => {
                let (r, s) = (r as i128, s as i128);
                entries.push(int_entry(2 * s * (r - 1), (r * (s - 1)) as u64));
                entries.push(int_entry(r * s, ((r - 1) * s - 1) as u64));
                entries.push(int_entry((2 * r - 3) * s, (r - 1) as u64));
                entries.extend(qpair(
                    rq(s * (4 * r - 3), 2),
                    rq(s, 2),
                    (8 * r * r - 16 * r + 9) as u64,
                ));
            }
            Family::M2rs2 { r, s } => {
                let (r, s) = (r as i128, s as i128);
                entries.push(int_entry(2 * s * (r - 2), (r * s - r / 2) as u64));
                entries.push(int_entry(r * s, (r * s - 2 * s - 1) as u64));
                entries.push(int_entry(2 * s * (r - 3), (r / 2 - 1) as u64));
                entries.extend(qpair(
                    rint(s * (2 * r - 3)),
                    rint(s),
                    (2 * r * r - 8 * r + 9) as u64,
                ));
            }
            Family::Dicyclic { n } => {
                let n = n as i128;
                entries.push(int_entry(4 * n - 4, n as u64));
                entries.push(int_entry(2 * n, (2 * n - 3) as u64));
                entries.push(int_entry(4 * n - 6, (n - 1) as u64));
                entries.extend(qpair(
                    rint(4 * n - 3),
                    Rat::one(),
                    (8 * n * n - 16 * n + 9) as u64,
                ));
            }
            Family::U6n { n } => {
                let n = n as i128;
                entries.push(int_entry(3 * n, (2 * n + 1) as u64));
                entries.push(int_entry(4 * n, (3 * n - 3) as u64));
                entries.extend(qpair(rq(9 * n, 2), rq(n, 2), 33));
            }
            Family::SD8n1 { n } | Family::V8n2 { n } => {
                let n = n as i128;
                entries.push(int_entry(8 * n - 8, (3 * n) as u64));
                entries.push(int_entry(4 * n, (4 * n - 5) as u64));
                entries.push(int_entry(8 * n - 12, (n - 1) as u64));
                entries.extend(qpair(
                    rint(8 * n - 6),
                    rint(2),
                    (8 * n * n - 16 * n + 9) as u64,
                ));
            }
            Family::SD8n2 { n } | Family::V8n1 { n } => {
                let n = n as i128;
                entries.push(int_entry(8 * n - 4, (2 * n) as u64));
                entries.push(int_entry(4 * n, (4 * n - 3) as u64));
                entries.push(int_entry(8 * n - 6, (2 * n - 1) as u64));
                entries.extend(qpair(
                    rint(8 * n - 3),
                    Rat::one(),
                    (32 * n * n - 32 * n + 9) as u64,
                ));
            }
            Family::FrobeniusPQ { p, q } => {
                let (p, q) = (p as i128, q as i128);
                entries.push(int_entry(p * q - p, (p - 2) as u64));
                entries.push(int_entry(p * q - q, (p * (q - 2)) as u64));
                entries.push(int_entry(p * q - 2 * q + 1, (p - 1) as u64));
                let disc = p * q * (p * q - 2) + 4 * (p - q) * (p * q - p - q + 1) + 1;
                entries.extend(qpair(
                    rq(3 * p * q - 2 * p - 2 * q + 1, 2),
                    rq(1, 2),
                    disc as u64,
                ));
            }
            Family::HanakiV { n } => {
                let pow = |e: u64| 1i128 << e;
                entries.push(int_entry(
                    pow(2 * n) - pow(n + 1),
                    (pow(2 * n) - pow(n + 1) + 1) as u64,
                ));
                entries.push(int_entry(pow(2 * n) - 3 * pow(n), (pow(n) - 2) as u64));
                entries.push(int_entry(pow(2 * n + 1) - pow(n + 2), 1));
            }
            Family::HanakiP { n, p } => {
                let pn = (p as i128).pow(n as u32);
                let (p2, p3) = (pn * pn, pn * pn * pn);
                entries.push(int_entry(p3 - p2, ((pn + 1) * (p2 - pn - 1)) as u64));
                entries.push(int_entry(p3 - 2 * p2 + pn, pn as u64));
                entries.push(int_entry(2 * p3 - 2 * p2, 1));
            }
            Family::QuotientDihedral { m, z } => {
                let (m, z) = (m as i128, z as i128);
                entries.push(int_entry((2 * m - 2) * z, (m * (z - 1)) as u64));
                entries.push(int_entry(m * z, ((m - 1) * z - 1) as u64));
                entries.push(int_entry((2 * m - 3) * z, (m - 1) as u64));
                entries.extend(qpair(
                    rq(z * (4 * m - 3), 2),
                    rq(z, 2),
                    (8 * m * m - 16 * m + 9) as u64,
                ));
            }
            Family::QuotientZpZp { p, z } => {
                let (p, z) = (p as i128, z as i128);
                entries.push(int_entry(
                    p * z * (p - 1),
                    ((p * p - 1) * z - (p + 1)) as u64,
                ));
                entries.push(int_entry(z * (p - 1) * (p - 1), p as u64));
                entries.push(int_entry(2 * p * z * (p - 1), 1));
            }
            Family::QuotientSz2 { z } => {
                let z = z as i128;
                entries.push(int_entry(16 * z, (15 * z - 5) as u64));
                entries.push(int_entry(15 * z, (4 * z - 1) as u64));
                entries.push(int_entry(13 * z, 4));
                entries.extend(qpair(rq(43 * z, 2), rq(z, 2), 409));
            }
        }
        let spec = ExactSpectrum::new(entries);
        debug_assert_eq!(spec.total_multiplicity() as u64, self.n_vertices());
        spec
    }

    /// Closed-form Laplacian spectrum, where the family states one.
    pub fn closed_lspec(&self) -> Option<ExactSpectrum> {
        match self.0 {
            Family::V8n2 { n } => {
                let n = n as i128;
                Some(ExactSpectrum::new(vec![
                    int_entry(0, 1),
                    int_entry(4 * n, (4 * n - 5) as u64),
                    int_entry(8 * n - 8, (3 * n) as u64),
                    int_entry(8 * n - 4, n as u64),
                ]))
            }
            _ => None,
        }
    }

    /// Closed-form adjacency spectrum, where the family states one.
    pub fn closed_aspec(&self) -> Option<ExactSpectrum> {
        match self.0 {
            Family::V8n2 { n } => {
                let ni = n as i128;
                let mut entries = vec![int_entry(0, 7 * n - 5), int_entry(-4, n - 1)];
                entries.extend(qpair(
                    rint(2 * (ni - 1)),
                    rint(2),
                    ((ni - 1) * (5 * ni - 1)) as u64,
                ));
                Some(ExactSpectrum::new(entries))
            }
            Family::QuotientSz2 { z } => {
                let zi = z as i128;
                let mut entries = vec![int_entry(0, 19 * z - 6), int_entry(-3 * zi, 4)];
                entries.extend(qpair(rint(6 * zi), rint(4 * zi), 6));
                Some(ExactSpectrum::new(entries))
            }
            _ => None,
        }
    }

    /// The three closed-form energies, with piecewise case splits.
    pub fn closed_energies(&self) -> ClosedEnergies {
        match self.0 {
            Family::Dihedral1 { m } => energies_k_mz(m, 1),
            Family::M2rs1 { r, s } => energies_k_mz(r, s),
            Family::QuotientDihedral { m, z } => energies_k_mz(m, z),
            Family::Dihedral2 { m } => energies_k_r2s(m, 1),
            Family::M2rs2 { r, s } => energies_k_r2s(r, s),
            Family::Quasidihedral { n } => energies_k_r2s(1 << (n - 1), 1),
            Family::Dicyclic { n } => {
                let ni = n as i128;
                let e = ss_int(2 * (ni - 1))
                    + ss_rad(rint(2), ((ni - 1) * (5 * ni - 1)) as u64);
                let le = ss_rat(8 * ni * (ni - 1) * (ni - 2) + 4 * ni * (2 * ni - 1), 2 * ni - 1);
                let rational = if n <= 4 {
                    ss_rat(4 * ni * ni * ni - 8 * ni * ni + 6, 2 * ni - 1)
                } else {
                    ss_rat(8 * ni * ni * ni - 32 * ni * ni + 32 * ni - 6, 2 * ni - 1)
                };
                let le_plus =
                    rational + ss_rad(rint(2), (8 * ni * ni - 16 * ni + 9) as u64);
                ClosedEnergies { e, le, le_plus }
            }
            Family::U6n { n } => {
                let ni = n as i128;
                ClosedEnergies {
                    e: ss_int(2 * ni) + ss_rad(rint(2 * ni), 7),
                    le: ss_rat(12 * ni * ni + 30 * ni, 5),
                    le_plus: ss_rat(12 * ni * ni - 3 * ni, 5) + ss_rad(rint(ni), 33),
                }
            }
            Family::SD8n1 { n } | Family::V8n2 { n } => energies_k_n4(n),
            Family::SD8n2 { n } | Family::V8n1 { n } => energies_k_2n2(n),
            Family::FrobeniusPQ { p, q } => {
                let (p, q) = (p as i128, q as i128);
                let alpha = (p - 1) * (q - 1);
                let e = ss_int(alpha) + ss_rad(Rat::one(), (alpha * alpha + 4 * p * alpha) as u64);
                let le = ss_rat(2 * p * p * alpha + 2 * p * (q - 1) * (q - 1), p * q - 1);
                // Rational part of LE⁺: the base numerator plus a correction
                // that switches on when the (pq−2q+1)-eigenvalue lies above
                // the mean degree (which happens only for q = 2, p ≥ 5).
                let base = 2 * p * p * p * q - p * p * q * q + 2 * p * q * q
                    - 6 * p * q
                    - 4 * p * p * p
                    + 6 * p * p
                    + 2 * q
                    - 1;
                let shift = p * p - p * q * q - p + 2 * q - 1;
                let numerator = if shift > 0 { base + 2 * (p - 1) * shift } else { base };
                let disc = p * q * (p * q - 2) + 4 * (p - q) * (p * q - p - q + 1) + 1;
                let le_plus = ss_rat(numerator, p * q - 1) + ss_rad(Rat::one(), disc as u64);
                ClosedEnergies { e, le, le_plus }
            }
            Family::HanakiV { n } => {
                let value = ss_int((1i128 << (2 * n + 1)) - (1i128 << (n + 2)));
                ClosedEnergies { e: value.clone(), le: value.clone(), le_plus: value }
            }
            Family::HanakiP { n, p } => {
                let pn = (p as i128).pow(n as u32);
                let value = ss_int(2 * (pn * pn * pn - pn * pn));
                ClosedEnergies { e: value.clone(), le: value.clone(), le_plus: value }
            }
            Family::QuotientZpZp { p, z } => {
                let value = ss_int(2 * p as i128 * (p as i128 - 1) * z as i128);
                ClosedEnergies { e: value.clone(), le: value.clone(), le_plus: value }
            }
            Family::QuotientSz2 { z } => {
                let zi = z as i128;
                ClosedEnergies {
                    e: ss_int(12 * zi) + ss_rad(rint(8 * zi), 6),
                    le: ss_rat(120 * zi * zi + 570 * zi, 19),
                    le_plus: ss_rat(120 * zi * zi + 177 * zi, 19) + ss_rad(rint(zi), 409),
                }
            }
        }
    }

    /// Constructs one concrete group realizing the family at these
    /// parameters. Quotient families are realized through direct products;
    /// the verification suite asserts (rather than assumes) that the witness
    /// has the right center size and graph shape.
    pub fn build_witness(&self) -> Result<Group, GroupError> {
        match self.0 {
            Family::Dihedral1 { m } | Family::Dihedral2 { m } => build::dihedral(m as usize),
            Family::Quasidihedral { n } => build::quasidihedral(n as u32),
            Family::M2rs1 { r, s } | Family::M2rs2 { r, s } => {
                build::modular_m2rs(r as usize, s as usize)
            }
            Family::Dicyclic { n } => build::dicyclic(n as usize),
            Family::U6n { n } => build::u6n(n as usize),
            Family::SD8n1 { n } | Family::SD8n2 { n } => build::semidihedral_8n(n as usize),
            Family::V8n1 { n } | Family::V8n2 { n } => build::v8n(n as usize),
            Family::FrobeniusPQ { p, q } => build::frobenius(p as usize, q as usize),
            Family::HanakiV { n } => build::hanaki_v(n as u32),
            Family::HanakiP { n, p } => build::hanaki_p(n as u32, p),
            Family::QuotientDihedral { m, z } => {
                if m % 2 == 1 {
                    // Central quotient D_2m with center Z_z: D_2m × Z_z
                    // (the dihedral factor has trivial center for odd m).
                    product_with_cyclic(build::dihedral(m as usize)?, z)
                } else if z % 2 == 0 {
                    // D_4m has center of size 2 and central quotient D_2m.
                    product_with_cyclic(build::dihedral(2 * m as usize)?, z / 2)
                } else {
                    Err(GroupError::Parameter(format!(
                        "no witness construction for even m={m} with odd center size z={z}"
                    )))
                }
            }
            Family::QuotientZpZp { p, z } => {
                if p == 2 && z % 2 == 0 {
                    // D_8 has central quotient Z_2 × Z_2 and center size 2.
                    product_with_cyclic(build::dihedral(4)?, z / 2)
                } else if p != 2 && z % p == 0 {
                    // The order-p³ unitriangular group has central quotient
                    // Z_p × Z_p and center size p.
                    product_with_cyclic(build::hanaki_p(1, p)?, z / p)
                } else {
                    Err(GroupError::Parameter(format!(
                        "no witness construction for p={p} with center size z={z}"
                    )))
                }
            }
            Family::QuotientSz2 { z } => {
                product_with_cyclic(build::frobenius(5, 4)?, z)
            }
        }
    }

    /// The classification the formulas imply for this parameter tuple, or
    /// `None` for families where no claim is made.
    pub fn expected_flags(&self) -> Option<Flags> {
        let (l, q) = match self.0 {
            Family::Dihedral1 { m } => (true, m >= 5),
            Family::Dihedral2 { m } => (m >= 6, m >= 6),
            Family::Quasidihedral { .. } => (true, true),
            Family::M2rs1 { r, s } => (true, !(r == 3 && s == 1)),
            Family::M2rs2 { r, .. } => (r >= 6, r >= 6),
            Family::Dicyclic { n } => (n >= 3, n >= 3),
            Family::U6n { n } => (true, n >= 2),
            Family::SD8n1 { .. } | Family::SD8n2 { .. } | Family::V8n1 { .. } => (true, true),
            Family::V8n2 { n } => (n >= 4, n >= 4),
            Family::FrobeniusPQ { .. } => return None,
            Family::HanakiV { .. } | Family::HanakiP { .. } | Family::QuotientZpZp { .. } => {
                (false, false)
            }
            Family::QuotientDihedral { m, z } => (true, !(z == 1 && (m == 3 || m == 4))),
            Family::QuotientSz2 { z } => (true, z >= 2),
        };
        Some(Flags {
            hypoenergetic: false,
            hyperenergetic: false,
            l_hyperenergetic: l,
            q_hyperenergetic: q,
        })
    }

    /// The perfect-square expression (and its argument) that decides whether
    /// the Q-spectrum is integral, for families governed by one. Families
    /// whose spectra are always integral, or whose quadratic discriminant is
    /// constant, return `None`.
    pub fn q_integral_square_kind(&self) -> Option<(SquareKind, u64)> {
        match self.0 {
            Family::Dihedral1 { m } => Some((SquareKind::K1, m)),
            Family::M2rs1 { r, .. } => Some((SquareKind::K1, r)),
            Family::SD8n1 { n } | Family::V8n2 { n } | Family::Dicyclic { n } => {
                Some((SquareKind::K1, n))
            }
            Family::QuotientDihedral { m, .. } => Some((SquareKind::K1, m)),
            Family::Dihedral2 { m } => Some((SquareKind::K2, m)),
            Family::M2rs2 { r, .. } => Some((SquareKind::K2, r)),
            Family::V8n1 { n } | Family::SD8n2 { n } => Some((SquareKind::K3, n)),
            Family::Quasidihedral { n } => Some((SquareKind::K4, n)),
            _ => None,
        }
    }
}

fn product_with_cyclic(g: Group, k: u64) -> Result<Group, GroupError> {
    if k <= 1 {
        Ok(g)
    } else {
        g.direct_product(&build::cyclic(k as usize)?)
    }
}

/// Energies of `K_{m.z, 1.((m−1)z)}` — the shape shared by the odd dihedral,
/// odd-r modular and dihedral-quotient families. Piecewise in `m` because
/// the deviation of the `(2m−3)z`-eigenvalue from the mean degree changes
/// sign between `m = 4` and `m = 5`.
fn energies_k_mz(m: u64, z: u64) -> ClosedEnergies {
    let (m, z) = (m as i128, z as i128);
    let e = ss_int(z * (m - 1)) + ss_rad(rint(z), ((m - 1) * (5 * m - 1)) as u64);
    let le = ss_rat(z * ((2 * m * m * m - 6 * m * m + 4 * m) * z + 4 * m * m - 2 * m), 2 * m - 1);
    let disc = (8 * m * m - 16 * m + 9) as u64;
    let le_plus = match m {
        3 => ss_rat(12 * z * z - 3 * z, 5) + ss_rad(rint(z), 33),
        4 => ss_rat(48 * z * z - 29 * z, 7) + ss_rad(rint(z), 73),
        _ => {
            ss_rat(
                (2 * m * m * m - 6 * m * m + 4 * m) * z * z - (4 * m * m - 8 * m + 3) * z,
                2 * m - 1,
            ) + ss_rad(rint(z), disc)
        }
    };
    ClosedEnergies { e, le, le_plus }
}

/// Energies of `K_{(r/2).2s, 1.((r−2)s)}` — the shape shared by the even
/// dihedral, even-r modular and quasidihedral families (and, at `r = 2n`,
/// `s = 1`, the dicyclic groups). Piecewise in `r`: the deviation of the
/// `2s(r−3)`-eigenvalue changes sign between `r = 8` and `r = 10`.
fn energies_k_r2s(r: u64, s: u64) -> ClosedEnergies {
    let (r, s) = (r as i128, s as i128);
    let e = ss_int(s * (r - 2)) + ss_rad(rint(s), ((r - 2) * (5 * r - 2)) as u64);
    let le = ss_rat(s * (r * r * r * s - 6 * r * r * s + 8 * r * s + 2 * r * r - 2 * r), r - 1);
    let r3 = r * r * r;
    let rational = if r <= 8 {
        // r³/2 is integral for even r; scale numerator and denominator by 2.
        ss_rat(
            s * (2 * r3 * s - 12 * r * r * s + 16 * r * s - r3 + 8 * r * r - 16 * r + 12),
            2 * (r - 1),
        )
    } else {
        ss_rat(s * (r3 * s - 6 * r * r * s + 8 * r * s - 2 * r * r + 8 * r - 6), r - 1)
    };
    let le_plus = rational + ss_rad(rint(2 * s), (2 * r * r - 8 * r + 9) as u64);
    ClosedEnergies { e, le, le_plus }
}

/// Energies of `K_{n.4, 1.(4n−4)}` (the odd semidihedral and even bi-twisted
/// families). The `(8n−12)`-eigenvalue deviation changes sign between
/// `n = 4` and `n = 5`.
fn energies_k_n4(n: u64) -> ClosedEnergies {
    let n = n as i128;
    let e = ss_int(4 * (n - 1)) + ss_rad(rint(4), ((n - 1) * (5 * n - 1)) as u64);
    let le = ss_rat(8 * n * (4 * n * n - 10 * n + 7), 2 * n - 1);
    let rational = if n <= 4 {
        ss_rat(24 * n * n * n - 64 * n * n + 32 * n + 12, 2 * n - 1)
    } else {
        ss_rat(32 * n * n * n - 112 * n * n + 96 * n - 12, 2 * n - 1)
    };
    let le_plus = rational + ss_rad(rint(4), (8 * n * n - 16 * n + 9) as u64);
    ClosedEnergies { e, le, le_plus }
}

/// Energies of `K_{2n.2, 1.(4n−2)}` (the even semidihedral and odd
/// bi-twisted families). Only `n = 2` has the flipped deviation sign.
fn energies_k_2n2(n: u64) -> ClosedEnergies {
    let n = n as i128;
    let e = ss_int(2 * (2 * n - 1)) + ss_rad(rint(2), ((2 * n - 1) * (10 * n - 1)) as u64);
    let le = ss_rat(8 * n * (8 * n * n - 8 * n + 3), 4 * n - 1);
    let rational = if n == 2 {
        ss_rat(134, 7)
    } else {
        ss_rat(64 * n * n * n - 128 * n * n + 64 * n - 6, 4 * n - 1)
    };
    let le_plus = rational + ss_rad(rint(2), (32 * n * n - 32 * n + 9) as u64);
    ClosedEnergies { e, le, le_plus }
}

/// One catalog row: a family identifier with a description and an example.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    /// What the groups are, behaviorally.
    pub groups: &'static str,
    /// Parameter constraints, human-readable.
    pub parameters: &'static str,
    /// A smallest in-range example.
    pub example: Family,
}

/// The family catalog in display order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "Dihedral1",
            groups: "dihedral groups of order 2m",
            parameters: "m odd, m >= 3",
            example: Family::Dihedral1 { m: 3 },
        },
        CatalogEntry {
            id: "Dihedral2",
            groups: "dihedral groups of order 2m",
            parameters: "m even, m >= 4",
            example: Family::Dihedral2 { m: 4 },
        },
        CatalogEntry {
            id: "Quasidihedral",
            groups: "quasidihedral groups of order 2^n",
            parameters: "4 <= n <= 40",
            example: Family::Quasidihedral { n: 4 },
        },
        CatalogEntry {
            id: "M_2rs1",
            groups: "modular-type groups <a,b : a^r = b^(2s) = 1, bab^-1 = a^-1> of order 2rs",
            parameters: "r odd >= 3, s >= 1",
            example: Family::M2rs1 { r: 3, s: 2 },
        },
        CatalogEntry {
            id: "M_2rs2",
            groups: "modular-type groups of order 2rs",
            parameters: "r even >= 4, s >= 1",
            example: Family::M2rs2 { r: 4, s: 2 },
        },
        CatalogEntry {
            id: "Dicyclic",
            groups: "dicyclic groups of order 4n",
            parameters: "n >= 2",
            example: Family::Dicyclic { n: 2 },
        },
        CatalogEntry {
            id: "U6n",
            groups: "groups <a,b : a^(2n) = b^3 = 1, a^-1 b a = b^-1> of order 6n",
            parameters: "n >= 1",
            example: Family::U6n { n: 1 },
        },
        CatalogEntry {
            id: "SD_8n1",
            groups: "semidihedral groups of order 8n",
            parameters: "n odd >= 3",
            example: Family::SD8n1 { n: 3 },
        },
        CatalogEntry {
            id: "SD_8n2",
            groups: "semidihedral groups of order 8n",
            parameters: "n even >= 2",
            example: Family::SD8n2 { n: 2 },
        },
        CatalogEntry {
            id: "V_8n1",
            groups: "bi-twisted product groups of order 8n",
            parameters: "n odd >= 3",
            example: Family::V8n1 { n: 3 },
        },
        CatalogEntry {
            id: "V_8n2",
            groups: "bi-twisted product groups of order 8n",
            parameters: "n even >= 2",
            example: Family::V8n2 { n: 2 },
        },
        CatalogEntry {
            id: "FrobeniusPQ",
            groups: "Frobenius groups Z_p x| Z_q of order pq",
            parameters: "p > q primes, q | p-1",
            example: Family::FrobeniusPQ { p: 7, q: 3 },
        },
        CatalogEntry {
            id: "HanakiV",
            groups: "unitriangular two-generator groups over GF(2^n), order 2^(2n)",
            parameters: "2 <= n <= 20",
            example: Family::HanakiV { n: 2 },
        },
        CatalogEntry {
            id: "HanakiP",
            groups: "unitriangular three-parameter groups over GF(p^n), order p^(3n)",
            parameters: "n >= 1, p prime",
            example: Family::HanakiP { n: 1, p: 3 },
        },
        CatalogEntry {
            id: "QuotientDihedral",
            groups: "groups with central quotient D_2m and center size z",
            parameters: "m >= 3, z >= 1",
            example: Family::QuotientDihedral { m: 3, z: 2 },
        },
        CatalogEntry {
            id: "QuotientZpZp",
            groups: "groups with central quotient Z_p x Z_p and center size z",
            parameters: "p prime, z >= 1",
            example: Family::QuotientZpZp { p: 3, z: 3 },
        },
        CatalogEntry {
            id: "QuotientSz2",
            groups: "groups with central quotient Z_5 x| Z_4 (order 20) and center size z",
            parameters: "z >= 1",
            example: Family::QuotientSz2 { z: 1 },
        },
    ]
}

/// Parameter tuples used by the default verification sweep: at least three
/// in-range tuples per family, all with group order at most 2000.
pub fn default_tuples(id: &str) -> Option<Vec<Family>> {
    let tuples: Vec<Family> = match normalize_id(id)?.as_str() {
        "dihedral1" => [3u64, 5, 7, 9].iter().map(|&m| Family::Dihedral1 { m }).collect(),
        "dihedral2" => [4u64, 6, 8, 10].iter().map(|&m| Family::Dihedral2 { m }).collect(),
        "quasidihedral" => (4u64..=7).map(|n| Family::Quasidihedral { n }).collect(),
        "m2rs1" => [(3u64, 2u64), (5, 2), (3, 4), (7, 3)]
            .iter()
            .map(|&(r, s)| Family::M2rs1 { r, s })
            .collect(),
        "m2rs2" => [(4u64, 2u64), (6, 2), (4, 3), (6, 1)]
            .iter()
            .map(|&(r, s)| Family::M2rs2 { r, s })
            .collect(),
        "dicyclic" => (2u64..=5).map(|n| Family::Dicyclic { n }).collect(),
        "u6n" => (1u64..=4).map(|n| Family::U6n { n }).collect(),
        "sd8n1" => [3u64, 5, 7].iter().map(|&n| Family::SD8n1 { n }).collect(),
        "sd8n2" => [2u64, 4, 6].iter().map(|&n| Family::SD8n2 { n }).collect(),
        "v8n1" => [3u64, 5, 7].iter().map(|&n| Family::V8n1 { n }).collect(),
        "v8n2" => [2u64, 4, 6].iter().map(|&n| Family::V8n2 { n }).collect(),
        "frobeniuspq" => [(3u64, 2u64), (7, 3), (11, 5), (13, 3), (23, 11)]
            .iter()
            .map(|&(p, q)| Family::FrobeniusPQ { p, q })
            .collect(),
        "hanakiv" => (2u64..=4).map(|n| Family::HanakiV { n }).collect(),
        "hanakip" => [(1u64, 3u64), (1, 5), (1, 7), (2, 2)]
            .iter()
            .map(|&(n, p)| Family::HanakiP { n, p })
            .collect(),
        "quotientdihedral" => [(3u64, 2u64), (3, 3), (5, 2), (7, 2)]
            .iter()
            .map(|&(m, z)| Family::QuotientDihedral { m, z })
            .collect(),
        "quotientzpzp" => [(3u64, 3u64), (5, 5), (2, 4)]
            .iter()
            .map(|&(p, z)| Family::QuotientZpZp { p, z })
            .collect(),
        "quotientsz2" => [1u64, 3, 7].iter().map(|&z| Family::QuotientSz2 { z }).collect(),
        _ => return None,
    };
    Some(tuples)
}

//! Exact perfect-square tests and the parameter sequences that make the
//! quadratic discriminants of certain closed-form Q-spectra square — the
//! condition under which those spectra consist entirely of integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::spectra::ExactSpectrum;

/// The four discriminant expressions that govern Q-integrality across the
/// family catalog. `K1`–`K3` are quadratics in `n`; `K4` is exponential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareKind {
    /// `8n² − 16n + 9`
    K1,
    /// `2n² − 8n + 9`
    K2,
    /// `32n² − 32n + 9`
    K3,
    /// `2^(2n−1) − 2^(n+2) + 9`
    K4,
}

impl SquareKind {
    pub const ALL: [SquareKind; 4] = [SquareKind::K1, SquareKind::K2, SquareKind::K3, SquareKind::K4];

    pub fn id(self) -> &'static str {
        match self {
            SquareKind::K1 => "K1",
            SquareKind::K2 => "K2",
            SquareKind::K3 => "K3",
            SquareKind::K4 => "K4",
        }
    }

    /// Human-readable form of the expression evaluated by [`SquareKind::eval`].
    pub fn expression(self) -> &'static str {
        match self {
            SquareKind::K1 => "8n^2 - 16n + 9",
            SquareKind::K2 => "2n^2 - 8n + 9",
            SquareKind::K3 => "32n^2 - 32n + 9",
            SquareKind::K4 => "2^(2n-1) - 2^(n+2) + 9",
        }
    }

    /// Largest `bound` accepted by [`square_sequence`]: the quadratic kinds
    /// scan values of `n`, the exponential kind scans exponents.
    pub fn max_bound(self) -> u64 {
        match self {
            SquareKind::K4 => 64,
            _ => 1_000_000_000,
        }
    }

    /// Exact value at `n ≥ 1`.
    pub fn eval(self, n: u64) -> BigInt {
        match self.eval_u128(n) {
            Some(v) => BigInt::from(v),
            None => {
                // Only K4 with large exponents overflows the fast path.
                debug_assert_eq!(self, SquareKind::K4);
                (BigInt::one() << (2 * n - 1)) - (BigInt::one() << (n + 2)) + 9
            }
        }
    }

    /// `u128` fast path; `None` when the value would overflow.
    fn eval_u128(self, n: u64) -> Option<u128> {
        let n = n as u128;
        match self {
            // Adding 9 before subtracting avoids unsigned underflow at small
            // n (each expression itself is positive for every n ≥ 1).
            SquareKind::K1 => Some(8 * n * n + 9 - 16 * n),
            SquareKind::K2 => Some(2 * n * n + 9 - 8 * n),
            SquareKind::K3 => Some(32 * n * n + 9 - 32 * n),
            SquareKind::K4 => {
                if n >= 1 && 2 * n - 1 < 127 {
                    Some((1u128 << (2 * n - 1)) + 9 - (1u128 << (n + 2)))
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for SquareKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SquareKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "K1" => Ok(SquareKind::K1),
            "K2" => Ok(SquareKind::K2),
            "K3" => Ok(SquareKind::K3),
            "K4" => Ok(SquareKind::K4),
            other => Err(format!("unknown square kind {other:?}; expected K1, K2, K3 or K4")),
        }
    }
}

/// Error for perfect-square queries on negative integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NegativeInput;

impl fmt::Display for NegativeInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("perfect-square test requires a non-negative integer")
    }
}

impl std::error::Error for NegativeInput {}

/// Integer square root test: `Some(r)` with `r² = k` exactly, `None` when `k`
/// is not a perfect square.
pub fn is_perfect_square(k: &BigInt) -> Result<Option<BigInt>, NegativeInput> {
    if k.is_negative() {
        return Err(NegativeInput);
    }
    let r = k.sqrt();
    Ok(if &r * &r == *k { Some(r) } else { None })
}

/// True when every eigenvalue of the exact spectrum is an integer.
pub fn is_q_integral(spec: &ExactSpectrum) -> bool {
    spec.is_integral()
}

fn u128_is_square(v: u128) -> Option<u128> {
    let r = v.sqrt();
    if r * r == v {
        Some(r)
    } else {
        None
    }
}

/// All `n` in `1..=bound` (clamped to [`SquareKind::max_bound`]) for which
/// the kind's expression is a perfect square, with the integer square roots.
/// Sorted ascending by `n`.
pub fn square_sequence(kind: SquareKind, bound: u64) -> Vec<(u64, BigInt)> {
    let bound = bound.min(kind.max_bound());
    let mut hits: Vec<(u64, BigInt)> = match kind {
        SquareKind::K4 => (1..=bound)
            .filter_map(|n| {
                let v = kind.eval(n);
                is_perfect_square(&v).expect("K4 values are non-negative").map(|r| (n, r))
            })
            .collect(),
        _ => (1u64..=bound)
            .into_par_iter()
            .filter_map(|n| {
                let v = kind.eval_u128(n).expect("quadratic kinds fit in u128");
                u128_is_square(v).map(|r| (n, BigInt::from(r)))
            })
            .collect(),
    };
    hits.sort_unstable_by_key(|&(n, _)| n);
    hits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::q_shape_poly;

    fn ns(seq: &[(u64, BigInt)]) -> Vec<u64> {
        seq.iter().map(|&(n, _)| n).collect()
    }

    fn roots(seq: &[(u64, BigInt)]) -> Vec<BigInt> {
        seq.iter().map(|(_, r)| r.clone()).collect()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn pinned_sequences() {
        let k1 = square_sequence(SquareKind::K1, 10_000);
        assert_eq!(ns(&k1), vec![1, 2, 7, 36, 205, 1190, 6931]);
        assert_eq!(roots(&k1), vec![big(1), big(3), big(17), big(99), big(577), big(3363), big(19601)]);

        let k2 = square_sequence(SquareKind::K2, 1_000);
        assert_eq!(ns(&k2), vec![2, 4, 14, 72, 410]);
        assert_eq!(roots(&k2), vec![big(1), big(3), big(17), big(99), big(577)]);

        let k3 = square_sequence(SquareKind::K3, 1_000);
        assert_eq!(ns(&k3), vec![1, 18, 595]);
        assert_eq!(roots(&k3), vec![big(3), big(99), big(3363)]);
    }

    #[test]
    fn exponential_kind_hits() {
        let k4 = square_sequence(SquareKind::K4, 64);
        assert_eq!(k4, vec![(2, big(1)), (3, big(3))]);
        // Bound clamps to the exponent limit instead of overflowing.
        assert_eq!(square_sequence(SquareKind::K4, 10_000), k4);
    }

    #[test]
    fn perfect_square_matches_naive_oracle() {
        // Incremental floor-sqrt oracle over a contiguous range.
        let mut r: u64 = 0;
        for k in 0u64..=200_000 {
            if (r + 1) * (r + 1) <= k {
                r += 1;
            }
            let expected = if r * r == k { Some(BigInt::from(r)) } else { None };
            assert_eq!(is_perfect_square(&BigInt::from(k)).unwrap(), expected, "k = {k}");
        }
    }

    #[test]
    fn perfect_square_spot_values() {
        assert_eq!(is_perfect_square(&big(289)).unwrap(), Some(big(17)));
        assert_eq!(is_perfect_square(&big(9801)).unwrap(), Some(big(99)));
        assert_eq!(is_perfect_square(&big(0)).unwrap(), Some(big(0)));
        assert_eq!(is_perfect_square(&big(2)).unwrap(), None);
        assert_eq!(is_perfect_square(&big(-4)), Err(NegativeInput));
        // Million-scale spot checks around a large square.
        let w = big(768_398_401);
        assert_eq!(is_perfect_square(&(&w * &w)).unwrap(), Some(w.clone()));
        assert_eq!(is_perfect_square(&(&w * &w + 1)).unwrap(), None);
    }

    #[test]
    fn k1_second_order_recurrence_regression() {
        let seq = ns(&square_sequence(SquareKind::K1, 1_000_000));
        assert_eq!(seq, vec![1, 2, 7, 36, 205, 1190, 6931, 40392, 235417]);
        for i in 2..seq.len() {
            assert_eq!(seq[i], 6 * seq[i - 1] - seq[i - 2] - 4, "index {i}");
        }
    }

    #[test]
    fn q_integrality_from_exact_spectra() {
        // Three equal parts of size 2: every eigenvalue integral.
        let octahedron = q_shape_poly(&[(2, 3)]).exact_spectrum().unwrap();
        assert!(is_q_integral(&octahedron));
        // Five singleton parts plus one part of four: discriminant 129 is not
        // a perfect square, so the two simple eigenvalues are irrational.
        let nine = q_shape_poly(&[(1, 5), (4, 1)]).exact_spectrum().unwrap();
        assert!(!is_q_integral(&nine));
    }
}

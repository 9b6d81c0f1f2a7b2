//! Exact arithmetic over quadratic surds.
//!
//! A [`Surd`] is a value `a + b*sqrt(d)` with rational `a`, `b` and a
//! square-free integer `d >= 1`; with `d = 1` it degenerates to a rational.
//! A [`SurdSum`] is a finite sum `sum_i c_i * sqrt(d_i)` over distinct
//! square-free radicands, which is closed under addition and exact sign
//! determination — enough to compare graph energies without rounding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar used throughout the exact paths.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for an integer-valued [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience constructor for the fraction `n / d`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Splits `k = s^2 * d` with `d` square-free; returns `(s, d)`.
///
/// Trial division; intended for radicands up to roughly `10^12`, far beyond
/// every discriminant produced by the supported group families.
pub fn squarefree_decompose(k: u64) -> (u64, u64) {
    if k == 0 {
        return (0, 0);
    }
    let mut rem = k;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= rem {
        if rem.is_multiple_of(p) {
            let mut exp = 0u32;
            while rem.is_multiple_of(p) {
                rem /= p;
                exp += 1;
            }
            for _ in 0..exp / 2 {
                square *= p;
            }
            if exp % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // What survives trial division up to its own square root is prime.
    free *= rem;
    (square, free)
}

/// A quadratic surd `a + b*sqrt(d)` with `d` square-free.
///
/// Normal form: `d >= 1`, and `d == 1` forces `b == 0` (the rational case
/// folds `b` into `a`). Equality and hashing rely on this normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    a: Rat,
    b: Rat,
    d: u64,
}

impl Surd {
    /// Builds `a + b*sqrt(d)` and normalizes the radicand.
    pub fn new(a: Rat, b: Rat, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return Surd { a, b: Rat::zero(), d: 1 };
        }
        let (s, free) = squarefree_decompose(d);
        let b = b * rat_int(s as i64);
        if free == 1 {
            Surd { a: a + b, b: Rat::zero(), d: 1 }
        } else {
            Surd { a, b, d: free }
        }
    }

    pub fn rational(a: Rat) -> Self {
        Surd { a, b: Rat::zero(), d: 1 }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(rat_int(n))
    }

    /// `sqrt(k)` in normal form.
    pub fn sqrt_of(k: u64) -> Self {
        Self::new(Rat::zero(), Rat::one(), k)
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Surd::rational(Rat::zero());
        }
        Surd { a: &self.a * c, b: &self.b * c, d: self.d }
    }

    pub fn neg(&self) -> Self {
        Surd { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Adds a rational offset.
    pub fn add_rational(&self, c: &Rat) -> Self {
        Surd { a: &self.a + c, b: self.b.clone(), d: self.d }
    }

    /// Sum of two surds sharing a radicand (or with either side rational).
    pub fn checked_add(&self, other: &Surd) -> Option<Surd> {
        if self.is_rational() {
            return Some(other.add_rational(&self.a));
        }
        if other.is_rational() {
            return Some(self.add_rational(&other.a));
        }
        (self.d == other.d).then(|| {
            Surd::new(&self.a + &other.a, &self.b + &other.b, self.d)
        })
    }

    /// Exact sign: `-1`, `0`, or `1`.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a^2 against b^2 d; the larger magnitude wins.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * rat_int(self.d as i64);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Surd {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact comparison, valid across different radicands.
    pub fn cmp_exact(&self, other: &Surd) -> Ordering {
        let diff = SurdSum::from_surd(self) - SurdSum::from_surd(other);
        match diff.sign() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        SurdSum::from_surd(self).fmt(f)
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A finite sum of rational multiples of square roots of distinct
/// square-free integers; the `d = 1` term is the rational part.
///
/// Distinct square-free radicals are linearly independent over the
/// rationals, so the normal form is canonical and the sum is zero exactly
/// when no terms remain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdSum {
    /// `(coefficient, radicand)` pairs, radicands strictly increasing,
    /// coefficients non-zero.
    terms: Vec<(Rat, u64)>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum { terms: Vec::new() }
    }

    pub fn rational(r: Rat) -> Self {
        let mut s = Self::zero();
        s.push_term(r, 1);
        s
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(rat_int(n))
    }

    pub fn from_surd(s: &Surd) -> Self {
        let mut out = Self::zero();
        out.push_term(s.a.clone(), 1);
        out.push_term(s.b.clone(), s.d);
        out
    }

    /// `c * sqrt(k)` (radicand reduced to square-free form).
    pub fn radical(c: Rat, k: u64) -> Self {
        let mut out = Self::zero();
        let (s, free) = squarefree_decompose(k);
        out.push_term(c * rat_int(s as i64), free.max(1));
        out
    }

    fn push_term(&mut self, c: Rat, d: u64) {
        if c.is_zero() {
            return;
        }
        debug_assert!(d >= 1, "radicand must be normalized");
        match self.terms.binary_search_by_key(&d, |t| t.1) {
            Ok(i) => {
                let merged = &self.terms[i].0 + &c;
                if merged.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].0 = merged;
                }
            }
            Err(i) => self.terms.insert(i, (c, d)),
        }
    }

    pub fn terms(&self) -> &[(Rat, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|t| t.1 == 1)
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 if self.terms[0].1 == 1 => Some(self.terms[0].0.clone()),
            _ => None,
        }
    }

    /// Reinterprets the sum as a single quadratic surd when at most one
    /// irrational radical is present.
    pub fn as_single_surd(&self) -> Option<Surd> {
        let mut a = Rat::zero();
        let mut b = Rat::zero();
        let mut d = 1u64;
        for (c, k) in &self.terms {
            if *k == 1 {
                a = c.clone();
            } else if d == 1 {
                b = c.clone();
                d = *k;
            } else {
                return None;
            }
        }
        Some(Surd { a, b, d })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SurdSum {
            terms: self.terms.iter().map(|(t, d)| (t * c, *d)).collect(),
        }
    }

    /// Exact sign of the whole sum: `-1`, `0`, or `1`.
    ///
    /// Zero/one/two-term cases are decided algebraically; longer sums by
    /// interval refinement with integer square-root bounds, which terminates
    /// because a non-empty normal form is never zero.
    pub fn sign(&self) -> i32 {
        match self.terms.len() {
            0 => return 0,
            1 => return rat_sign(&self.terms[0].0),
            _ => {}
        }
        let signs: Vec<i32> = self.terms.iter().map(|t| rat_sign(&t.0)).collect();
        if signs.iter().all(|&s| s > 0) {
            return 1;
        }
        if signs.iter().all(|&s| s < 0) {
            return -1;
        }
        if self.terms.len() == 2 {
            // c1*sqrt(d1) + c2*sqrt(d2) with opposite signs: the term with the
            // larger square c^2 d dominates (equality cannot happen for d1 != d2).
            let m0 = &self.terms[0].0 * &self.terms[0].0 * rat_int(self.terms[0].1 as i64);
            let m1 = &self.terms[1].0 * &self.terms[1].0 * rat_int(self.terms[1].1 as i64);
            return match m0.cmp(&m1) {
                Ordering::Greater => signs[0],
                Ordering::Less => signs[1],
                Ordering::Equal => 0,
            };
        }
        // Interval refinement: sqrt(d) in [s, s+1] / 2^p with s = isqrt(d * 4^p).
        let mut precision = 32u32;
        loop {
            let mut lo = Rat::zero();
            let mut hi = Rat::zero();
            let scale = BigInt::one() << precision;
            for (c, d) in &self.terms {
                if *d == 1 {
                    lo += c;
                    hi += c;
                    continue;
                }
                let scaled = BigInt::from(*d) * (BigInt::one() << (2 * precision));
                let root_lo = scaled.sqrt();
                let root_hi = &root_lo + 1;
                let bound_lo = Rat::new(root_lo, scale.clone());
                let bound_hi = Rat::new(root_hi, scale.clone());
                if c.is_positive() {
                    lo += c * &bound_lo;
                    hi += c * &bound_hi;
                } else {
                    lo += c * &bound_hi;
                    hi += c * &bound_lo;
                }
            }
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            precision *= 2;
            assert!(
                precision <= 1 << 16,
                "sign refinement failed to separate a provably non-zero surd sum"
            );
        }
    }

    pub fn abs(&self) -> SurdSum {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn cmp_exact(&self, other: &SurdSum) -> Ordering {
        match (self.clone() - other.clone()).sign() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(c, d)| rat_to_f64(c) * (*d as f64).sqrt())
            .sum()
    }
}

impl std::ops::Add for SurdSum {
    type Output = SurdSum;
    fn add(mut self, rhs: SurdSum) -> SurdSum {
        for (c, d) in rhs.terms {
            self.push_term(c, d);
        }
        self
    }
}

impl std::ops::Sub for SurdSum {
    type Output = SurdSum;
    fn sub(mut self, rhs: SurdSum) -> SurdSum {
        for (c, d) in rhs.terms {
            self.push_term(-c, d);
        }
        self
    }
}

impl std::ops::Neg for SurdSum {
    type Output = SurdSum;
    fn neg(self) -> SurdSum {
        SurdSum {
            terms: self.terms.into_iter().map(|(c, d)| (-c, d)).collect(),
        }
    }
}

impl std::ops::AddAssign for SurdSum {
    fn add_assign(&mut self, rhs: SurdSum) {
        for (c, d) in rhs.terms {
            self.push_term(c, d);
        }
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, d)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *d == 1 {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "sqrt({})", d)?;
            } else {
                write!(f, "{}*sqrt({})", fmt_rat(&mag), d)?;
            }
        }
        Ok(())
    }
}

//! Exact univariate polynomials over the rationals, characteristic
//! polynomials of integer matrices, and root extraction into quadratic surds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::surd::{rat_int, Rat, Surd};

/// Dense polynomial with rational coefficients, lowest degree first.
///
/// Invariant: no trailing zero coefficients (the zero polynomial has an
/// empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = RatPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    /// The monic linear factor `x - r`.
    pub fn linear_root(r: &Rat) -> Self {
        RatPoly { coeffs: vec![-r.clone(), Rat::one()] }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero for constants including the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Rat::is_one)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        RatPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        RatPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut exp: usize) -> RatPoly {
        let mut base = self.clone();
        let mut acc = RatPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Synthetic division by `x - r`; returns `(quotient, remainder)`.
    pub fn divide_by_linear(&self, r: &Rat) -> (RatPoly, Rat) {
        if self.is_zero() {
            return (RatPoly::zero(), Rat::zero());
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() - 1];
        let mut carry = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let v = c + &carry * r;
            if i == 0 {
                return (RatPoly::from_coeffs(out), v);
            }
            out[i - 1] = v.clone();
            carry = v;
        }
        unreachable!("loop returns at i == 0");
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact characteristic polynomial `det(xI - M)` of an integer matrix,
/// computed by evaluating the determinant at `n + 1` integer points and
/// interpolating. Each evaluation is a fraction-free integer determinant,
/// so the whole computation is exact.
pub fn charpoly_int(m: &[Vec<i64>]) -> RatPoly {
    let n = m.len();
    if n == 0 {
        return RatPoly::one();
    }
    let mut points = Vec::with_capacity(n + 1);
    for t in 0..=n as i64 {
        let shifted: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let diag = if i == j { BigInt::from(t) } else { BigInt::zero() };
                        diag - BigInt::from(m[i][j])
                    })
                    .collect()
            })
            .collect();
        points.push((rat_int(t), Rat::from_integer(det_bigint(shifted))));
    }
    lagrange_interpolate(&points)
}

/// Lagrange interpolation through distinct sample points.
pub fn lagrange_interpolate(points: &[(Rat, Rat)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RatPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            basis = basis.mul(&RatPoly::linear_root(xj)).scale(&denom.recip());
        }
        acc = acc.add(&basis);
    }
    acc
}

/// Root multiset of a polynomial that splits into rational roots and powers
/// of at most one quadratic irreducible factor; `None` when the residual
/// after rational-root extraction is anything else (e.g. an irreducible
/// cubic, or a product of two distinct irreducible quadratics).
///
/// Rational-root candidates are restricted to integers dividing the constant
/// term with magnitude at most `4 * degree + 16`. That window covers every
/// matrix spectrum arising here: adjacency, Laplacian and signless-Laplacian
/// eigenvalues of an `n`-vertex graph all lie within `[-n, 2n]`.
pub fn exact_roots(p: &RatPoly) -> Option<Vec<(Surd, usize)>> {
    if p.is_zero() {
        return None;
    }
    let mut roots: Vec<(Surd, usize)> = Vec::new();
    let mut rem = p.clone();

    // Strip roots at zero first.
    let mut zero_mult = 0usize;
    while !rem.is_zero() && rem.coeff(0).is_zero() && rem.degree() > 0 {
        rem = RatPoly::from_coeffs(rem.coeffs()[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Surd::integer(0), zero_mult));
    }

    // Integer-root deflation over a bounded candidate window.
    let bound = (4 * p.degree() + 16) as i64;
    let mut candidates: Vec<i64> = Vec::new();
    {
        // Work on a scaled integer copy: multiply by the lcm of denominators.
        let mut lcm = BigInt::one();
        for c in rem.coeffs() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let int_coeffs: Vec<BigInt> =
            rem.coeffs().iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        if let Some(constant) = int_coeffs.first() {
            if !constant.is_zero() {
                for r in 1..=bound {
                    if (constant % BigInt::from(r)).is_zero() {
                        candidates.push(r);
                        candidates.push(-r);
                    }
                }
            }
        }
    }
    for r in candidates {
        let r = rat_int(r);
        let mut mult = 0usize;
        loop {
            if rem.degree() == 0 {
                break;
            }
            let (q, remainder) = rem.divide_by_linear(&r);
            if remainder.is_zero() {
                rem = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            roots.push((Surd::rational(r), mult));
        }
    }

    match rem.degree() {
        0 => {}
        1 => {
            let root = -rem.coeff(0) / rem.coeff(1);
            roots.push((Surd::rational(root), 1));
        }
        d if d % 2 == 0 => {
            // The residual must be a power q^k of a single monic quadratic
            // q = x^2 + bx + c: read b and c off the two leading non-trivial
            // coefficients, then verify the product exactly.
            let k = d / 2;
            let monic = rem.scale(&(Rat::one() / rem.leading()));
            let b = monic.coeff(d - 1) / rat_int(k as i64);
            let binom2 = rat_int((k * (k - 1) / 2) as i64);
            let c = (monic.coeff(d - 2) - binom2 * &b * &b) / rat_int(k as i64);
            let q = RatPoly::from_coeffs(vec![c.clone(), b.clone(), Rat::one()]);
            if k > 1 && q.pow(k) != monic {
                return None;
            }
            let (plus, minus) = quadratic_surd_pair(&Rat::one(), &b, &c)?;
            if plus == minus {
                // A zero discriminant gives one rational root of double
                // multiplicity per quadratic factor.
                roots.push((plus, 2 * k));
            } else {
                roots.push((plus, k));
                roots.push((minus, k));
            }
        }
        _ => return None,
    }

    // Merge duplicates (a quadratic factor can collapse onto an integer root).
    let mut merged: Vec<(Surd, usize)> = Vec::new();
    for (root, mult) in roots {
        match merged.iter_mut().find(|(r, _)| *r == root) {
            Some((_, m)) => *m += mult,
            None => merged.push((root, mult)),
        }
    }
    merged.sort_by(|a, b| a.0.cmp_exact(&b.0));
    Some(merged)
}

/// The two roots of `ax^2 + bx + c` as quadratic surds; `None` when the
/// discriminant is negative or its square-free kernel exceeds `u64`.
fn quadratic_surd_pair(a: &Rat, b: &Rat, c: &Rat) -> Option<(Surd, Surd)> {
    let disc = b * b - rat_int(4) * a * c;
    if disc.is_negative() {
        return None; // complex pair: not a real spectrum
    }
    // disc = num/den; sqrt(disc) = sqrt(num*den)/den.
    let num = disc.numer().clone();
    let den = disc.denom().clone();
    let inner = (&num * &den).to_u64()?;
    let two_a = rat_int(2) * a;
    let base = -b / &two_a;
    let coef = Rat::new(BigInt::one(), (two_a * Rat::from_integer(den)).to_integer());
    Some((Surd::new(base.clone(), coef.clone(), inner), Surd::new(base, -coef, inner)))
}

/// Divides out every integer root in `[lo, hi]` by trial evaluation,
/// returning the roots with multiplicities and the deflated residual.
///
/// Unlike [`exact_roots`] this never declines: it is the tool for questions
/// like "are all roots integers?" on polynomials whose non-integer part may
/// have high degree. The caller supplies the root window (for graph spectra,
/// an eigenvalue bound).
pub fn deflate_integer_roots(p: &RatPoly, lo: i64, hi: i64) -> (Vec<(i64, usize)>, RatPoly) {
    let mut residual = p.clone();
    let mut roots: Vec<(i64, usize)> = Vec::new();
    for r in lo..=hi {
        if residual.degree() == 0 {
            break;
        }
        let root = rat_int(r);
        let mut mult = 0usize;
        while residual.degree() > 0 && residual.eval(&root).is_zero() {
            let (q, remainder) = residual.divide_by_linear(&root);
            debug_assert!(remainder.is_zero());
            residual = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    (roots, residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surd::rat_frac;

    fn int_poly(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn exact_roots_quadratic_power_residual() {
        // (x-1)^2 (x^2 - 38x + 348)^2: roots 1, 1, and 19±sqrt(13) twice.
        let p = RatPoly::linear_root(&rat_int(1)).pow(2).mul(&int_poly(&[348, -38, 1]).pow(2));
        let roots = exact_roots(&p).unwrap();
        let plus = Surd::new(rat_int(19), rat_int(1), 13);
        let minus = Surd::new(rat_int(19), rat_int(-1), 13);
        assert_eq!(roots, vec![(Surd::integer(1), 2), (minus, 2), (plus, 2)]);

        // A zero-discriminant quadratic power: (x^2 - x + 1/4)^3 = (x-1/2)^6.
        let q = RatPoly::from_coeffs(vec![rat_frac(1, 4), rat_int(-1), rat_int(1)]).pow(3);
        let roots = exact_roots(&q).unwrap();
        assert_eq!(roots, vec![(Surd::rational(rat_frac(1, 2)), 6)]);

        // A product of two distinct irreducible quadratics is declined.
        let r = int_poly(&[1, 1, 1]).mul(&int_poly(&[3, 0, 1]));
        assert!(exact_roots(&r).is_none());
    }

    #[test]
    fn integer_deflation_splits_off_residual() {
        // (x-2)^2 (x-40) (x^2+x+1): integer roots 2 (twice) and 40, with an
        // irreducible quadratic residual.
        let p = RatPoly::linear_root(&rat_int(2))
            .pow(2)
            .mul(&RatPoly::linear_root(&rat_int(40)))
            .mul(&int_poly(&[1, 1, 1]));
        let (roots, residual) = deflate_integer_roots(&p, 0, 100);
        assert_eq!(roots, vec![(2, 2), (40, 1)]);
        assert_eq!(residual, int_poly(&[1, 1, 1]));

        // Roots outside the window are left in the residual.
        let (roots, residual) = deflate_integer_roots(&p, 0, 10);
        assert_eq!(roots, vec![(2, 2)]);
        assert_eq!(residual.degree(), 3);

        // A fully integral polynomial deflates to a constant.
        let q = RatPoly::linear_root(&rat_int(0)).pow(3).mul(&RatPoly::linear_root(&rat_int(7)));
        let (roots, residual) = deflate_integer_roots(&q, 0, 20);
        assert_eq!(roots, vec![(0, 3), (7, 1)]);
        assert_eq!(residual.degree(), 0);
    }

    #[test]
    fn arithmetic_and_display() {
        let p = int_poly(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        assert_eq!(p.eval(&rat_int(2)), rat_int(0));
        assert_eq!(p.eval(&rat_int(4)), rat_int(6));
        let q = RatPoly::linear_root(&rat_int(1))
            .mul(&RatPoly::linear_root(&rat_int(2)))
            .mul(&RatPoly::linear_root(&rat_int(3)));
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "x^3 - 6*x^2 + 11*x - 6");
    }

    #[test]
    fn synthetic_division_matches_multiplication() {
        let p = int_poly(&[-6, 11, -6, 1]);
        let (q, r) = p.divide_by_linear(&rat_int(3));
        assert!(r.is_zero());
        assert_eq!(q, int_poly(&[2, -3, 1]));
        let (_, r2) = p.divide_by_linear(&rat_int(5));
        assert_eq!(r2, p.eval(&rat_int(5)));
    }

    #[test]
    fn bareiss_determinant() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(2)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(4)],
        ];
        assert_eq!(det_bigint(m), BigInt::from(21));
        let singular = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(det_bigint(singular), BigInt::zero());
    }

    #[test]
    fn charpoly_of_triangle_graph() {
        // Adjacency matrix of K3: charpoly (x+1)^2 (x-2).
        let a = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
        let p = charpoly_int(&a);
        let expected = RatPoly::linear_root(&rat_int(-1))
            .pow(2)
            .mul(&RatPoly::linear_root(&rat_int(2)));
        assert_eq!(p, expected);
    }

    #[test]
    fn exact_roots_rational_and_quadratic() {
        // (x-3)^3 (x^2 - 9x + 12): quadratic roots (9 +/- sqrt(33))/2.
        let p = RatPoly::linear_root(&rat_int(3))
            .pow(3)
            .mul(&int_poly(&[12, -9, 1]));
        let roots = exact_roots(&p).expect("splits into surds");
        assert_eq!(roots.len(), 3);
        let lo = Surd::new(rat_frac(9, 2), rat_frac(-1, 2), 33);
        let hi = Surd::new(rat_frac(9, 2), rat_frac(1, 2), 33);
        assert_eq!(roots[0], (lo, 1));
        assert_eq!(roots[1], (Surd::integer(3), 3));
        assert_eq!(roots[2], (hi, 1));
    }

    #[test]
    fn exact_roots_declines_irreducible_cubic() {
        let p = int_poly(&[-314760, 14685, -218, 1]);
        assert_eq!(exact_roots(&p), None);
    }

    #[test]
    fn exact_roots_merges_collapsing_quadratic() {
        // (x-1)(x^2 - 4x + 4) = (x-1)(x-2)^2: square discriminant.
        let p = RatPoly::linear_root(&rat_int(1)).mul(&int_poly(&[4, -4, 1]));
        let roots = exact_roots(&p).unwrap();
        assert_eq!(
            roots,
            vec![(Surd::integer(1), 1), (Surd::integer(2), 2)]
        );
    }
}

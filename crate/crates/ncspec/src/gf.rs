//! Small finite fields GF(p^n) with elements encoded as integers.
//!
//! An element is a polynomial over GF(p) of degree below `n`, encoded in
//! base `p` (coefficient of x^0 is the least significant digit). The field
//! modulus is the first monic irreducible polynomial of degree `n` in
//! ascending order of that integer encoding, which makes the construction
//! deterministic and reproducible.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("field size {p}^{n} exceeds the supported bound 2^16")]
    TooLarge { p: u64, n: u32 },
    #[error("degree must be at least 1")]
    ZeroDegree,
}

/// GF(p^n) with a fixed, deterministically chosen modulus.
#[derive(Clone, Debug)]
pub struct GfField {
    p: u64,
    n: u32,
    size: u64,
    /// Modulus encoded in base `p`, including the leading monic term; only
    /// meaningful for `n > 1` (for prime fields arithmetic is mod `p`).
    modulus: u64,
}

pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m.is_multiple_of(2) {
        return m == 2;
    }
    let mut d = 3u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl GfField {
    pub fn new(p: u64, n: u32) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NonPrimeCharacteristic(p));
        }
        if n == 0 {
            return Err(GfError::ZeroDegree);
        }
        let size = p.checked_pow(n).filter(|&s| s <= 1 << 16).ok_or(GfError::TooLarge { p, n })?;
        let modulus = if n == 1 { p } else { Self::least_irreducible(p, n) };
        Ok(GfField { p, n, size, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// First monic irreducible polynomial of degree `n`, scanning encodings
    /// `p^n + k` for `k = 0, 1, ...` (the `p^n` term is the monic lead).
    fn least_irreducible(p: u64, n: u32) -> u64 {
        let lead = p.pow(n);
        (0..lead)
            .map(|k| lead + k)
            .find(|&m| Self::is_irreducible(p, n, m))
            .expect("an irreducible polynomial of every degree exists over GF(p)")
    }

    /// Trial division by every monic polynomial of degree 1..=n/2.
    fn is_irreducible(p: u64, n: u32, m: u64) -> bool {
        for d in 1..=n / 2 {
            let lead = p.pow(d);
            for k in 0..lead {
                let divisor = lead + k;
                if Self::polymod(p, m, divisor) == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Remainder of `a` modulo monic `b`, both encoded in base `p`.
    fn polymod(p: u64, mut a: u64, b: u64) -> u64 {
        let db = Self::polydeg(p, b);
        loop {
            let da = Self::polydeg(p, a);
            if a == 0 || da < db {
                return a;
            }
            // Leading coefficient of a (b is monic, so divide directly).
            let lead_a = (a / p.pow(da)) % p;
            // a -= lead_a * x^(da-db) * b, coefficient-wise mod p.
            a = Self::polysub_scaled(p, a, b, lead_a, da - db);
        }
    }

    fn polydeg(p: u64, mut a: u64) -> u32 {
        let mut d = 0;
        while a >= p {
            a /= p;
            d += 1;
        }
        d
    }

    /// `a - c * x^shift * b` with coefficients reduced mod p.
    fn polysub_scaled(p: u64, a: u64, b: u64, c: u64, shift: u32) -> u64 {
        let mut out = 0u64;
        let mut place = 1u64;
        let mut a_rest = a;
        // Read digits of b shifted by `shift` places.
        let mut b_shifted_digits = vec![0u64; shift as usize];
        let mut b_rest = b;
        while b_rest > 0 {
            b_shifted_digits.push(b_rest % p);
            b_rest /= p;
        }
        let mut i = 0usize;
        while a_rest > 0 || i < b_shifted_digits.len() {
            let da = a_rest % p;
            let db = b_shifted_digits.get(i).copied().unwrap_or(0);
            let digit = (da + p - (c * db) % p) % p;
            out += digit * place;
            place *= p;
            a_rest /= p;
            i += 1;
        }
        out
    }

    fn to_digits(&self, a: u64) -> Vec<u64> {
        let mut digits = vec![0; self.n as usize];
        let mut a = a;
        for d in digits.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        digits
    }

    fn pack_digits(&self, digits: &[u64]) -> u64 {
        let mut out = 0u64;
        for &d in digits.iter().rev() {
            out = out * self.p + d;
        }
        out
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.size && b < self.size);
        if self.n == 1 {
            return (a + b) % self.p;
        }
        let da = self.to_digits(a);
        let db = self.to_digits(b);
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack_digits(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.size);
        if self.n == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let da = self.to_digits(a);
        let neg: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.pack_digits(&neg)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.size && b < self.size);
        if self.n == 1 {
            return (a * b) % self.p;
        }
        // Schoolbook product of digit vectors, then reduce mod the modulus.
        let da = self.to_digits(a);
        let db = self.to_digits(b);
        let mut prod = vec![0u64; 2 * self.n as usize];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut enc = 0u64;
        for &d in prod.iter().rev() {
            enc = enc * self.p + d;
        }
        Self::polymod(self.p, enc, self.modulus)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius square `x -> x^p` (for characteristic 2 this is the
    /// squaring map used in the two-generator central extension groups).
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.size - 2)
    }

    /// Exhaustively check the field axioms for fields of size at most 256
    /// (all pairs; all triples when size is at most 64, else a deterministic
    /// strided sample of triples).
    pub fn verify_field_axioms(&self) -> bool {
        let q = self.size;
        if q > 256 {
            return true; // too large for exhaustive checking; rely on construction
        }
        // Additive/multiplicative identities and inverses.
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return false;
            }
            if self.add(a, self.neg(a)) != 0 {
                return false;
            }
            if a != 0 && self.mul(a, self.inv(a)) != 1 {
                return false;
            }
        }
        // Commutativity on all pairs.
        for a in 0..q {
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        // Associativity and distributivity.
        let step = if q <= 64 { 1 } else { 5 };
        let mut a = 0;
        while a < q {
            let mut b = 0;
            while b < q {
                let mut c = 0;
                while c < q {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return false;
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return false;
                    }
                    c += step;
                }
                b += step;
            }
            a += step;
        }
        true
    }
}

//! Constructors for the group families under study.
//!
//! Most two-generator families share one presentation scheme, built by
//! [`twogen`]: elements `a^i b^j` with `b a b^{-1} = a^t` and `b^B = a^w`.
//! The remaining families (permutation groups, matrix groups, central
//! extensions over finite fields) have dedicated builders. Every builder
//! returns a table validated by `Group::from_table`.

use super::{Group, GroupError, MAX_ORDER};
use crate::gf::{is_prime, GfField};

fn check_order(order: usize) -> Result<(), GroupError> {
    if order == 0 || order > MAX_ORDER {
        return Err(GroupError::TooLarge(order));
    }
    Ok(())
}

fn twogen_label(i: usize, j: usize) -> String {
    let mut s = String::new();
    match i {
        0 => {}
        1 => s.push('a'),
        _ => s.push_str(&format!("a^{}", i)),
    }
    match j {
        0 => {}
        1 => s.push('b'),
        _ => s.push_str(&format!("b^{}", j)),
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

/// Group of order `a_ord * b_ord` with elements `a^i b^j` (0 <= i < a_ord,
/// 0 <= j < b_ord) and the rewriting rules `b a = a^t b` and `b^b_ord = a^w`:
///
/// `(a^i b^j)(a^u b^v) = a^(i + t^j u + [j+v >= b_ord] w) b^((j+v) mod b_ord)`
///
/// Consistency of `t` and `w` with the relations is enforced by the table
/// validation (a bad pair fails the associativity check).
pub fn twogen(
    a_ord: usize,
    b_ord: usize,
    t: usize,
    w: usize,
    name: impl Into<String>,
) -> Result<Group, GroupError> {
    if a_ord == 0 || b_ord == 0 {
        return Err(GroupError::Parameter("generator orders must be positive".into()));
    }
    let order = a_ord.checked_mul(b_ord).ok_or(GroupError::TooLarge(usize::MAX))?;
    check_order(order)?;

    // tpow[j] = t^j mod a_ord
    let mut tpow = vec![1usize % a_ord; b_ord];
    for j in 1..b_ord {
        tpow[j] = tpow[j - 1] * (t % a_ord) % a_ord;
    }

    let idx = |i: usize, j: usize| i * b_ord + j;
    let mut mul = vec![0u32; order * order];
    for i in 0..a_ord {
        for j in 0..b_ord {
            for u in 0..a_ord {
                for v in 0..b_ord {
                    let wrap = if j + v >= b_ord { w } else { 0 };
                    let ii = (i + tpow[j] * u % a_ord + wrap) % a_ord;
                    let jj = (j + v) % b_ord;
                    mul[idx(i, j) * order + idx(u, v)] = idx(ii, jj) as u32;
                }
            }
        }
    }
    let labels = (0..a_ord)
        .flat_map(|i| (0..b_ord).map(move |j| twogen_label(i, j)))
        .collect();
    Group::from_table(name, order, mul, labels)
}

/// Cyclic group of order `k`.
pub fn cyclic(k: usize) -> Result<Group, GroupError> {
    check_order(k)?;
    let mut mul = vec![0u32; k * k];
    for a in 0..k {
        for b in 0..k {
            mul[a * k + b] = ((a + b) % k) as u32;
        }
    }
    let labels = (0..k)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{}", i),
        })
        .collect();
    Group::from_table(format!("Z{}", k), k, mul, labels)
}

/// Dihedral group of order `2m` (symmetries of the regular `m`-gon).
pub fn dihedral(m: usize) -> Result<Group, GroupError> {
    if m == 0 {
        return Err(GroupError::Parameter("dihedral parameter must be positive".into()));
    }
    twogen(m, 2, m - 1, 0, format!("D{}", 2 * m))
}

/// Quasidihedral (semidihedral) group of order `2^n`, `n >= 3`:
/// `b a b^{-1} = a^(2^(n-2) - 1)`.
pub fn quasidihedral(n: u32) -> Result<Group, GroupError> {
    if n < 3 {
        return Err(GroupError::Parameter(
            "quasidihedral exponent must be at least 3".into(),
        ));
    }
    if n > 13 {
        return Err(GroupError::TooLarge(1 << n));
    }
    let half = 1usize << (n - 1);
    twogen(half, 2, (1 << (n - 2)) - 1, 0, format!("QD{}", 1usize << n))
}

/// Metacyclic group of order `2rs`: `a^r = b^(2s) = 1`, `b a b^{-1} = a^{-1}`.
pub fn modular_m2rs(r: usize, s: usize) -> Result<Group, GroupError> {
    if r == 0 || s == 0 {
        return Err(GroupError::Parameter("both parameters must be positive".into()));
    }
    twogen(r, 2 * s, r - 1, 0, format!("M(r={},s={})", r, s))
}

/// Dicyclic (generalized quaternion) group of order `4n`:
/// `a^(2n) = 1`, `b^2 = a^n`, `b a b^{-1} = a^{-1}`.
pub fn dicyclic(n: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::Parameter("dicyclic parameter must be positive".into()));
    }
    twogen(2 * n, 2, 2 * n - 1, n, format!("Q{}", 4 * n))
}

/// Group of order `6n`: `a^3 = b^(2n) = 1`, `b a b^{-1} = a^2`.
pub fn u6n(n: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::Parameter("parameter must be positive".into()));
    }
    twogen(3, 2 * n, 2, 0, format!("U{}", 6 * n))
}

/// Group of order `8n`: `a^(4n) = b^2 = 1`, `b a b^{-1} = a^(2n-1)`.
pub fn semidihedral_8n(n: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::Parameter("parameter must be positive".into()));
    }
    twogen(4 * n, 2, 2 * n - 1, 0, format!("SD{}", 8 * n))
}

/// Group of order `8n` on pairs `(i, j)` in `Z_2n x Z_4` with the twisted
/// product `(i,j)(u,v) = (i + (-1)^j u, (-1)^u j + v)`.
pub fn v8n(n: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::Parameter("parameter must be positive".into()));
    }
    let a = 2 * n; // order of the first coordinate
    let order = 8 * n;
    check_order(order)?;
    let idx = |i: usize, j: usize| i * 4 + j;
    let mut mul = vec![0u32; order * order];
    for i in 0..a {
        for j in 0..4 {
            for u in 0..a {
                for v in 0..4 {
                    let ii = if j % 2 == 0 { (i + u) % a } else { (i + a - u) % a };
                    let jj = if u % 2 == 0 { (j + v) % 4 } else { (4 - j + v) % 4 };
                    mul[idx(i, j) * order + idx(u, v)] = idx(ii, jj) as u32;
                }
            }
        }
    }
    let labels = (0..a)
        .flat_map(|i| (0..4).map(move |j| twogen_label(i, j)))
        .collect();
    Group::from_table(format!("V{}", order), order, mul, labels)
}

/// Least primitive root modulo a prime `p`.
fn least_primitive_root(p: usize) -> usize {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let mut prime_factors = Vec::new();
    let mut m = phi;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            prime_factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        prime_factors.push(m);
    }
    let pow_mod = |mut base: usize, mut e: usize| -> usize {
        let mut acc = 1usize;
        base %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    (2..p)
        .find(|&g| prime_factors.iter().all(|&f| pow_mod(g, phi / f) != 1))
        .expect("every prime has a primitive root")
}

/// Frobenius-type group of order `pq` for a prime `p` and any `q >= 2`
/// dividing `p - 1`: `a^p = b^q = 1`, `b a b^{-1} = a^u` where `u` has
/// multiplicative order `q` modulo `p` (taken from the least primitive root
/// for determinism). `q` itself need not be prime; `q = 4` with `p = 5`
/// gives the smallest Suzuki group.
pub fn frobenius(p: usize, q: usize) -> Result<Group, GroupError> {
    if !is_prime(p as u64) {
        return Err(GroupError::Parameter(format!("{} must be prime", p)));
    }
    if q < 2 || !(p - 1).is_multiple_of(q) {
        return Err(GroupError::Parameter(format!(
            "need q >= 2 and q | p - 1; got p={}, q={}",
            p, q
        )));
    }
    let g = least_primitive_root(p);
    let mut u = 1usize;
    let e = (p - 1) / q;
    for _ in 0..e {
        u = u * g % p;
    }
    twogen(p, q, u, 0, format!("F({},{})", p, q))
}

/// Central extension of order `2^(2n)` over GF(2^n): elements `(a, b)` with
/// `(a,b)(a',b') = (a + a', b + b' + a' * a^2)`, the square taken in the field.
pub fn hanaki_v(n: u32) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::Parameter("field degree must be positive".into()));
    }
    let f = GfField::new(2, n).map_err(|e| GroupError::Parameter(e.to_string()))?;
    let q = f.size() as usize;
    let order = q * q;
    check_order(order)?;
    let idx = |a: usize, b: usize| a * q + b;
    let mut mul = vec![0u32; order * order];
    for a in 0..q {
        let asq = f.frobenius(a as u64);
        for b in 0..q {
            for a2 in 0..q {
                for b2 in 0..q {
                    let aa = f.add(a as u64, a2 as u64) as usize;
                    let bb = f.add(f.add(b as u64, b2 as u64), f.mul(a2 as u64, asq)) as usize;
                    mul[idx(a, b) * order + idx(a2, b2)] = idx(aa, bb) as u32;
                }
            }
        }
    }
    let labels = (0..q)
        .flat_map(|a| (0..q).map(move |b| format!("U({},{})", a, b)))
        .collect();
    Group::from_table(format!("HV({})", n), order, mul, labels)
}

/// Central extension of order `p^(3n)` over GF(p^n): elements `(a, b, c)`
/// with `(a,b,c)(a',b',c') = (a + a', b + b' + c * a', c + c')`.
pub fn hanaki_p(n: u32, p: u64) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::Parameter("field degree must be positive".into()));
    }
    let f = GfField::new(p, n).map_err(|e| GroupError::Parameter(e.to_string()))?;
    let q = f.size() as usize;
    let order = q.checked_mul(q).and_then(|s| s.checked_mul(q)).ok_or(GroupError::TooLarge(usize::MAX))?;
    check_order(order)?;
    let idx = |a: usize, b: usize, c: usize| (a * q + b) * q + c;
    let mut mul = vec![0u32; order * order];
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let left = idx(a, b, c) * order;
                for a2 in 0..q {
                    let ca2 = f.mul(c as u64, a2 as u64);
                    for b2 in 0..q {
                        let bb = f.add(f.add(b as u64, b2 as u64), ca2) as usize;
                        for c2 in 0..q {
                            let aa = f.add(a as u64, a2 as u64) as usize;
                            let cc = f.add(c as u64, c2 as u64) as usize;
                            mul[left + idx(a2, b2, c2)] = idx(aa, bb, cc) as u32;
                        }
                    }
                }
            }
        }
    }
    let labels = (0..q)
        .flat_map(|a| {
            (0..q).flat_map(move |b| (0..q).map(move |c| format!("V({},{},{})", a, b, c)))
        })
        .collect();
    Group::from_table(format!("HP({},{})", n, p), order, mul, labels)
}

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn perm_parity(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut parity = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        parity ^= (len + 1) % 2;
    }
    parity
}

fn perm_group(name: &str, perms: Vec<Vec<usize>>) -> Result<Group, GroupError> {
    let order = perms.len();
    let k = perms[0].len();
    let index_of = |p: &[usize]| -> usize {
        perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed under composition")
    };
    let mut mul = vec![0u32; order * order];
    let mut buf = vec![0usize; k];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            for x in 0..k {
                buf[x] = pa[pb[x]];
            }
            mul[a * order + b] = index_of(&buf) as u32;
        }
    }
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
        .collect();
    Group::from_table(name, order, mul, labels)
}

/// Symmetric group on 4 letters (order 24).
pub fn symmetric4() -> Result<Group, GroupError> {
    perm_group("S4", permutations(4))
}

/// Alternating group on 4 letters (order 12).
pub fn alternating4() -> Result<Group, GroupError> {
    let perms = permutations(4).into_iter().filter(|p| perm_parity(p) == 0).collect();
    perm_group("A4", perms)
}

/// Alternating group on 5 letters (order 60).
pub fn alternating5() -> Result<Group, GroupError> {
    let perms = permutations(5).into_iter().filter(|p| perm_parity(p) == 0).collect();
    perm_group("A5", perms)
}

/// 2x2 matrices over GF(3) with determinant 1 (order 24).
pub fn sl23() -> Result<Group, GroupError> {
    let mut mats = Vec::new();
    for a in 0..3usize {
        for b in 0..3usize {
            for c in 0..3usize {
                for d in 0..3usize {
                    if (3 + a * d % 3 - b * c % 3) % 3 == 1 {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let order = mats.len();
    debug_assert_eq!(order, 24);
    let index_of = |m: &[usize; 4]| mats.binary_search(m).expect("closed under product");
    let mut mul = vec![0u32; order * order];
    for (i, x) in mats.iter().enumerate() {
        for (j, y) in mats.iter().enumerate() {
            let prod = [
                (x[0] * y[0] + x[1] * y[2]) % 3,
                (x[0] * y[1] + x[1] * y[3]) % 3,
                (x[2] * y[0] + x[3] * y[2]) % 3,
                (x[2] * y[1] + x[3] * y[3]) % 3,
            ];
            mul[i * order + j] = index_of(&prod) as u32;
        }
    }
    let labels = mats
        .iter()
        .map(|m| format!("[{}{};{}{}]", m[0], m[1], m[2], m[3]))
        .collect();
    Group::from_table("SL23", order, mul, labels)
}

/// Modular group of order 16: `a^8 = b^2 = 1`, `b a b^{-1} = a^5`.
pub fn modular16() -> Result<Group, GroupError> {
    twogen(8, 2, 5, 0, "M16")
}

/// Central product of the dihedral group of order 8 with a cyclic group of
/// order 4: realized as scalar-phased Pauli-type pairs `(s, sigma)` with
/// `s` counting quarter-turn phases.
pub fn pauli16() -> Result<Group, GroupError> {
    // sigma in {0: I, 1: X, 2: Y, 3: Z}; product table and phase (powers of
    // the order-4 central unit) for sigma * sigma'.
    const PROD: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
    const PHASE: [[usize; 4]; 4] = [
        [0, 0, 0, 0],
        [0, 0, 1, 3],
        [0, 3, 0, 1],
        [0, 1, 3, 0],
    ];
    let order = 16;
    let idx = |s: usize, sigma: usize| s * 4 + sigma;
    let mut mul = vec![0u32; order * order];
    for s in 0..4 {
        for sigma in 0..4 {
            for s2 in 0..4 {
                for sigma2 in 0..4 {
                    let ph = PHASE[sigma][sigma2];
                    mul[idx(s, sigma) * order + idx(s2, sigma2)] =
                        idx((s + s2 + ph) % 4, PROD[sigma][sigma2]) as u32;
                }
            }
        }
    }
    const NAMES: [&str; 4] = ["I", "X", "Y", "Z"];
    let labels = (0..4)
        .flat_map(|s| (0..4).map(move |sigma| format!("i^{}{}", s, NAMES[sigma])))
        .collect();
    Group::from_table("Pauli16", order, mul, labels)
}

/// The semidirect product `(Z_4 x Z_2) : Z_2` of order 16 in which the
/// involution twists the middle coordinate by the first:
/// `(i,j,k)(u,v,w) = (i+u, j+v+k*u, k+w)`.
pub fn sg16_3() -> Result<Group, GroupError> {
    let order = 16;
    let idx = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
    let mut mul = vec![0u32; order * order];
    for i in 0..4 {
        for j in 0..2 {
            for k in 0..2 {
                for u in 0..4 {
                    for v in 0..2 {
                        for w in 0..2 {
                            let ii = (i + u) % 4;
                            let jj = (j + v + k * u) % 2;
                            let kk = (k + w) % 2;
                            mul[idx(i, j, k) * order + idx(u, v, w)] = idx(ii, jj, kk) as u32;
                        }
                    }
                }
            }
        }
    }
    let labels = (0..4)
        .flat_map(|i| {
            (0..2).flat_map(move |j| (0..2).map(move |k| format!("({},{},{})", i, j, k)))
        })
        .collect();
    Group::from_table("SG16_3", order, mul, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twogen_family_orders_and_centers() {
        let cases: Vec<(Group, usize, usize)> = vec![
            (dihedral(3).unwrap(), 6, 1),
            (dihedral(6).unwrap(), 12, 2),
            (quasidihedral(4).unwrap(), 16, 2),
            (modular_m2rs(5, 2).unwrap(), 20, 2),
            (modular_m2rs(4, 2).unwrap(), 16, 4),
            (dicyclic(2).unwrap(), 8, 2),
            (dicyclic(3).unwrap(), 12, 2),
            (u6n(2).unwrap(), 12, 2),
            (semidihedral_8n(3).unwrap(), 24, 4),
            (semidihedral_8n(2).unwrap(), 16, 2),
            (v8n(3).unwrap(), 24, 2),
            (v8n(2).unwrap(), 16, 4),
            (frobenius(7, 3).unwrap(), 21, 1),
            (frobenius(5, 4).unwrap(), 20, 1),
        ];
        for (g, order, z) in cases {
            assert_eq!(g.order(), order, "order of {}", g.name());
            assert_eq!(g.center().len(), z, "center of {}", g.name());
            assert!(!g.is_abelian(), "{} should be non-abelian", g.name());
        }
    }

    #[test]
    fn quaternion_group_relations() {
        let q8 = dicyclic(2).unwrap();
        // b^2 = a^2 (the unique central involution).
        let b = 1; // (i=0, j=1)
        let a = 2; // (i=1, j=0)
        assert_eq!(q8.mul(b, b), q8.mul(a, a));
        assert_eq!(q8.element_order(a), 4);
        assert_eq!(q8.element_order(b), 4);
    }

    #[test]
    fn central_extension_families() {
        let hv2 = hanaki_v(2).unwrap();
        assert_eq!(hv2.order(), 16);
        assert_eq!(hv2.center().len(), 4);
        assert!(!hv2.is_abelian());

        let hv1_is_abelian = hanaki_v(1).unwrap();
        assert!(hv1_is_abelian.is_abelian());

        let hp13 = hanaki_p(1, 3).unwrap();
        assert_eq!(hp13.order(), 27);
        assert_eq!(hp13.center().len(), 3);
        assert!(!hp13.is_abelian());

        let hp22 = hanaki_p(2, 2).unwrap();
        assert_eq!(hp22.order(), 64);
        assert_eq!(hp22.center().len(), 4);
    }

    #[test]
    fn permutation_and_matrix_groups() {
        let s4 = symmetric4().unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.center().len(), 1);

        let a4 = alternating4().unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.center().len(), 1);

        let a5 = alternating5().unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(a5.center().len(), 1);

        let sl = sl23().unwrap();
        assert_eq!(sl.order(), 24);
        assert_eq!(sl.center().len(), 2);
    }

    #[test]
    fn order_sixteen_exceptional_groups() {
        for g in [modular16().unwrap(), pauli16().unwrap(), sg16_3().unwrap()] {
            assert_eq!(g.order(), 16, "{}", g.name());
            assert_eq!(g.center().len(), 4, "center of {}", g.name());
            assert!(!g.is_abelian(), "{}", g.name());
        }
    }

    #[test]
    fn frobenius_rejects_bad_parameters() {
        assert!(frobenius(6, 3).is_err()); // 6 not prime
        assert!(frobenius(7, 4).is_err()); // 4 does not divide 6
        assert!(frobenius(7, 5).is_err()); // 5 does not divide 6
        assert!(frobenius(3, 7).is_err()); // 7 does not divide 2
    }

    #[test]
    fn u6n_relations() {
        let u6 = u6n(1).unwrap();
        assert_eq!(u6.order(), 6);
        assert_eq!(u6.center().len(), 1);
        // U(6) is the dihedral group of order 6: non-abelian of order 6.
        assert!(!u6.is_abelian());
        let u18 = u6n(3).unwrap();
        assert_eq!(u18.order(), 18);
        assert_eq!(u18.center().len(), 3);
    }
}

//! Finite groups represented by explicit multiplication tables.
//!
//! Every constructor funnels through [`Group::from_table`], which validates
//! the table (Latin square, identity, two-sided inverses, associativity)
//! before handing out a `Group`. Associativity is checked on all triples for
//! orders up to 256 and on a large deterministic sample above that.

pub mod build;
pub mod parse;

use bitvec::prelude::*;
use thiserror::Error;

/// Hard cap on group order (tables are dense `order x order` arrays).
pub const MAX_ORDER: usize = 10_000;
/// Below this order, associativity is verified on every triple.
const FULL_ASSOC_LIMIT: usize = 256;
/// Number of deterministically sampled triples above the full-check limit.
const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("table size {got} does not match order {order} squared")]
    BadTableSize { order: usize, got: usize },
    #[error("table entry out of range at ({0}, {1})")]
    EntryOutOfRange(usize, usize),
    #[error("multiplication table is not a Latin square (row or column {0})")]
    NotLatin(usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("associativity fails at triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("group order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(usize),
    #[error("invalid group description: {0}")]
    Parse(String),
    #[error("invalid construction parameter: {0}")]
    Parameter(String),
}

/// A finite group with elements `0..order` and a dense multiplication table.
#[derive(Clone, Debug)]
pub struct Group {
    name: String,
    order: usize,
    /// Row-major: `mul[a * order + b]` is the product `a * b`.
    mul: Vec<u32>,
    labels: Vec<String>,
    identity: usize,
}

impl Group {
    /// Validate a multiplication table and wrap it as a group.
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        mul: Vec<u32>,
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        if mul.len() != order * order || labels.len() != order {
            return Err(GroupError::BadTableSize { order, got: mul.len() });
        }
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        for a in 0..order {
            for b in 0..order {
                if at(a, b) >= order {
                    return Err(GroupError::EntryOutOfRange(a, b));
                }
            }
        }

        // Latin square: every row and every column is a permutation.
        let mut seen = bitvec![0; order];
        for a in 0..order {
            seen.fill(false);
            for b in 0..order {
                let v = at(a, b);
                if seen.replace(v, true) {
                    return Err(GroupError::NotLatin(a));
                }
            }
            seen.fill(false);
            for b in 0..order {
                let v = at(b, a);
                if seen.replace(v, true) {
                    return Err(GroupError::NotLatin(a));
                }
            }
        }

        // Two-sided identity.
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;

        // Two-sided inverses.
        for a in 0..order {
            let b = (0..order).find(|&b| at(a, b) == identity).unwrap();
            if at(b, a) != identity {
                return Err(GroupError::NoInverse(a));
            }
        }

        // Associativity.
        if order <= FULL_ASSOC_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            // Deterministic splitmix-style sampling of triples.
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for _ in 0..SAMPLED_TRIPLES {
                let a = next() % order;
                let b = next() % order;
                let c = next() % order;
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }

        Ok(Group { name: name.into(), order, mul, labels, identity })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("validated groups have inverses")
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Elements commuting with everything, in ascending element order.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| (0..self.order).all(|y| self.commute(x, y)))
            .collect()
    }

    pub fn centralizer_size(&self, x: usize) -> usize {
        (0..self.order).filter(|&y| self.commute(x, y)).count()
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// Direct product; the combined order must stay within [`MAX_ORDER`].
    pub fn direct_product(&self, other: &Group) -> Result<Group, GroupError> {
        let n1 = self.order;
        let n2 = other.order;
        let order = n1.checked_mul(n2).filter(|&n| n <= MAX_ORDER).ok_or_else(|| {
            GroupError::TooLarge(n1.saturating_mul(n2))
        })?;
        let mut mul = vec![0u32; order * order];
        for a1 in 0..n1 {
            for a2 in 0..n2 {
                let a = a1 * n2 + a2;
                for b1 in 0..n1 {
                    for b2 in 0..n2 {
                        let b = b1 * n2 + b2;
                        mul[a * order + b] = (self.mul(a1, b1) * n2 + other.mul(a2, b2)) as u32;
                    }
                }
            }
        }
        let labels = (0..n1)
            .flat_map(|a1| {
                (0..n2).map(move |a2| format!("({},{})", self.labels[a1], other.labels[a2]))
            })
            .collect();
        Group::from_table(format!("{}x{}", self.name, other.name), order, mul, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::build;
    use super::*;

    #[test]
    fn rejects_broken_tables() {
        // Not Latin: constant row.
        let bad = Group::from_table("bad", 2, vec![0, 0, 1, 0], vec!["e".into(), "a".into()]);
        assert!(matches!(bad, Err(GroupError::NotLatin(_))));

        // Latin but not associative and without identity: a 5x5 quasigroup.
        // Row i is the cyclic shift by i of (0..5) composed with a twist.
        let n = 5;
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = ((2 * a + b) % n) as u32;
            }
        }
        let labels = (0..n).map(|i| format!("g{}", i)).collect();
        let bad = Group::from_table("quasigroup", n, mul, labels);
        assert!(matches!(
            bad,
            Err(GroupError::NoIdentity) | Err(GroupError::NotAssociative(..))
        ));
    }

    #[test]
    fn cyclic_group_properties() {
        let z6 = build::cyclic(6).unwrap();
        assert_eq!(z6.order(), 6);
        assert!(z6.is_abelian());
        assert_eq!(z6.center().len(), 6);
        assert_eq!(z6.element_order(1), 6);
        assert_eq!(z6.element_order(2), 3);
        assert_eq!(z6.inv(2), 4);
    }

    #[test]
    fn direct_product_structure() {
        let d6 = build::dihedral(3).unwrap();
        let z2 = build::cyclic(2).unwrap();
        let g = d6.direct_product(&z2).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.name(), "D6xZ2");
        assert!(!g.is_abelian());
        assert_eq!(g.center().len(), 2);
    }

    #[test]
    fn center_of_dihedral_groups() {
        assert_eq!(build::dihedral(3).unwrap().center().len(), 1);
        assert_eq!(build::dihedral(4).unwrap().center().len(), 2);
        assert_eq!(build::dihedral(5).unwrap().center().len(), 1);
        assert_eq!(build::dihedral(6).unwrap().center().len(), 2);
    }

    #[test]
    fn product_too_large_is_rejected() {
        let z100 = build::cyclic(100).unwrap();
        let z200 = build::cyclic(200).unwrap();
        assert_eq!(
            z100.direct_product(&z200).unwrap_err(),
            GroupError::TooLarge(20_000)
        );
    }
}

//! Canonical subsets of a fixed finite universe.

use std::cmp::Ordering;
use std::fmt;

/// A subset of `{0, …, universe-1}` in bit-vector form.
///
/// Theories, filters, open sets, and point sets are all values of this type.
/// Equality is structural, and the `Ord` instance compares the bit encoding
/// numerically (element `i` contributes `2^i`); that encoding is the
/// canonical order used by every list-returning operation in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExprSet {
    universe: usize,
    bits: Vec<u64>,
}

fn limbs_for(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl ExprSet {
    pub fn empty(universe: usize) -> Self {
        ExprSet {
            universe,
            bits: vec![0; limbs_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, member: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(member);
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut s = Self::empty(universe);
        for m in members {
            s.insert(m);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "element {i} outside universe {}", self.universe);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.universe, "element {i} outside universe {}", self.universe);
        self.bits[i / 64] &= !(1 << (i % 64));
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "set operation across different universes"
        );
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        ExprSet {
            universe: self.universe,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        ExprSet {
            universe: self.universe,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        ExprSet {
            universe: self.universe,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let mut out = ExprSet {
            universe: self.universe,
            bits: self.bits.iter().map(|a| !a).collect(),
        };
        // keep bits beyond the universe clear so equality stays structural
        let tail = self.universe % 64;
        if tail != 0 {
            if let Some(last) = out.bits.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if self.universe == 0 {
            out.bits.iter_mut().for_each(|w| *w = 0);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl PartialOrd for ExprSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExprSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.bits.iter().rev().cmp(other.bits.iter().rev()))
    }
}

// Sets print as "{0,2,5}".
impl fmt::Display for ExprSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ExprSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_bit_value_order() {
        // {2} encodes as 4, {1,2} as 6: the singleton top filter sorts first.
        let a = ExprSet::from_members(3, [2]);
        let b = ExprSet::from_members(3, [1, 2]);
        assert!(a < b);
        let c = ExprSet::from_members(3, [0, 2]);
        // {1} = 2 sorts before {0,2} = 5
        assert!(ExprSet::from_members(3, [1]) < c);
    }

    #[test]
    fn complement_stays_within_universe() {
        let a = ExprSet::from_members(5, [0, 3]);
        let c = a.complement();
        assert_eq!(c.members(), vec![1, 2, 4]);
        assert_eq!(c.complement(), a);
        assert!(ExprSet::empty(0).complement().is_empty());
    }

    #[test]
    fn subset_and_lattice_ops() {
        let a = ExprSet::from_members(70, [0, 65]);
        let b = ExprSet::from_members(70, [0, 3, 65]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.union(&b), b);
        assert_eq!(a.intersection(&b), a);
        assert_eq!(b.difference(&a).members(), vec![3]);
        assert!(a.contains(65));
        assert_eq!(b.len(), 3);
    }
}

//! Finite posets, lattices, filters, and Heyting implication.
//!
//! Everything here is immutable after construction and checked exhaustively
//! on construction: `validate_poset` closes and verifies the order axioms,
//! `lattice_from_order` computes meet/join tables by bound search, and
//! `heyting_implication` realizes a→b as the maximum of `{z : z ∧ a ≤ b}`.

use crate::set::ExprSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("relation references index {index} outside 0..{size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("antisymmetry fails: {a} and {b} lie on a common cycle")]
    CycleDetected { a: usize, b: usize },
    #[error("pair ({a}, {b}) has no meet or join in the order")]
    NotALattice { a: usize, b: usize },
    #[error("no relative pseudocomplement for pair ({a}, {b}): the set {{z : z ∧ {a} ≤ {b}}} has no maximum")]
    NotHeyting { a: usize, b: usize },
    #[error("lattice is degenerate (bottom equals top or carrier is empty)")]
    DegenerateLattice,
}

/// A finite partial order on indices `0..size`.
///
/// Stored as one up-set per point: `up[a] = {b : a ≤ b}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    size: usize,
    up: Vec<ExprSet>,
}

/// Builds a poset from any relation on `0..size`, given as pairs `(a, b)`
/// meaning `a ≤ b`. The input may be a Hasse covering relation; the stored
/// order is its reflexive-transitive closure.
pub fn validate_poset(size: usize, relation: &[(usize, usize)]) -> Result<FinitePoset, OrderError> {
    let mut up: Vec<ExprSet> = (0..size).map(|a| ExprSet::singleton(size, a)).collect();
    for &(a, b) in relation {
        for ix in [a, b] {
            if ix >= size {
                return Err(OrderError::IndexOutOfRange { index: ix, size });
            }
        }
        up[a].insert(b);
    }
    // transitive closure, Floyd-Warshall over bit rows
    for k in 0..size {
        for a in 0..size {
            if up[a].contains(k) {
                let row_k = up[k].clone();
                up[a] = up[a].union(&row_k);
            }
        }
    }
    for a in 0..size {
        for b in (a + 1)..size {
            if up[a].contains(b) && up[b].contains(a) {
                return Err(OrderError::CycleDetected { a, b });
            }
        }
    }
    Ok(FinitePoset { size, up })
}

impl FinitePoset {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up_set(&self, a: usize) -> &ExprSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> ExprSet {
        ExprSet::from_members(self.size, (0..self.size).filter(|&b| self.leq(b, a)))
    }

    pub fn is_up_set(&self, s: &ExprSet) -> bool {
        s.iter().all(|a| self.up[a].is_subset(s))
    }

    pub fn down_closure(&self, s: &ExprSet) -> ExprSet {
        let mut out = ExprSet::empty(self.size);
        for a in 0..self.size {
            if !self.up[a].is_disjoint(s) {
                out.insert(a);
            }
        }
        out
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in 0..self.size {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..self.size)
                    .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| (0..self.size).all(|b| b == a || !self.leq(b, a)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| (0..self.size).all(|b| b == a || !self.leq(a, b)))
            .collect()
    }
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinitePoset(size={}, covers={:?})", self.size, self.covers())
    }
}

/// A finite lattice: a poset with total meet/join tables and its bounds.
///
/// `lattice_from_order` only returns a value when every pair has a greatest
/// lower bound and a least upper bound, so `meet`/`join` are always total.
/// Nonempty finite lattices always carry both bounds.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bot: Option<usize>,
    top: Option<usize>,
}

/// Computes meet and join tables by exhaustive bound search over the order.
pub fn lattice_from_order(poset: FinitePoset) -> Result<FiniteLattice, OrderError> {
    let n = poset.size();
    let downs: Vec<ExprSet> = (0..n).map(|a| poset.down_set(a)).collect();
    let ups: Vec<ExprSet> = (0..n).map(|a| poset.up_set(a).clone()).collect();

    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let lower = downs[a].intersection(&downs[b]);
            // the meet is the member of `lower` that dominates all of `lower`
            let glb = lower.iter().find(|&m| lower.is_subset(&downs[m]));
            match glb {
                Some(m) => meet[a][b] = m,
                None => return Err(OrderError::NotALattice { a, b }),
            }
            let upper = ups[a].intersection(&ups[b]);
            let lub = upper.iter().find(|&j| upper.is_subset(&ups[j]));
            match lub {
                Some(j) => join[a][b] = j,
                None => return Err(OrderError::NotALattice { a, b }),
            }
        }
    }
    let bot = (0..n).find(|&x| (0..n).all(|y| poset.leq(x, y)));
    let top = (0..n).find(|&x| (0..n).all(|y| poset.leq(y, x)));
    Ok(FiniteLattice { poset, meet, join, bot, top })
}

impl FiniteLattice {
    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn bot(&self) -> Option<usize> {
        self.bot
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    /// Both bounds, provided they are distinct.
    pub fn proper_bounds(&self) -> Option<(usize, usize)> {
        match (self.bot, self.top) {
            (Some(b), Some(t)) if b != t => Some((b, t)),
            _ => None,
        }
    }

    /// Exhaustive check of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` over all triples.
    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteLattice(size={}, bot={:?}, top={:?}, covers={:?})",
            self.size(),
            self.bot,
            self.top,
            self.poset.covers()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterKind {
    All,
    Proper,
    Prime,
}

/// Enumerates the filters of a finite lattice in canonical order.
///
/// Every filter of a finite lattice is principal (it contains the meet of
/// its finitely many members), so the candidates are exactly the up-sets
/// `↑x`; each is still verified against the filter axioms, and primality is
/// tested by definition: `a ∨ b ∈ F` forces `a ∈ F` or `b ∈ F`.
pub fn filters(lat: &FiniteLattice, kind: FilterKind) -> Result<Vec<ExprSet>, OrderError> {
    let n = lat.size();
    if kind != FilterKind::All && lat.proper_bounds().is_none() {
        return Err(OrderError::DegenerateLattice);
    }
    let mut out = Vec::new();
    for x in 0..n {
        let f = lat.poset().up_set(x).clone();
        debug_assert!(is_filter(lat, &f));
        match kind {
            FilterKind::All => out.push(f),
            FilterKind::Proper | FilterKind::Prime => {
                if Some(x) == lat.bot() {
                    continue;
                }
                if kind == FilterKind::Prime && !splits_joins(lat, &f) {
                    continue;
                }
                out.push(f);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn is_filter(lat: &FiniteLattice, f: &ExprSet) -> bool {
    if f.is_empty() || !lat.poset().is_up_set(f) {
        return false;
    }
    f.iter().all(|a| f.iter().all(|b| f.contains(lat.meet(a, b))))
}

fn splits_joins(lat: &FiniteLattice, f: &ExprSet) -> bool {
    let n = lat.size();
    for a in 0..n {
        for b in 0..n {
            if f.contains(lat.join(a, b)) && !f.contains(a) && !f.contains(b) {
                return false;
            }
        }
    }
    true
}

/// A finite Heyting algebra: a bounded lattice together with the table of
/// relative pseudocomplements, `implication[a][b] = max {z : z ∧ a ≤ b}`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeytingAlgebra {
    lattice: FiniteLattice,
    implication: Vec<Vec<usize>>,
}

/// Attempts the Heyting implication table for a bounded lattice.
///
/// Fails with the first pair (in lexicographic order) whose candidate set
/// `{z : z ∧ a ≤ b}` lacks a maximum; on a finite bounded lattice this
/// happens exactly when the lattice is not distributive.
pub fn heyting_implication(lat: FiniteLattice) -> Result<HeytingAlgebra, OrderError> {
    let n = lat.size();
    if lat.proper_bounds().is_none() && n != 1 {
        return Err(OrderError::DegenerateLattice);
    }
    let mut implication = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let candidates =
                ExprSet::from_members(n, (0..n).filter(|&z| lat.leq(lat.meet(z, a), b)));
            let max = candidates
                .iter()
                .find(|&m| candidates.iter().all(|z| lat.leq(z, m)));
            match max {
                Some(m) => implication[a][b] = m,
                None => return Err(OrderError::NotHeyting { a, b }),
            }
        }
    }
    Ok(HeytingAlgebra { lattice: lat, implication })
}

impl HeytingAlgebra {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn implies(&self, a: usize, b: usize) -> usize {
        self.implication[a][b]
    }

    pub fn implication_table(&self) -> &Vec<Vec<usize>> {
        &self.implication
    }

    /// Derived negation `¬a = a → ⊥`.
    pub fn neg(&self, a: usize) -> usize {
        self.implies(a, self.lattice.bot().expect("Heyting algebras are bounded"))
    }

    /// The defining adjunction: `z ≤ a → b ⇔ z ∧ a ≤ b` for all triples.
    pub fn adjunction_holds(&self) -> bool {
        let n = self.size();
        for z in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let lhs = self.lattice.leq(z, self.implies(a, b));
                    let rhs = self.lattice.leq(self.lattice.meet(z, a), b);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for HeytingAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HeytingAlgebra({:?})", self.lattice)
    }
}

/// The lattice of all up-sets of a poset, ordered by inclusion.
///
/// Meet is intersection and join is union, so the result is always bounded
/// and distributive. The carrier is the canonical (bit-order) listing of the
/// up-sets; element `0` is the empty set and the last element is the full set.
pub fn upset_lattice(poset: &FinitePoset) -> FiniteLattice {
    let upsets = upsets_of(poset);
    assert!(upsets.len() <= 1024, "up-set lattice carrier is too large");

    let mut pairs = Vec::new();
    for (i, u) in upsets.iter().enumerate() {
        for (j, v) in upsets.iter().enumerate() {
            if u.is_subset(v) {
                pairs.push((i, j));
            }
        }
    }
    let order = validate_poset(upsets.len(), &pairs).expect("inclusion is a partial order");
    let lat = lattice_from_order(order).expect("up-sets are closed under union and intersection");
    // the bound-search route must agree with intersection/union
    debug_assert!({
        let index_of = |s: &ExprSet| upsets.binary_search(s).unwrap();
        (0..upsets.len()).all(|i| {
            (0..upsets.len()).all(|j| {
                lat.meet(i, j) == index_of(&upsets[i].intersection(&upsets[j]))
                    && lat.join(i, j) == index_of(&upsets[i].union(&upsets[j]))
            })
        })
    });
    lat
}

/// The up-sets of a poset in canonical order (the carrier of `upset_lattice`).
pub fn upsets_of(poset: &FinitePoset) -> Vec<ExprSet> {
    let n = poset.size();
    assert!(n <= 20, "up-set family of a {n}-point poset is too large");
    let mut upsets: Vec<ExprSet> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s = ExprSet::from_members(n, (0..n).filter(|&i| mask & (1 << i) != 0));
        if poset.is_up_set(&s) {
            upsets.push(s);
        }
    }
    upsets.sort();
    upsets
}

//! Exact computations for small permutation groups.
//!
//! The engine is deliberately tiny: the largest group the catalogs ever need
//! is `A5` of order 60, so groups are capped at [`ORDER_BOUND`] elements and
//! subgroups are stored as 64-bit element masks. Everything is enumerated
//! exhaustively; no Schreier–Sims, no cosets.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

/// Hard cap on group order. `A5` (order 60) is the largest group required.
pub const ORDER_BOUND: u64 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("group order exceeds the bound of {bound} elements")]
    OrderBoundExceeded { bound: u64 },
    #[error("permutation image {map:?} is not a bijection")]
    InvalidPermutation { map: Vec<u16> },
    #[error("generator acts on {found} points, group degree is {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("Burnside sum {total_fixed} is not divisible by the group order {order}: inconsistent action")]
    NonIntegralBurnsideSum { total_fixed: u64, order: u64 },
    #[error("an action needs at least the identity element")]
    EmptyAction,
}

/// A permutation of `{0, .., degree-1}`, stored as a dense image array.
/// Equality is array equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            map: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn new(map: Vec<u16>) -> Result<Self, EngineError> {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if (v as usize) >= map.len() || seen[v as usize] {
                return Err(EngineError::InvalidPermutation { map });
            }
            seen[v as usize] = true;
        }
        Ok(Self { map })
    }

    /// Builds a permutation of `{0, .., degree-1}` from disjoint cycles.
    /// Points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[u16]]) -> Self {
        let mut map: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                assert!(
                    from < degree && (to as usize) < degree,
                    "cycle point out of range"
                );
                map[from] = to;
            }
        }
        Permutation::new(map).expect("cycles must be disjoint")
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: u16) -> u16 {
        self.map[point as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            map: other.map.iter().map(|&p| self.map[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0u16; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize] = i as u16;
        }
        Permutation { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i as u16 == v)
    }

    pub fn fixed_points(&self) -> u64 {
        self.map
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i as u16 == v)
            .count() as u64
    }
}

/// A finite permutation group given by generators on `degree` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, EngineError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(EngineError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(Self { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Cyclic group `Z/m` acting as an `m`-cycle.
    pub fn cyclic(m: u64) -> Self {
        let m = m as usize;
        if m <= 1 {
            return Self {
                degree: 1,
                generators: vec![],
            };
        }
        let cycle: Vec<u16> = (0..m as u16).collect();
        Self {
            degree: m,
            generators: vec![Permutation::from_cycles(m, &[&cycle])],
        }
    }

    /// Dihedral group of order `2m` (rotations plus reflections).
    pub fn dihedral(m: u64) -> Self {
        match m {
            0 | 1 => Self {
                degree: 2,
                generators: vec![Permutation::from_cycles(2, &[&[0, 1]])],
            },
            // Klein four-group: a faithful degree-4 action.
            2 => Self {
                degree: 4,
                generators: vec![
                    Permutation::from_cycles(4, &[&[0, 1]]),
                    Permutation::from_cycles(4, &[&[2, 3]]),
                ],
            },
            m => {
                let m = m as usize;
                let cycle: Vec<u16> = (0..m as u16).collect();
                let rotation = Permutation::from_cycles(m, &[&cycle]);
                let reflection =
                    Permutation::new((0..m as u16).map(|i| (m as u16) - 1 - i).collect()).unwrap();
                Self {
                    degree: m,
                    generators: vec![rotation, reflection],
                }
            }
        }
    }

    pub fn klein_four() -> Self {
        Self::dihedral(2)
    }

    /// Tetrahedral rotation group on 4 vertices.
    pub fn alternating4() -> Self {
        Self {
            degree: 4,
            generators: vec![
                Permutation::from_cycles(4, &[&[0, 1, 2]]),
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]),
            ],
        }
    }

    /// Octahedral rotation group as `S4`.
    pub fn symmetric4() -> Self {
        Self {
            degree: 4,
            generators: vec![
                Permutation::from_cycles(4, &[&[0, 1, 2, 3]]),
                Permutation::from_cycles(4, &[&[0, 1]]),
            ],
        }
    }

    /// Icosahedral rotation group as `A5`.
    pub fn alternating5() -> Self {
        Self {
            degree: 5,
            generators: vec![
                Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
                Permutation::from_cycles(5, &[&[0, 1, 2]]),
            ],
        }
    }

    /// Enumerates all group elements by closing the generators under
    /// composition. Fails once the closure passes [`ORDER_BOUND`] elements.
    ///
    /// The result is sorted, so the identity is always first.
    pub fn elements(&self) -> Result<Vec<Permutation>, EngineError> {
        let identity = Permutation::identity(self.degree);
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() as u64 > ORDER_BOUND {
                        return Err(EngineError::OrderBoundExceeded { bound: ORDER_BOUND });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn order(&self) -> Result<u64, EngineError> {
        Ok(self.elements()?.len() as u64)
    }

    /// Builds the multiplication structure and the full subgroup lattice.
    pub fn lattice(&self) -> Result<SubgroupLattice, EngineError> {
        SubgroupLattice::build(self)
    }

    /// Longest strictly increasing subgroup chain from the trivial group to
    /// the full group.
    pub fn chain_length(&self) -> Result<u64, EngineError> {
        Ok(self.lattice()?.chain_length())
    }

    /// True iff the derived series reaches the trivial group.
    pub fn is_solvable(&self) -> Result<bool, EngineError> {
        let table = MultiplicationTable::build(self)?;
        let mut current = table.full_mask();
        loop {
            let derived = table.commutator_subgroup(current);
            if derived == current {
                return Ok(current == 1);
            }
            current = derived;
        }
    }
}

/// Precomputed multiplication and inverse tables over the enumerated
/// elements. Element ids index the sorted element list; id 0 is the identity.
struct MultiplicationTable {
    size: usize,
    prod: Vec<u16>,
    inv: Vec<u16>,
}

impl MultiplicationTable {
    fn build(group: &PermutationGroup) -> Result<Self, EngineError> {
        let elems = group.elements()?;
        let size = elems.len();
        debug_assert!(elems[0].is_identity());
        let index: HashMap<&Permutation, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u16))
            .collect();
        let mut prod = vec![0u16; size * size];
        let mut inv = vec![0u16; size];
        for (i, a) in elems.iter().enumerate() {
            inv[i] = index[&a.inverse()];
            for (j, b) in elems.iter().enumerate() {
                prod[i * size + j] = index[&a.compose(b)];
            }
        }
        Ok(Self { size, prod, inv })
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        self.prod[a as usize * self.size + b as usize]
    }

    fn full_mask(&self) -> u64 {
        // size <= ORDER_BOUND = 60, so the shift is in range.
        (1u64 << self.size) - 1
    }

    /// Closes a nonempty element mask under products. In a finite group this
    /// yields the generated subgroup.
    fn close(&self, mut mask: u64) -> u64 {
        mask |= 1; // identity
        loop {
            let mut next = mask;
            let mut a_bits = mask;
            while a_bits != 0 {
                let a = a_bits.trailing_zeros() as u16;
                a_bits &= a_bits - 1;
                let mut b_bits = mask;
                while b_bits != 0 {
                    let b = b_bits.trailing_zeros() as u16;
                    b_bits &= b_bits - 1;
                    next |= 1u64 << self.mul(a, b);
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    /// Subgroup generated by all commutators of elements of `mask`.
    fn commutator_subgroup(&self, mask: u64) -> u64 {
        let mut gens = 1u64;
        let mut a_bits = mask;
        while a_bits != 0 {
            let a = a_bits.trailing_zeros() as u16;
            a_bits &= a_bits - 1;
            let mut b_bits = mask;
            while b_bits != 0 {
                let b = b_bits.trailing_zeros() as u16;
                b_bits &= b_bits - 1;
                let c = self.mul(
                    self.mul(self.inv[a as usize], self.inv[b as usize]),
                    self.mul(a, b),
                );
                gens |= 1u64 << c;
            }
        }
        self.close(gens)
    }
}

/// Every subgroup of a permutation group, with its containment order.
///
/// Subgroups are element masks over the sorted element list; the lattice is
/// immutable once built and cheap to share.
pub struct SubgroupLattice {
    elements: Vec<Permutation>,
    /// Sorted by (order, mask), so the trivial subgroup is first and the full
    /// group is last.
    subgroups: Vec<u64>,
}

impl SubgroupLattice {
    fn build(group: &PermutationGroup) -> Result<Self, EngineError> {
        let table = MultiplicationTable::build(group)?;
        let elements = group.elements()?;
        let mut found: BTreeSet<u64> = BTreeSet::new();
        found.insert(1u64);
        let mut queue: VecDeque<u64> = VecDeque::new();
        // Seed with every cyclic subgroup, then grow each known subgroup by
        // one extra generator until nothing new appears. Every subgroup is
        // reachable this way.
        for g in 0..table.size as u16 {
            let cyc = table.close(1u64 | (1u64 << g));
            if found.insert(cyc) {
                queue.push_back(cyc);
            }
        }
        while let Some(h) = queue.pop_front() {
            for g in 0..table.size as u16 {
                if h & (1u64 << g) != 0 {
                    continue;
                }
                let k = table.close(h | (1u64 << g));
                if found.insert(k) {
                    queue.push_back(k);
                }
            }
        }
        let mut subgroups: Vec<u64> = found.into_iter().collect();
        subgroups.sort_by_key(|m| (m.count_ones(), *m));
        Ok(Self {
            elements,
            subgroups,
        })
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn subgroup_order(&self, i: usize) -> u64 {
        self.subgroups[i].count_ones() as u64
    }

    pub fn subgroup_elements(&self, i: usize) -> Vec<Permutation> {
        let mask = self.subgroups[i];
        (0..self.elements.len())
            .filter(|&e| mask & (1u64 << e) != 0)
            .map(|e| self.elements[e].clone())
            .collect()
    }

    /// Containment: is subgroup `i` contained in subgroup `j`?
    pub fn is_contained(&self, i: usize, j: usize) -> bool {
        self.subgroups[i] & !self.subgroups[j] == 0
    }

    /// Longest strictly increasing chain from the trivial subgroup to the
    /// full group, i.e. the length `λ` of the group.
    pub fn chain_length(&self) -> u64 {
        let k = self.subgroups.len();
        let mut longest = vec![0u64; k];
        for i in 1..k {
            // Subgroups are sorted by order, so proper subgroups precede i.
            longest[i] = (0..i)
                .filter(|&j| self.subgroups[j] != self.subgroups[i] && self.is_contained(j, i))
                .map(|j| longest[j] + 1)
                .max()
                .unwrap_or(0);
        }
        longest[k - 1]
    }
}

/// Burnside count: `(1/|G|) Σ_g |Fix(g)|`, over an explicit list of the
/// permutations induced on a marked set by every group element.
///
/// A non-integral average signals an inconsistent action and is an error.
pub fn burnside_orbit_count(action: &[Permutation]) -> Result<u64, EngineError> {
    if action.is_empty() {
        return Err(EngineError::EmptyAction);
    }
    let order = action.len() as u64;
    let total_fixed: u64 = action.iter().map(Permutation::fixed_points).sum();
    if !total_fixed.is_multiple_of(order) {
        return Err(EngineError::NonIntegralBurnsideSum { total_fixed, order });
    }
    Ok(total_fixed / order)
}

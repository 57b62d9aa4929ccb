//! Saturation closure over Lambda and the enumeration of saturated and
//! bisaturated index sets. Bisaturated sets are in bijection with bands,
//! which is what makes the brute-force closure enumeration here the heart
//! of the band listing.

use std::collections::BTreeSet;
use std::fmt;

use crate::cone::LambdaSet;
use crate::error::{Error, Result};
use crate::ratmath::affine_hull_contains;

/// A subset of Lambda by indices, kept in canonical sorted order via a
/// bitmask. `universe` is |Lambda|.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexSet {
    mask: u64,
    universe: usize,
}

impl IndexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= 63);
        IndexSet { mask: 0, universe }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= 63);
        IndexSet {
            mask: (1u64 << universe) - 1,
            universe,
        }
    }

    pub fn from_indices(indices: &[usize], universe: usize) -> Self {
        let mut s = IndexSet::empty(universe);
        for &i in indices {
            assert!(i < universe, "index {i} out of range for |Lambda| = {universe}");
            s.mask |= 1 << i;
        }
        s
    }

    pub fn from_mask(mask: u64, universe: usize) -> Self {
        assert!(universe <= 63 && mask < (1u64 << universe) || mask == 0);
        IndexSet { mask, universe }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.universe > 0 && self.mask == (1u64 << self.universe) - 1
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.mask & (1 << i) != 0
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet {
            mask: !self.mask & ((1u64 << self.universe) - 1),
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        assert_eq!(self.universe, other.universe);
        IndexSet {
            mask: self.mask | other.mask,
            universe: self.universe,
        }
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.universe == other.universe && self.mask & !other.mask == 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.universe).filter(|&i| self.contains(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for IndexSet {
    /// 1-based display, matching the usual phi_1..phi_m convention.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Saturated,
    Bisaturated,
}

/// A deduplicated family of index sets, sorted lexicographically by member
/// list for reproducible output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedFamily {
    pub sets: Vec<IndexSet>,
    pub kind: FamilyKind,
}

impl SaturatedFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &IndexSet) -> bool {
        self.sets.contains(s)
    }
}

fn sort_family(sets: BTreeSet<IndexSet>, kind: FamilyKind) -> SaturatedFamily {
    let mut sets: Vec<IndexSet> = sets.into_iter().collect();
    sets.sort_by_key(|s| s.indices());
    SaturatedFamily { sets, kind }
}

/// sat(M) = Lambda intersect aff(M); sat(empty) = empty.
pub fn saturate(m: &IndexSet, lambda: &LambdaSet) -> IndexSet {
    assert_eq!(m.universe(), lambda.len());
    if m.is_empty() {
        return *m;
    }
    let points: Vec<_> = m.iter().map(|i| lambda.functional(i).clone()).collect();
    let mut out = *m;
    for j in m.complement().iter() {
        if affine_hull_contains(&points, lambda.functional(j)) {
            out = out.union(&IndexSet::from_indices(&[j], m.universe()));
        }
    }
    out
}

pub fn is_saturated(m: &IndexSet, lambda: &LambdaSet) -> bool {
    saturate(m, lambda) == *m
}

/// M = sat((sat(M^c))^c), the finite rewrite of bisaturation.
pub fn is_bisaturated(m: &IndexSet, lambda: &LambdaSet) -> bool {
    let double = saturate(&saturate(&m.complement(), lambda).complement(), lambda);
    double == *m
}

/// sat(M^c): the other half of the bisaturated pair. The pair covers
/// Lambda and partner is an involution on bisaturated sets.
pub fn partner(m: &IndexSet, lambda: &LambdaSet) -> Result<IndexSet> {
    if !is_bisaturated(m, lambda) {
        return Err(Error::NotBisaturated { set: m.to_string() });
    }
    Ok(saturate(&m.complement(), lambda))
}

/// All fixed points of `saturate`, by closing every subset of Lambda.
pub fn enumerate_saturated(lambda: &LambdaSet, cap: usize) -> Result<SaturatedFamily> {
    let k = check_cap(lambda, cap)?;
    let mut closed = BTreeSet::new();
    for mask in 0..(1u64 << k) {
        closed.insert(saturate(&IndexSet::from_mask(mask, k), lambda));
    }
    Ok(sort_family(closed, FamilyKind::Saturated))
}

/// The bisaturated members of [`enumerate_saturated`]; closed under
/// `partner` and in bijection with the bands.
pub fn enumerate_bisaturated(lambda: &LambdaSet, cap: usize) -> Result<SaturatedFamily> {
    let saturated = enumerate_saturated(lambda, cap)?;
    let sets: BTreeSet<IndexSet> = saturated
        .sets
        .into_iter()
        .filter(|s| is_bisaturated(s, lambda))
        .collect();
    Ok(sort_family(sets, FamilyKind::Bisaturated))
}

fn check_cap(lambda: &LambdaSet, cap: usize) -> Result<usize> {
    let k = lambda.len();
    if k > cap {
        return Err(Error::CapExceeded { size: k, cap });
    }
    Ok(k)
}

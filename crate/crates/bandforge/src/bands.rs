//! From index sets to subspaces and back: zero sets, carriers, disjoint
//! complements, the two bandhood tests (raw double-complement vs
//! bisaturation), directedness, and the extension-procedure carriers.

use crate::cone::LambdaSet;
use crate::error::Result;
use crate::ratmath::{
    canonical_basis, dot, lp_feasible, Rat, RatMatrix, RatVector,
};
use crate::satcore::{self, IndexSet};
use num_traits::Zero;

/// A linear subspace in canonical RREF basis form; the empty basis encodes
/// {0}. Canonical form makes subspace equality plain list equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<RatVector>,
    ambient: usize,
}

impl Subspace {
    pub fn from_spanning(vectors: Vec<RatVector>, ambient: usize) -> Subspace {
        Subspace {
            basis: canonical_basis(vectors, ambient),
            ambient,
        }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            basis: Vec::new(),
            ambient,
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            basis: RatMatrix::identity(ambient).rows().to_vec(),
            ambient,
        }
    }

    pub fn basis(&self) -> &[RatVector] {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::from_spanning(all, self.ambient) == *self
    }
}

/// Z(M) = {x : phi(x) = 0 for all phi in M}; Z(empty) is the full space.
pub fn zero_set(m: &IndexSet, lambda: &LambdaSet) -> Subspace {
    let matrix = lambda.matrix_of(&m.indices());
    Subspace {
        basis: matrix.kernel_basis(),
        ambient: lambda.dim(),
    }
}

/// N(B): the indices whose functionals vanish on all of B.
pub fn n_of(b: &Subspace, lambda: &LambdaSet) -> IndexSet {
    let vanishing: Vec<usize> = (0..lambda.len())
        .filter(|&j| {
            b.basis
                .iter()
                .all(|v| dot(lambda.functional(j), v).is_zero())
        })
        .collect();
    IndexSet::from_indices(&vanishing, lambda.len())
}

/// car(B) = Lambda \ N(B).
pub fn carrier(b: &Subspace, lambda: &LambdaSet) -> IndexSet {
    n_of(b, lambda).complement()
}

/// B^d = Z(car(B)); valid for arbitrary subspaces.
pub fn disjoint_complement(b: &Subspace, lambda: &LambdaSet) -> Subspace {
    zero_set(&carrier(b, lambda), lambda)
}

/// The raw definition: B is a band iff B^dd = B. This is the oracle path,
/// independent of the saturation combinatorics.
pub fn is_band(b: &Subspace, lambda: &LambdaSet) -> bool {
    disjoint_complement(&disjoint_complement(b, lambda), lambda) == *b
}

/// The combinatorial route: B = Z(N(B)) and N(B) bisaturated.
pub fn is_band_via_bisaturation(b: &Subspace, lambda: &LambdaSet) -> bool {
    let n = n_of(b, lambda);
    zero_set(&n, lambda) == *b && satcore::is_bisaturated(&n, lambda)
}

/// A fully populated band record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Band {
    pub space: Subspace,
    pub n_set: IndexSet,
    pub carrier: IndexSet,
    pub partner_n_set: IndexSet,
    pub directed: bool,
}

/// One band per bisaturated set, in the family's deterministic order.
pub fn all_bands(lambda: &LambdaSet, cap: usize) -> Result<Vec<Band>> {
    let family = satcore::enumerate_bisaturated(lambda, cap)?;
    Ok(family
        .sets
        .iter()
        .map(|n_set| {
            let space = zero_set(n_set, lambda);
            let directed = is_directed(&space, lambda);
            Band {
                partner_n_set: satcore::saturate(&n_set.complement(), lambda),
                carrier: n_set.complement(),
                n_set: *n_set,
                space,
                directed,
            }
        })
        .collect())
}

/// Directedness via implicit equality detection on B intersect K: the band
/// is directed iff span(B cap K) has the dimension of B. A functional that
/// can never be strictly positive on B cap K cuts the span down; detecting
/// those is one small LP per functional.
pub fn is_directed(b: &Subspace, lambda: &LambdaSet) -> bool {
    let k = b.dim();
    if k == 0 {
        return true;
    }
    // cone in basis coordinates c: G c >= 0, rows g_j = phi_j restricted to B
    let g_rows: Vec<RatVector> = (0..lambda.len())
        .map(|j| {
            b.basis
                .iter()
                .map(|v| dot(lambda.functional(j), v))
                .collect()
        })
        .collect();
    let g = RatMatrix::from_rows(g_rows.clone(), k);
    let eq = RatMatrix::from_rows(vec![], k);
    let mut implicit: Vec<RatVector> = Vec::new();
    for row in &g_rows {
        if row.iter().all(|x| x.is_zero()) {
            continue; // vanishes identically on B, no cut
        }
        let strict = RatMatrix::from_rows(vec![row.clone()], k);
        if lp_feasible(&eq, &[], &strict, &g).is_none() {
            implicit.push(row.clone());
        }
    }
    let span_dim = k - RatMatrix::from_rows(implicit, k).rank();
    span_dim == k
}

/// Carriers of the two extension procedures in the lattice R^|Lambda|:
/// procedure (I) extends through the disjoint complement and carries
/// sat(car B); procedure (II) takes the double complement of the image and
/// carries car B itself.
pub fn extension_carriers(band: &Band, lambda: &LambdaSet) -> (IndexSet, IndexSet) {
    let proc_i = satcore::saturate(&band.carrier, lambda);
    (proc_i, band.carrier)
}

/// x and y are disjoint iff every functional kills at least one of them.
pub fn vectors_disjoint(x: &[Rat], y: &[Rat], lambda: &LambdaSet) -> bool {
    (0..lambda.len()).all(|j| {
        dot(lambda.functional(j), x).is_zero() || dot(lambda.functional(j), y).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::lambda_of;
    use crate::gen;
    use crate::ratmath::rat_int;
    use crate::DEFAULT_CAP;

    fn qp() -> LambdaSet {
        lambda_of(&gen::quad_pyramid()).unwrap()
    }

    fn set(ix: &[usize], u: usize) -> IndexSet {
        IndexSet::from_indices(ix, u)
    }

    fn v(xs: &[i64]) -> RatVector {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn zero_set_examples() {
        let lambda = qp();
        let b = zero_set(&set(&[0, 1, 2, 3], 5), &lambda);
        assert_eq!(b.basis(), &[v(&[1, 1, -1, -1])]);
        assert_eq!(zero_set(&IndexSet::empty(5), &lambda), Subspace::full(4));
        // phi5 = (4,0,0,0): zero set is {x : x1 = 0}, 3-dimensional
        let b5 = zero_set(&set(&[4], 5), &lambda);
        assert_eq!(b5.dim(), 3);
        assert!(b5.basis().iter().all(|w| w[0].is_zero()));
    }

    #[test]
    fn n_of_examples() {
        let lambda = qp();
        assert_eq!(n_of(&Subspace::zero(4), &lambda), IndexSet::full(5));
        assert_eq!(n_of(&Subspace::full(4), &lambda), IndexSet::empty(5));
        let b = Subspace::from_spanning(vec![v(&[1, 1, -1, -1])], 4);
        assert_eq!(n_of(&b, &lambda), set(&[0, 1, 2, 3], 5));
    }

    #[test]
    fn carrier_is_complement_of_n() {
        let lambda = qp();
        let b = Subspace::from_spanning(vec![v(&[1, 1, -1, -1])], 4);
        assert_eq!(carrier(&b, &lambda), set(&[4], 5));
    }

    #[test]
    fn disjoint_complement_examples() {
        let lambda = qp();
        let b = zero_set(&set(&[4], 5), &lambda);
        let bd = disjoint_complement(&b, &lambda);
        assert_eq!(bd.basis(), &[v(&[1, 1, -1, -1])]);
        assert_eq!(
            disjoint_complement(&Subspace::zero(4), &lambda),
            Subspace::full(4)
        );
        // standard cone in R^3: complement of an axis is the opposite plane
        let l3 = lambda_of(&gen::standard_lattice(3)).unwrap();
        let axis = Subspace::from_spanning(vec![v(&[1, 0, 0])], 3);
        let comp = disjoint_complement(&axis, &l3);
        assert_eq!(comp, Subspace::from_spanning(vec![v(&[0, 1, 0]), v(&[0, 0, 1])], 3));
    }

    #[test]
    fn is_band_examples() {
        let lambda = qp();
        assert!(is_band(&zero_set(&set(&[4], 5), &lambda), &lambda));
        // Z({1,2,3}) = Z({1,2,3,4}) is a band even though the input index
        // set is not bisaturated
        let b = zero_set(&set(&[0, 1, 2], 5), &lambda);
        assert_eq!(b, zero_set(&set(&[0, 1, 2, 3], 5), &lambda));
        assert!(is_band(&b, &lambda));
        assert!(is_band(&Subspace::zero(4), &lambda));
        assert!(is_band(&Subspace::full(4), &lambda));
    }

    #[test]
    fn band_test_routes_agree_on_non_band() {
        let lambda = qp();
        let b = Subspace::from_spanning(vec![v(&[1, 0, 0, 0])], 4);
        assert!(!is_band(&b, &lambda));
        assert!(!is_band_via_bisaturation(&b, &lambda));
        assert!(is_band_via_bisaturation(&Subspace::zero(4), &lambda));
        assert!(is_band_via_bisaturation(&Subspace::full(4), &lambda));
    }

    #[test]
    fn all_bands_quad_pyramid() {
        let lambda = qp();
        let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
        assert_eq!(bands.len(), 16);
        for band in &bands {
            assert_eq!(band.carrier, band.n_set.complement());
            assert!(satcore::is_bisaturated(&band.n_set, &lambda));
            // dimension = n - rank of the N-set functionals
            let rank = lambda.matrix_of(&band.n_set.indices()).rank();
            assert_eq!(band.space.dim(), 4 - rank);
        }
    }

    #[test]
    fn all_bands_standard_lattice_all_directed() {
        let lambda = lambda_of(&gen::standard_lattice(3)).unwrap();
        let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
        assert_eq!(bands.len(), 8);
        assert!(bands.iter().all(|b| b.directed));
    }

    #[test]
    fn cube_apex_bands_and_directedness() {
        let lambda = lambda_of(&gen::cube_apex()).unwrap();
        let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
        assert_eq!(bands.len(), 4);
        let nontrivial: Vec<&Band> =
            bands.iter().filter(|b| !b.space.is_zero() && b.space.dim() < 4).collect();
        assert_eq!(nontrivial.len(), 2);
        let mut n_sets: Vec<IndexSet> = nontrivial.iter().map(|b| b.n_set).collect();
        n_sets.sort();
        assert_eq!(
            n_sets,
            vec![set(&[0, 2, 4, 6, 8], 9), set(&[1, 3, 5, 7, 8], 9)]
        );
        assert!(nontrivial.iter().all(|b| !b.directed));
        // the trivial bands are directed
        assert!(bands
            .iter()
            .filter(|b| b.space.is_zero() || b.space.dim() == 4)
            .all(|b| b.directed));
    }

    #[test]
    fn extension_carriers_cube_apex() {
        let lambda = lambda_of(&gen::cube_apex()).unwrap();
        let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
        let b1 = bands
            .iter()
            .find(|b| b.n_set == set(&[0, 2, 4, 6, 8], 9))
            .unwrap();
        let (proc_i, proc_ii) = extension_carriers(b1, &lambda);
        assert_eq!(proc_ii, set(&[1, 3, 5, 7], 9));
        assert_eq!(proc_i, set(&[1, 3, 5, 7, 8], 9));
    }

    #[test]
    fn extension_carriers_trivial_and_saturated() {
        let lambda = qp();
        let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
        let zero_band = bands.iter().find(|b| b.space.is_zero()).unwrap();
        let (pi, pii) = extension_carriers(zero_band, &lambda);
        assert!(pi.is_empty() && pii.is_empty());
        let b5 = bands.iter().find(|b| b.n_set == set(&[4], 5)).unwrap();
        let (pi, pii) = extension_carriers(b5, &lambda);
        assert_eq!(pi, set(&[0, 1, 2, 3], 5));
        assert_eq!(pii, set(&[0, 1, 2, 3], 5));
    }

    #[test]
    fn vectors_disjoint_examples() {
        let l2 = lambda_of(&gen::standard_lattice(2)).unwrap();
        assert!(vectors_disjoint(&v(&[0, 0]), &v(&[3, -7]), &l2));
        assert!(vectors_disjoint(&v(&[1, 0]), &v(&[0, 1]), &l2));
        assert!(!vectors_disjoint(&v(&[1, 0]), &v(&[1, 1]), &l2));
        let lambda = qp();
        let x = v(&[1, 1, -1, -1]);
        assert!(!vectors_disjoint(&x, &x, &lambda));
    }

    #[test]
    fn galois_and_sandwich_properties() {
        let lambda = qp();
        for mask in 0..32u64 {
            let m = IndexSet::from_mask(mask, 5);
            // n_of(zero_set(m)) = saturate(m)
            assert_eq!(
                n_of(&zero_set(&m, &lambda), &lambda),
                satcore::saturate(&m, &lambda)
            );
            // Z(sat(m)) = Z(m)
            assert_eq!(
                zero_set(&satcore::saturate(&m, &lambda), &lambda),
                zero_set(&m, &lambda)
            );
        }
        // sandwich on some subspaces
        for basis in [vec![v(&[1, 0, 0, 0])], vec![v(&[1, 1, -1, -1])], vec![]] {
            let b = Subspace::from_spanning(basis, 4);
            let znb = zero_set(&n_of(&b, &lambda), &lambda);
            let bdd = disjoint_complement(&disjoint_complement(&b, &lambda), &lambda);
            assert!(znb.contains_subspace(&b));
            assert!(bdd.contains_subspace(&znb));
        }
    }
}

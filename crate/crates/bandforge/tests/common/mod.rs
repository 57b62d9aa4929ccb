//! Shared test helpers: a seeded generator for random valid cone
//! specifications used by the property-style suites.

use bandforge::cone::{self, ConeSpec};
use bandforge::ratmath::{rat, Rat, RatMatrix, RatVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random cone with `dim = n`, `m` functionals of small rational entries,
/// resampled until the functional matrix has rank n and some unit is
/// strictly positive under every functional (found by LP). The result
/// always passes `cone::validate`.
pub fn random_valid_cone(rng: &mut ChaCha8Rng, n: usize, m: usize) -> ConeSpec {
    assert!(m >= n);
    loop {
        let functionals: Vec<RatVector> = (0..m)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(-6..=6), 2)).collect())
            .collect();
        if RatMatrix::from_rows(functionals.clone(), n).rank() != n {
            continue;
        }
        let eq = RatMatrix::from_rows(vec![], n);
        let strict = RatMatrix::from_rows(functionals.clone(), n);
        let nonneg = RatMatrix::from_rows(vec![], n);
        let Some(unit) = bandforge::ratmath::lp_feasible(&eq, &[], &strict, &nonneg) else {
            continue;
        };
        let spec = ConeSpec {
            dim: n,
            unit,
            functionals,
            labels: None,
        };
        let normalized = cone::normalize(&spec).expect("unit chosen strictly positive");
        if cone::validate(&normalized.spec).is_valid() {
            return spec;
        }
    }
}

/// Random vector with entries in [-4, 4] halves.
pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| rat(rng.gen_range(-8..=8), 2)).collect()
}

//! Built-in instance constructors: the standard lattice cone, the
//! quad-pyramid cone in R^4, the cube-plus-apex cone, and seeded
//! general-position instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::ConeSpec;
use crate::error::{Error, Result};
use crate::ratmath::{affine_dim, lp_feasible, rat, rat_int, Rat, RatMatrix, RatVector};
use num_traits::One;

/// Which instance to build; `generate` dispatches on this.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorRecipe {
    StandardLattice { n: usize },
    QuadPyramid,
    CubeApex,
    GeneralPosition { n: usize, seed: u64 },
}

pub fn generate(recipe: GeneratorRecipe) -> Result<ConeSpec> {
    match recipe {
        GeneratorRecipe::StandardLattice { n } => Ok(standard_lattice(n)),
        GeneratorRecipe::QuadPyramid => Ok(quad_pyramid()),
        GeneratorRecipe::CubeApex => Ok(cube_apex()),
        GeneratorRecipe::GeneralPosition { n, seed } => general_position(n, seed),
    }
}

/// R^n with the standard cone: identity functionals, all-ones unit.
/// An n-dimensional Archimedean vector lattice; it has 2^n bands.
pub fn standard_lattice(n: usize) -> ConeSpec {
    assert!(n >= 1);
    let mut functionals = Vec::with_capacity(n);
    for i in 0..n {
        let mut f = vec![Rat::from_integer(0.into()); n];
        f[i] = Rat::one();
        functionals.push(f);
    }
    ConeSpec {
        dim: n,
        unit: vec![Rat::one(); n],
        functionals,
        labels: Some((1..=n).map(|i| format!("e{i}")).collect()),
    }
}

/// Five functionals in R^4 with unit (1/4, 1/4, 1/4, 1/4). In the affine
/// base, phi1..phi4 form a parallelogram (phi1 + phi2 = phi3 + phi4) and
/// phi5 sits off their plane, a pyramid over a quadrilateral. The instance
/// has 16 bands, more than the 4-dimensional lattice case.
pub fn quad_pyramid() -> ConeSpec {
    let f = |xs: [i64; 4]| xs.iter().map(|&x| rat_int(x)).collect::<RatVector>();
    ConeSpec {
        dim: 4,
        unit: vec![rat(1, 4); 4],
        functionals: vec![
            f([0, 2, 1, 1]),
            f([2, 0, 1, 1]),
            f([1, 1, 0, 2]),
            f([1, 1, 2, 0]),
            f([4, 0, 0, 0]),
        ],
        labels: Some((1..=5).map(|i| format!("phi{i}")).collect()),
    }
}

/// Cube with an apex above it: nine vertices v_i in R^3, functionals
/// (v_i, 1) in R^4, unit (0,0,0,1). The apex (1/2, 1/2, 2) sits on both
/// planes x = y and x + y = 1, which makes
/// {v1,v3,v5,v7,v9} and {v2,v4,v6,v8,v9} the only non-trivial bisaturated
/// sets; the corresponding bands are non-directed.
pub fn cube_apex() -> ConeSpec {
    let vertices: Vec<RatVector> = vec![
        vec![rat_int(0), rat_int(0), rat_int(0)], // v1
        vec![rat_int(1), rat_int(0), rat_int(0)], // v2
        vec![rat_int(1), rat_int(1), rat_int(0)], // v3
        vec![rat_int(0), rat_int(1), rat_int(0)], // v4
        vec![rat_int(0), rat_int(0), rat_int(1)], // v5
        vec![rat_int(1), rat_int(0), rat_int(1)], // v6
        vec![rat_int(1), rat_int(1), rat_int(1)], // v7
        vec![rat_int(0), rat_int(1), rat_int(1)], // v8
        vec![rat(1, 2), rat(1, 2), rat_int(2)],   // v9
    ];
    lifted_spec(vertices, (1..=9).map(|i| format!("v{i}")).collect())
}

fn lifted_spec(vertices: Vec<RatVector>, labels: Vec<String>) -> ConeSpec {
    let n = vertices[0].len();
    let functionals: Vec<RatVector> = vertices
        .into_iter()
        .map(|mut v| {
            v.push(Rat::one());
            v
        })
        .collect();
    let mut unit = vec![Rat::from_integer(0.into()); n];
    unit.push(Rat::one());
    ConeSpec {
        dim: n + 1,
        unit,
        functionals,
        labels: Some(labels),
    }
}

/// Retry budget for rejection sampling in [`general_position`].
pub const GENERATION_RETRIES: usize = 1000;

/// 2n rational points in R^n, resampled until they are in exact general
/// linear position with the origin interior to their convex hull, then
/// lifted to functionals (v_i, 1) in R^{n+1} with unit (0,...,0,1).
///
/// Coordinates are numerators uniform in [-10^4, 10^4] over denominator
/// 10^4. The PRNG is pinned to ChaCha8 seeded with `seed`, so the output
/// is bit-identical for a fixed (n, seed).
pub fn general_position(n: usize, seed: u64) -> Result<ConeSpec> {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERATION_RETRIES {
        let points: Vec<RatVector> = (0..2 * n)
            .map(|_| {
                (0..n)
                    .map(|_| rat(rng.gen_range(-10_000..=10_000), 10_000))
                    .collect()
            })
            .collect();
        if in_general_position(&points, n) && origin_interior(&points, n) {
            let labels = (1..=2 * n).map(|i| format!("v{i}")).collect();
            let spec = lifted_spec(points, labels);
            // general position alone does not make every point a hull
            // vertex; reject draws where one lands inside the hull
            if crate::cone::extreme_points(&spec).len() == 2 * n {
                return Ok(spec);
            }
        }
    }
    Err(Error::GenerationFailed {
        attempts: GENERATION_RETRIES,
    })
}

/// Every subset of at most n+1 points must be affinely independent: no 3
/// on a line, no 4 in a plane, and so on.
fn in_general_position(points: &[RatVector], n: usize) -> bool {
    let k = points.len();
    let mut subset: Vec<usize> = Vec::new();
    fn rec(
        points: &[RatVector],
        max_size: usize,
        start: usize,
        subset: &mut Vec<usize>,
    ) -> bool {
        if subset.len() >= 3 {
            let chosen: Vec<RatVector> =
                subset.iter().map(|&i| points[i].clone()).collect();
            if affine_dim(&chosen) != Some(subset.len() - 1) {
                return false;
            }
        }
        if subset.len() == max_size {
            return true;
        }
        for i in start..points.len() {
            subset.push(i);
            if !rec(points, max_size, i + 1, subset) {
                return false;
            }
            subset.pop();
        }
        true
    }
    rec(points, (n + 1).min(k), 0, &mut subset)
}

/// Exact LP test: 0 = sum a_i v_i with sum a_i = 1 and every a_i > 0.
/// Together with full-dimensionality (implied by general position) this is
/// interiority of the origin.
fn origin_interior(points: &[RatVector], n: usize) -> bool {
    let k = points.len();
    let mut rows = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for d in 0..n {
        rows.push(points.iter().map(|p| p[d].clone()).collect::<RatVector>());
        rhs.push(Rat::from_integer(0.into()));
    }
    rows.push(vec![Rat::one(); k]);
    rhs.push(Rat::one());
    let eq = RatMatrix::from_rows(rows, k);
    let strict = RatMatrix::identity(k);
    let nonneg = RatMatrix::from_rows(vec![], k);
    lp_feasible(&eq, &rhs, &strict, &nonneg).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone;
    use crate::ratmath::dot;
    use num_traits::{One, Signed};

    #[test]
    fn standard_lattice_validates() {
        for n in 1..=4 {
            let spec = standard_lattice(n);
            let lambda = cone::lambda_of(&spec).unwrap();
            assert_eq!(lambda.len(), n);
        }
    }

    #[test]
    fn quad_pyramid_unit_normalizes_to_one() {
        let spec = quad_pyramid();
        for phi in &spec.functionals {
            assert!(dot(phi, &spec.unit).is_one());
        }
    }

    #[test]
    fn cube_apex_all_nine_are_extreme() {
        let lambda = cone::lambda_of(&cube_apex()).unwrap();
        assert_eq!(lambda.len(), 9);
        assert_eq!(lambda.label(8), "v9");
    }

    #[test]
    fn general_position_reproducible() {
        let a = general_position(2, 7).unwrap();
        let b = general_position(2, 7).unwrap();
        assert_eq!(a, b);
        let c = general_position(2, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn general_position_lambda_is_all_points() {
        for n in 1..=3 {
            for seed in [0, 1] {
                let spec = general_position(n, seed).unwrap();
                let lambda = cone::lambda_of(&spec).unwrap();
                assert_eq!(lambda.len(), 2 * n, "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn general_position_unit_positive() {
        let spec = general_position(3, 42).unwrap();
        for phi in &spec.functionals {
            assert!(dot(phi, &spec.unit).is_positive());
        }
    }
}

//! Polyhedral cone specifications: the functional list defining
//! K = {x : phi_i(x) >= 0} together with an order unit u, normalization to
//! phi_i(u) = 1, validation, and extraction of Lambda, the extreme points
//! of the dual base Sigma.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratmath::{
    dot, format_rat, lp_feasible, parse_rat, Rat, RatMatrix, RatVector,
};
use num_traits::{One, Signed};

/// A candidate cone description: possibly unnormalized, possibly redundant
/// functionals, plus the chosen order unit. The unit is part of the input;
/// Sigma and Lambda depend on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSpec {
    pub dim: usize,
    pub unit: RatVector,
    pub functionals: Vec<RatVector>,
    pub labels: Option<Vec<String>>,
}

/// The extreme points of Sigma = conv of the normalized functionals,
/// canonically indexed. This is the finite index set every combinatorial
/// operation works over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSet {
    functionals: Vec<RatVector>,
    labels: Vec<String>,
    unit: RatVector,
}

impl LambdaSet {
    /// Assembles a LambdaSet directly. [`extreme_points`] is the normal
    /// way to obtain one; this constructor only checks shape and
    /// distinctness, not extremality.
    pub fn from_parts(
        functionals: Vec<RatVector>,
        labels: Vec<String>,
        unit: RatVector,
    ) -> LambdaSet {
        assert_eq!(functionals.len(), labels.len());
        assert!(functionals.iter().all(|f| f.len() == unit.len()));
        for (i, f) in functionals.iter().enumerate() {
            assert!(
                !functionals[..i].contains(f),
                "duplicate functional at index {i}"
            );
        }
        LambdaSet {
            functionals,
            labels,
            unit,
        }
    }

    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn functional(&self, i: usize) -> &RatVector {
        &self.functionals[i]
    }

    pub fn functionals(&self) -> &[RatVector] {
        &self.functionals
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> &RatVector {
        &self.unit
    }

    /// Matrix whose rows are the selected functionals, in index order.
    pub fn matrix_of(&self, indices: &[usize]) -> RatMatrix {
        RatMatrix::from_rows(
            indices.iter().map(|&i| self.functionals[i].clone()).collect(),
            self.dim(),
        )
    }

    pub fn full_matrix(&self) -> RatMatrix {
        self.matrix_of(&(0..self.len()).collect::<Vec<_>>())
    }
}

/// Result of [`normalize`]: the rescaled, deduplicated spec plus, for each
/// input functional, the index of its representative in the output.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub spec: ConeSpec,
    pub index_map: Vec<usize>,
}

/// Rescales every functional to phi(u) = 1 and removes exact duplicates,
/// keeping first occurrences. Errors if some phi_i(u) <= 0, which signals
/// that u is not interior to K as specified.
pub fn normalize(spec: &ConeSpec) -> Result<Normalized> {
    let mut out: Vec<RatVector> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let in_labels = effective_labels(spec);
    let mut index_map = Vec::with_capacity(spec.functionals.len());
    for (i, phi) in spec.functionals.iter().enumerate() {
        let val = dot(phi, &spec.unit);
        if !val.is_positive() {
            return Err(Error::NonpositiveOnUnit { index: i });
        }
        let scaled: RatVector = phi.iter().map(|c| c / &val).collect();
        match out.iter().position(|f| *f == scaled) {
            Some(j) => index_map.push(j),
            None => {
                index_map.push(out.len());
                out.push(scaled);
                labels.push(in_labels[i].clone());
            }
        }
    }
    Ok(Normalized {
        spec: ConeSpec {
            dim: spec.dim,
            unit: spec.unit.clone(),
            functionals: out,
            labels: Some(labels),
        },
        index_map,
    })
}

fn effective_labels(spec: &ConeSpec) -> Vec<String> {
    let mut labels = spec.labels.clone().unwrap_or_default();
    for i in labels.len()..spec.functionals.len() {
        labels.push(format!("phi{}", i + 1));
    }
    labels
}

/// What [`validate`] found. `line_certificate` is a nonzero vector on which
/// every functional vanishes (so K contains a line) when the rank test
/// fails.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub dim: usize,
    pub functional_count: usize,
    pub rank: usize,
    pub nonpositive_on_unit: Vec<usize>,
    pub line_certificate: Option<RatVector>,
}

impl ValidationReport {
    pub fn rank_ok(&self) -> bool {
        self.rank == self.dim
    }

    pub fn unit_ok(&self) -> bool {
        self.nonpositive_on_unit.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.rank_ok() && self.unit_ok()
    }
}

/// Checks that the functionals span the dual space (K pointed) and that the
/// unit is strictly positive under every functional (u interior, hence an
/// order unit). Reports rather than aborts.
pub fn validate(spec: &ConeSpec) -> ValidationReport {
    let m = RatMatrix::from_rows(spec.functionals.clone(), spec.dim);
    let rank = m.rank();
    let nonpositive: Vec<usize> = spec
        .functionals
        .iter()
        .enumerate()
        .filter(|(_, phi)| !dot(phi, &spec.unit).is_positive())
        .map(|(i, _)| i)
        .collect();
    let line_certificate = if rank < spec.dim {
        m.kernel_basis().into_iter().next()
    } else {
        None
    };
    ValidationReport {
        dim: spec.dim,
        functional_count: spec.functionals.len(),
        rank,
        nonpositive_on_unit: nonpositive,
        line_certificate,
    }
}

/// Keeps exactly those functionals that are not convex combinations of the
/// others, i.e. the extreme points of Sigma. Input must be normalized and
/// valid; on an irredundant facet description this is the identity.
pub fn extreme_points(spec: &ConeSpec) -> LambdaSet {
    let n = spec.dim;
    let labels = effective_labels(spec);
    let mut keep = Vec::new();
    for i in 0..spec.functionals.len() {
        let others: Vec<RatVector> = spec
            .functionals
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, f)| f.clone())
            .collect();
        if others.is_empty() || !in_convex_hull(&others, &spec.functionals[i], n) {
            keep.push(i);
        }
    }
    LambdaSet {
        functionals: keep.iter().map(|&i| spec.functionals[i].clone()).collect(),
        labels: keep.iter().map(|&i| labels[i].clone()).collect(),
        unit: spec.unit.clone(),
    }
}

/// Exact convex-combination test: target = sum a_j points_j, sum a_j = 1,
/// a >= 0, decided by LP feasibility.
fn in_convex_hull(points: &[RatVector], target: &RatVector, dim: usize) -> bool {
    let k = points.len();
    let mut rows = Vec::with_capacity(dim + 1);
    let mut rhs = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        rows.push(points.iter().map(|p| p[d].clone()).collect::<RatVector>());
        rhs.push(target[d].clone());
    }
    rows.push(vec![Rat::one(); k]);
    rhs.push(Rat::one());
    let eq = RatMatrix::from_rows(rows, k);
    let strict = RatMatrix::from_rows(vec![], k);
    let nonneg = RatMatrix::identity(k);
    lp_feasible(&eq, &rhs, &strict, &nonneg).is_some()
}

/// Normalize, validate and extract Lambda in one go; the usual pipeline
/// from a parsed cone file.
pub fn lambda_of(spec: &ConeSpec) -> Result<LambdaSet> {
    let normalized = normalize(spec)?;
    let report = validate(&normalized.spec);
    if !report.is_valid() {
        return Err(Error::ValidationFailed(format!(
            "rank {} of {} functionals vs dim {}",
            report.rank, report.functional_count, report.dim
        )));
    }
    Ok(extreme_points(&normalized.spec))
}

// --- cone file format ---------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ConeFile {
    dim: usize,
    unit: Vec<String>,
    functionals: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl ConeSpec {
    /// Parses the JSON cone file format; every number is a rational string
    /// "p/q" or an integer string "p".
    pub fn from_json(s: &str) -> Result<ConeSpec> {
        let file: ConeFile =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let unit = parse_vec(&file.unit)?;
        if unit.len() != file.dim {
            return Err(Error::Parse(format!(
                "unit has {} entries, expected dim = {}",
                unit.len(),
                file.dim
            )));
        }
        let mut functionals = Vec::with_capacity(file.functionals.len());
        for (i, f) in file.functionals.iter().enumerate() {
            let v = parse_vec(f)?;
            if v.len() != file.dim {
                return Err(Error::Parse(format!(
                    "functional {i} has {} entries, expected dim = {}",
                    v.len(),
                    file.dim
                )));
            }
            functionals.push(v);
        }
        if let Some(labels) = &file.labels {
            if labels.len() != functionals.len() {
                return Err(Error::Parse(format!(
                    "{} labels for {} functionals",
                    labels.len(),
                    functionals.len()
                )));
            }
        }
        Ok(ConeSpec {
            dim: file.dim,
            unit,
            functionals,
            labels: file.labels,
        })
    }

    pub fn to_json(&self) -> String {
        let file = ConeFile {
            dim: self.dim,
            unit: self.unit.iter().map(format_rat).collect(),
            functionals: self
                .functionals
                .iter()
                .map(|f| f.iter().map(format_rat).collect())
                .collect(),
            labels: self.labels.clone(),
        };
        serde_json::to_string_pretty(&file).expect("cone file serialization")
    }
}

fn parse_vec(entries: &[String]) -> Result<RatVector> {
    entries.iter().map(|s| parse_rat(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::gen;
    use crate::ratmath::{rat, rat_int};

    fn v(xs: &[i64]) -> RatVector {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn normalize_quad_pyramid_is_identity() {
        let spec = gen::quad_pyramid();
        let n = normalize(&spec).unwrap();
        assert_eq!(n.spec.functionals, spec.functionals);
        assert_eq!(n.index_map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn normalize_rescales() {
        let spec = ConeSpec {
            dim: 4,
            unit: vec![rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)],
            functionals: vec![v(&[8, 0, 0, 0])],
            labels: None,
        };
        let n = normalize(&spec).unwrap();
        assert_eq!(n.spec.functionals[0], v(&[4, 0, 0, 0]));
    }

    #[test]
    fn normalize_collapses_projective_duplicates() {
        let spec = ConeSpec {
            dim: 2,
            unit: vec![rat_int(1), rat_int(1)],
            functionals: vec![v(&[1, 0]), v(&[2, 0]), v(&[0, 1])],
            labels: None,
        };
        let n = normalize(&spec).unwrap();
        assert_eq!(n.spec.functionals.len(), 2);
        assert_eq!(n.index_map, vec![0, 0, 1]);
        assert_eq!(n.spec.labels.as_ref().unwrap(), &["phi1", "phi3"]);
    }

    #[test]
    fn normalize_rejects_nonpositive_on_unit() {
        let spec = ConeSpec {
            dim: 2,
            unit: vec![rat_int(1), rat_int(1)],
            functionals: vec![v(&[1, 0]), v(&[-1, 0])],
            labels: None,
        };
        match normalize(&spec) {
            Err(Error::NonpositiveOnUnit { index }) => assert_eq!(index, 1),
            other => panic!("expected NonpositiveOnUnit, got {other:?}"),
        }
    }

    #[test]
    fn validate_quad_pyramid() {
        let spec = normalize(&gen::quad_pyramid()).unwrap().spec;
        let report = validate(&spec);
        assert!(report.is_valid());
        assert_eq!(report.rank, 4);
    }

    #[test]
    fn validate_flags_rank_deficiency() {
        let spec = ConeSpec {
            dim: 2,
            unit: vec![rat_int(1), rat_int(0)],
            functionals: vec![v(&[1, 0])],
            labels: None,
        };
        let report = validate(&spec);
        assert!(!report.is_valid());
        assert_eq!(report.rank, 1);
        // the certificate spans the line contained in K
        let cert = report.line_certificate.unwrap();
        assert!(dot(&cert, &v(&[1, 0])).is_zero());
    }

    #[test]
    fn validate_standard_cone() {
        let spec = gen::standard_lattice(5);
        let report = validate(&normalize(&spec).unwrap().spec);
        assert!(report.is_valid());
    }

    #[test]
    fn extreme_points_quad_pyramid_keeps_all_five() {
        let lambda = lambda_of(&gen::quad_pyramid()).unwrap();
        assert_eq!(lambda.len(), 5);
        assert_eq!(lambda.labels(), &["phi1", "phi2", "phi3", "phi4", "phi5"]);
    }

    #[test]
    fn extreme_points_drops_midpoint() {
        let mut spec = gen::quad_pyramid();
        let mid: RatVector = spec.functionals[0]
            .iter()
            .zip(&spec.functionals[1])
            .map(|(a, b)| (a + b) / rat_int(2))
            .collect();
        spec.functionals.push(mid);
        let lambda = lambda_of(&spec).unwrap();
        assert_eq!(lambda.len(), 5);
        assert_eq!(lambda.labels(), &["phi1", "phi2", "phi3", "phi4", "phi5"]);
    }

    #[test]
    fn extreme_points_standard_cone_all_survive() {
        let lambda = lambda_of(&gen::standard_lattice(4)).unwrap();
        assert_eq!(lambda.len(), 4);
    }

    #[test]
    fn extreme_points_idempotent() {
        let lambda = lambda_of(&gen::quad_pyramid()).unwrap();
        let spec = ConeSpec {
            dim: lambda.dim(),
            unit: lambda.unit().clone(),
            functionals: lambda.functionals().to_vec(),
            labels: Some(lambda.labels().to_vec()),
        };
        let again = extreme_points(&spec);
        assert_eq!(again, lambda);
    }

    #[test]
    fn cone_file_round_trip() {
        let spec = gen::quad_pyramid();
        let json = spec.to_json();
        let back = ConeSpec::from_json(&json).unwrap();
        assert_eq!(back, spec);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn cone_file_rejects_malformed() {
        assert!(ConeSpec::from_json("{").is_err());
        assert!(ConeSpec::from_json(r#"{"dim":2,"unit":["1"],"functionals":[]}"#).is_err());
        assert!(ConeSpec::from_json(
            r#"{"dim":1,"unit":["1"],"functionals":[["1/0"]]}"#
        )
        .is_err());
    }
}

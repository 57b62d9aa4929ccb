//! Exact rational linear algebra: rank, kernels, affine-hull membership and
//! LP feasibility over `BigRational`.
//!
//! Everything here is exact; no floating point anywhere. Rank and membership
//! decisions downstream (saturation, bisaturation, band equality) depend on
//! that.

mod simplex;

pub use simplex::{lp_feasible, lp_feasible_certified, FarkasCertificate, LpOutcome};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps the canonical form we need:
/// positive denominator, gcd(num, den) = 1 after every operation.
pub type Rat = BigRational;

/// A dense rational vector.
pub type RatVector = Vec<Rat>;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p/q" or "p" with arbitrary-precision integers.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| mk_err())?;
    let den: BigInt = den.trim().parse().map_err(|_| mk_err())?;
    if den.is_zero() {
        return Err(mk_err());
    }
    Ok(Rat::new(num, den))
}

/// Formats as "p" for integers, "p/q" otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Dense rational matrix with semantically meaningful row order
/// (rows are indexed functionals).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<RatVector>,
    cols: usize,
}

impl RatMatrix {
    /// `cols` must be given explicitly so that 0-row matrices keep their
    /// ambient dimension.
    pub fn from_rows(rows: Vec<RatVector>, cols: usize) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "matrix rows must all have length {cols}"
        );
        RatMatrix { rows, cols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        RatMatrix {
            rows: vec![vec![Rat::zero(); ncols]; nrows],
            cols: ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = Rat::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn mul_vec(&self, x: &[Rat]) -> RatVector {
        self.rows.iter().map(|r| dot(r, x)).collect()
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut a = self.rows.clone();
        let nrows = a.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..nrows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    let scaled: Vec<Rat> = a[r].iter().map(|x| &f * x).collect();
                    for (x, sub) in a[i].iter_mut().zip(scaled) {
                        *x -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (RatMatrix::from_rows(a, self.cols), pivots)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of {x : self * x = 0}. Basis vectors come from the
    /// RREF parametrization and are re-canonicalized so the list is the
    /// unique RREF basis of the kernel subspace.
    pub fn kernel_basis(&self) -> Vec<RatVector> {
        let (rr, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rr.rows[i][f].clone();
            }
            basis.push(v);
        }
        canonical_basis(basis, self.cols)
    }
}

/// Canonical RREF basis of the span of `vectors`: the unique reduced
/// echelon basis, leading entry 1 in each vector, sorted by pivot column.
pub fn canonical_basis(vectors: Vec<RatVector>, ambient: usize) -> Vec<RatVector> {
    let m = RatMatrix::from_rows(vectors, ambient);
    let (rr, pivots) = m.rref();
    rr.rows.into_iter().take(pivots.len()).collect()
}

/// True iff `q` lies in the affine hull of `points`: q = sum a_i p_i with
/// sum a_i = 1 solvable, decided by exact rank comparison of the
/// homogenized system. `points` must be nonempty (the affine hull of the
/// empty set is empty; callers special-case it).
pub fn affine_hull_contains(points: &[RatVector], q: &[Rat]) -> bool {
    assert!(
        !points.is_empty(),
        "affine_hull_contains: empty point set (aff(empty) is empty)"
    );
    let dim = q.len();
    assert!(points.iter().all(|p| p.len() == dim));
    // Rows: one per coordinate plus the ones row; columns are the points.
    let mut base = Vec::with_capacity(dim + 1);
    let mut aug = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        let row: RatVector = points.iter().map(|p| p[d].clone()).collect();
        let mut arow = row.clone();
        arow.push(q[d].clone());
        base.push(row);
        aug.push(arow);
    }
    base.push(vec![Rat::one(); points.len()]);
    aug.push(vec![Rat::one(); points.len() + 1]);
    let base = RatMatrix::from_rows(base, points.len());
    let aug = RatMatrix::from_rows(aug, points.len() + 1);
    base.rank() == aug.rank()
}

/// The exact affine rank of a point set minus one, i.e. dim aff(points).
/// Empty input yields `None`.
pub fn affine_dim(points: &[RatVector]) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<RatVector> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(RatMatrix::from_rows(diffs, first.len()).rank())
}

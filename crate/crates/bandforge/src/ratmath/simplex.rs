//! Exact LP feasibility via a two-phase tableau simplex with Bland's rule.
//!
//! The only question we ever ask is: does some x satisfy
//!   eq * x = eq_rhs,  strict * x > 0 (componentwise),  nonneg * x >= 0?
//! Strict inequalities are homogenized with an auxiliary t: require
//! row * x >= t, clamp t <= 1, maximize t; the system is feasible iff the
//! optimum is positive. Infeasible answers come with a Motzkin/Farkas
//! certificate read off the final dual, rechecked by substitution in tests.
//!
//! Instances are tiny (tens of rows), so Bland's rule is chosen purely for
//! guaranteed termination.

use num_traits::{One, Signed, Zero};

use super::{dot, Rat, RatMatrix, RatVector};

/// Dual multipliers certifying infeasibility of
/// {eq x = b, strict x > 0, nonneg x >= 0}.
///
/// Validity (checked by [`FarkasCertificate::verify`]):
///   eq_mult' * eq + strict_mult' * strict + nonneg_mult' * nonneg = 0,
///   strict_mult >= 0, nonneg_mult >= 0, and either eq_mult' * b > 0
///   (the weak relaxation is already infeasible) or eq_mult' * b >= 0 with
///   some strict multiplier positive (only the strict rows fail).
#[derive(Clone, Debug)]
pub struct FarkasCertificate {
    pub eq_mult: RatVector,
    pub strict_mult: RatVector,
    pub nonneg_mult: RatVector,
}

impl FarkasCertificate {
    pub fn verify(
        &self,
        eq: &RatMatrix,
        eq_rhs: &[Rat],
        strict: &RatMatrix,
        nonneg: &RatMatrix,
    ) -> bool {
        let n = eq.ncols();
        if self.eq_mult.len() != eq.nrows()
            || self.strict_mult.len() != strict.nrows()
            || self.nonneg_mult.len() != nonneg.nrows()
        {
            return false;
        }
        if self.strict_mult.iter().any(|m| m.is_negative())
            || self.nonneg_mult.iter().any(|m| m.is_negative())
        {
            return false;
        }
        // combined multiplier row must vanish on every variable
        for j in 0..n {
            let mut s = Rat::zero();
            for (i, m) in self.eq_mult.iter().enumerate() {
                s += m * &eq.row(i)[j];
            }
            for (i, m) in self.strict_mult.iter().enumerate() {
                s += m * &strict.row(i)[j];
            }
            for (i, m) in self.nonneg_mult.iter().enumerate() {
                s += m * &nonneg.row(i)[j];
            }
            if !s.is_zero() {
                return false;
            }
        }
        let rhs = dot(&self.eq_mult, eq_rhs);
        let strict_total: Rat = self.strict_mult.iter().cloned().sum();
        rhs.is_positive() || (!rhs.is_negative() && strict_total.is_positive())
    }
}

#[derive(Clone, Debug)]
pub enum LpOutcome {
    Feasible(RatVector),
    Infeasible(FarkasCertificate),
}

/// Feasibility witness for the mixed system, or `None`.
pub fn lp_feasible(
    eq: &RatMatrix,
    eq_rhs: &[Rat],
    strict: &RatMatrix,
    nonneg: &RatMatrix,
) -> Option<RatVector> {
    match lp_feasible_certified(eq, eq_rhs, strict, nonneg) {
        LpOutcome::Feasible(x) => Some(x),
        LpOutcome::Infeasible(_) => None,
    }
}

/// As [`lp_feasible`], but an infeasible answer carries its Farkas
/// certificate.
pub fn lp_feasible_certified(
    eq: &RatMatrix,
    eq_rhs: &[Rat],
    strict: &RatMatrix,
    nonneg: &RatMatrix,
) -> LpOutcome {
    let n = eq.ncols();
    assert_eq!(eq.nrows(), eq_rhs.len());
    assert_eq!(strict.ncols(), n);
    assert_eq!(nonneg.ncols(), n);

    let p = eq.nrows();
    let q = strict.nrows();
    let r = nonneg.nrows();
    let m = p + q + r + 1;

    // Structural columns: x+ (n), x- (n), t, strict surplus (q),
    // nonneg surplus (r), bound slack (1).
    let t_col = 2 * n;
    let ns = 2 * n + 1 + q + r + 1;

    let mut rows: Vec<RatVector> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    let mut push_row = |coefs: &[Rat], extra: Vec<(usize, Rat)>, b: Rat| {
        let mut row = vec![Rat::zero(); ns];
        for (j, c) in coefs.iter().enumerate() {
            row[j] = c.clone();
            row[n + j] = -c.clone();
        }
        for (j, c) in extra {
            row[j] = c;
        }
        rows.push(row);
        rhs.push(b);
    };
    for (i, b) in eq_rhs.iter().enumerate().take(p) {
        push_row(eq.row(i), vec![], b.clone());
    }
    for i in 0..q {
        // strict_i * x - t - surplus_i = 0
        push_row(
            strict.row(i),
            vec![(t_col, -Rat::one()), (t_col + 1 + i, -Rat::one())],
            Rat::zero(),
        );
    }
    for i in 0..r {
        push_row(
            nonneg.row(i),
            vec![(t_col + 1 + q + i, -Rat::one())],
            Rat::zero(),
        );
    }
    // t + slack = 1
    {
        let mut row = vec![Rat::zero(); ns];
        row[t_col] = Rat::one();
        row[ns - 1] = Rat::one();
        rows.push(row);
        rhs.push(Rat::one());
    }

    let mut tab = Tableau::new(rows, rhs);
    // phase 1: minimize the artificials
    let mut cost1 = vec![Rat::zero(); tab.total_cols()];
    for c in cost1.iter_mut().skip(ns) {
        *c = Rat::one();
    }
    tab.run(&cost1, ns);
    if tab.objective(&cost1).is_positive() {
        let duals = tab.duals(&cost1);
        return LpOutcome::Infeasible(split_duals(&duals, p, q, r));
    }
    tab.drop_artificials(ns);

    // phase 2: maximize t, i.e. minimize -t
    let mut cost2 = vec![Rat::zero(); tab.total_cols()];
    cost2[t_col] = -Rat::one();
    tab.run(&cost2, ns);
    let sol = tab.solution(ns);
    if sol[t_col].is_positive() {
        let x: RatVector = (0..n).map(|j| &sol[j] - &sol[n + j]).collect();
        LpOutcome::Feasible(x)
    } else {
        let duals = tab.duals(&cost2);
        LpOutcome::Infeasible(split_duals(&duals, p, q, r))
    }
}

fn split_duals(duals: &[Rat], p: usize, q: usize, r: usize) -> FarkasCertificate {
    FarkasCertificate {
        eq_mult: duals[..p].to_vec(),
        strict_mult: duals[p..p + q].to_vec(),
        nonneg_mult: duals[p + q..p + q + r].to_vec(),
    }
}

/// Dense tableau over [structural | artificial] columns. The artificial
/// block starts as the identity, so its current entries are B^{-1} and the
/// duals can be read from it at any time.
struct Tableau {
    a: Vec<RatVector>,
    b: Vec<Rat>,
    basis: Vec<usize>,
    /// sign applied to each original row to make the rhs nonnegative
    row_signs: Vec<Rat>,
    orig_rows: usize,
    barred: Vec<bool>,
}

impl Tableau {
    fn new(mut rows: Vec<RatVector>, mut rhs: Vec<Rat>) -> Self {
        let m = rows.len();
        let ns = rows.first().map_or(0, |r| r.len());
        let mut row_signs = vec![Rat::one(); m];
        for i in 0..m {
            if rhs[i].is_negative() {
                for x in rows[i].iter_mut() {
                    *x = -x.clone();
                }
                rhs[i] = -rhs[i].clone();
                row_signs[i] = -Rat::one();
            }
        }
        for (i, row) in rows.iter_mut().enumerate() {
            for k in 0..m {
                row.push(if k == i { Rat::one() } else { Rat::zero() });
            }
        }
        Tableau {
            a: rows,
            b: rhs,
            basis: (ns..ns + m).collect(),
            row_signs,
            orig_rows: m,
            barred: vec![false; ns + m],
        }
    }

    fn total_cols(&self) -> usize {
        self.a.first().map_or(0, |r| r.len())
    }

    fn reduced_cost(&self, cost: &[Rat], j: usize) -> Rat {
        let mut z = Rat::zero();
        for (i, row) in self.a.iter().enumerate() {
            if !cost[self.basis[i]].is_zero() {
                z += &cost[self.basis[i]] * &row[j];
            }
        }
        &cost[j] - &z
    }

    /// Bland's rule: entering = smallest eligible column with negative
    /// reduced cost; leaving = min ratio, ties broken by smallest basic
    /// column index.
    fn run(&mut self, cost: &[Rat], structural: usize) {
        loop {
            let mut entering = None;
            for j in 0..self.total_cols() {
                if self.barred[j] || self.basis.contains(&j) {
                    continue;
                }
                // artificials never re-enter once phase 1 is done
                if j >= structural && cost[j].is_zero() {
                    continue;
                }
                if self.reduced_cost(cost, j).is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else { return };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.a.len() {
                if self.a[i][j].is_positive() {
                    let ratio = &self.b[i] / &self.a[i][j];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((i, _)) = leave else {
                // unbounded direction; with t clamped to 1 this cannot
                // happen for the feasibility objective
                unreachable!("simplex objective unbounded");
            };
            self.pivot(i, j);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].recip();
        for x in self.a[row].iter_mut() {
            *x *= &inv;
        }
        self.b[row] *= &inv;
        for i in 0..self.a.len() {
            if i != row && !self.a[i][col].is_zero() {
                let f = self.a[i][col].clone();
                for c in 0..self.total_cols() {
                    let sub = &f * &self.a[row][c];
                    self.a[i][c] -= sub;
                }
                let sub = &f * &self.b[row];
                self.b[i] -= sub;
            }
        }
        self.basis[row] = col;
    }

    fn objective(&self, cost: &[Rat]) -> Rat {
        self.basis
            .iter()
            .zip(&self.b)
            .map(|(&j, b)| &cost[j] * b)
            .sum()
    }

    /// After phase 1: pivot zero-valued artificials out of the basis, or
    /// drop their rows entirely when the row is redundant. Artificial
    /// columns stay in the tableau (barred) so duals remain readable.
    fn drop_artificials(&mut self, structural: usize) {
        let mut i = 0;
        while i < self.a.len() {
            if self.basis[i] >= structural {
                debug_assert!(self.b[i].is_zero());
                if let Some(j) = (0..structural).find(|&j| !self.a[i][j].is_zero()) {
                    self.pivot(i, j);
                } else {
                    self.a.remove(i);
                    self.b.remove(i);
                    self.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
        for j in structural..self.total_cols() {
            self.barred[j] = true;
        }
    }

    fn solution(&self, structural: usize) -> RatVector {
        let mut x = vec![Rat::zero(); structural];
        for (i, &j) in self.basis.iter().enumerate() {
            if j < structural {
                x[j] = self.b[i].clone();
            }
        }
        x
    }

    /// Duals for the original rows: u = c_B' B^{-1}, read from the
    /// artificial columns and mapped back through the row sign flips.
    /// Dropped (redundant) rows get dual zero.
    fn duals(&self, cost: &[Rat]) -> RatVector {
        let structural = self.total_cols() - self.orig_rows;
        let mut u = vec![Rat::zero(); self.orig_rows];
        for (orig, slot) in u.iter_mut().enumerate() {
            let col = structural + orig;
            let mut val = Rat::zero();
            for (i, row) in self.a.iter().enumerate() {
                if !cost[self.basis[i]].is_zero() {
                    val += &cost[self.basis[i]] * &row[col];
                }
            }
            *slot = val * &self.row_signs[orig];
        }
        u
    }
}

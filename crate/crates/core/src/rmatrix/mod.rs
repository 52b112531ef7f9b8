//! The R-matrix on `V ⊗ V` assembled from the truncated universal R, `R = (Σ_β L_β) q^{-H}`,
//! and checks of its defining properties.
//!
//! Index layout: row `(c, a)` is `c·n + a` and column `(d, b)` is `d·n + b`, so that
//! `R^{ca}_{db} = Σ_β Σ_i D(u^i)_{cd} D(v_i)_{ab} q^{-(μ_d, μ_b)}`.

mod json;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::matrix::SparseMatrix;
use crate::ncalg::{antipode, coproduct, Algebra, AntipodeDirection, NcExpr, Q64};
use crate::pairing::{dual_pair_sets, DualPairSet};
use crate::report::Report;
use crate::reps::{evaluate_tensor, Matrix, Representation};
use crate::scalar::{Field, PointValue, Rational};
use crate::Error;

pub use json::{PointMatrixWire, RMatrixWire};

/// Default truncation height; enough for every weight difference of the minimal
/// representations of `A_N` (`N <= 6`) and `G_2`.
pub const DEFAULT_MAX_HEIGHT: i64 = 6;

/// `c_i(ν) = -Σ_j (a^{-1})_{ij} ν_j`: the exponents of the `t`-monomial acting on a weight
/// `μ` vector as `q^{-(μ, ν)}`.
pub fn cartan_factor(alg: &Algebra, nu: &[i64]) -> Vec<Q64> {
    let r = alg.rank();
    (0..r).map(|i| -(0..r).map(|j| alg.inv_cartan(i, j) * Q64::from(nu[j])).sum::<Q64>()).collect()
}

/// Root-lattice coordinates of `μ_c - μ_d` when they are non-negative integers.
pub fn positive_root_coords(alg: &Algebra, mu_c: &[i64], mu_d: &[i64]) -> Option<Vec<i64>> {
    let delta: Vec<i64> = mu_c.iter().zip(mu_d).map(|(a, b)| a - b).collect();
    let m = alg.to_root_coords(&delta);
    m.iter().all(|x| x.is_integer() && *x >= Q64::zero()).then(|| m.iter().map(|x| x.to_integer()).collect())
}

/// The weights `β` with `D(u)_{cd}` possibly nonzero for `u` of weight `β`, i.e. all
/// non-negative differences of weights of `rep`.
pub fn needed_betas(rep: &Representation) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for c in 0..rep.dim() {
        for d in 0..rep.dim() {
            if let Some(b) = positive_root_coords(rep.algebra(), rep.weight(c), rep.weight(d)) {
                if !out.contains(&b) {
                    out.push(b);
                }
            }
        }
    }
    out.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
    out
}

/// Dual pair sets for every weight needed by `rep`, or an error naming the first weight
/// above `max_height`.
pub fn pair_sets_for(rep: &Representation, max_height: i64) -> Result<BTreeMap<Vec<i64>, DualPairSet>, Error> {
    let betas = needed_betas(rep);
    if let Some(b) = betas.iter().find(|b| b.iter().sum::<i64>() > max_height) {
        return Err(Error::MissingBeta(b.clone()));
    }
    dual_pair_sets(rep.algebra(), &betas)
}

/// `R` on `V ⊗ V` for the base representation `V`.
#[derive(Clone, Debug)]
pub struct RMatrix {
    alg: Algebra,
    n: usize,
    weights: Vec<Vec<i64>>,
    matrix: Matrix,
}

/// `q^{∓(μ_d, μ_b)}` on the diagonal of `V ⊗ V`.
fn cartan_diagonal(rep: &Representation, sign: i64) -> Result<Matrix, Error> {
    let alg = rep.algebra();
    let n = rep.dim();
    let mut diag = Vec::with_capacity(n * n);
    for d in 0..n {
        for b in 0..n {
            let e = alg.weight_form_exp(rep.weight(d), rep.weight(b))?;
            diag.push(alg.scalars().v_pow(-sign * e));
        }
    }
    Ok(Matrix::diagonal(diag, alg.scalars()))
}

/// `Σ_β Σ_i D(u^i) ⊗ D(g(v_i))`, the graded part without the Cartan factor.
fn sum_terms<F>(rep: &Representation, sets: &BTreeMap<Vec<i64>, DualPairSet>, g: F) -> Result<Matrix, Error>
where
    F: Fn(&NcExpr) -> NcExpr,
{
    let alg = rep.algebra();
    let n = rep.dim();
    let mut acc = Matrix::zeros(n * n, n * n, alg.scalars());
    for set in sets.values() {
        for (u, v) in &set.terms {
            let du = rep.evaluate(u)?;
            if du.is_zero() {
                continue;
            }
            let dv = rep.evaluate(&g(v))?;
            acc = acc.add(&du.kron(&dv));
        }
    }
    Ok(acc)
}

impl RMatrix {
    /// Assemble with dual pair sets up to `max_height`.
    pub fn build(rep: &Representation, max_height: i64) -> Result<Self, Error> {
        let sets = pair_sets_for(rep, max_height)?;
        Self::from_pair_sets(rep, &sets)
    }

    pub fn from_pair_sets(rep: &Representation, sets: &BTreeMap<Vec<i64>, DualPairSet>) -> Result<Self, Error> {
        let theta = sum_terms(rep, sets, NcExpr::clone)?;
        let matrix = theta.mul(&cartan_diagonal(rep, 1)?);
        Ok(RMatrix { alg: rep.algebra().clone(), n: rep.dim(), weights: rep.weights().to_vec(), matrix })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// Dimension of the base representation.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `R^{ca}_{db}` (0-based).
    pub fn entry(&self, c: usize, a: usize, d: usize, b: usize) -> crate::scalar::Scalar {
        self.matrix.at(c * self.n + a, d * self.n + b)
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// All entries evaluated at `v = v0`.
    pub fn at_point(&self, v0: &Rational) -> Result<SparseMatrix<PointValue>, Error> {
        to_point(&self.matrix, v0)
    }
}

pub fn to_point(m: &Matrix, v0: &Rational) -> Result<SparseMatrix<PointValue>, Error> {
    let d = m.ctx().sqrt_of().map(|s| s.eval(v0)).unwrap_or_else(Rational::zero);
    let ctx = std::sync::Arc::new(d);
    m.try_map::<PointValue, Error, _>(&ctx, |x| Ok(x.eval_at(v0)?))
}

/// `R Δ(g) = Δ^op(g) R` on `V ⊗ V` for every generator `g`.
pub fn check_intertwiner(r: &RMatrix, rep: &Representation) -> Report {
    let alg = rep.algebra();
    let mut report = Report::new(format!("R intertwines D and D^op on {}", rep.label()));
    let mut gens: Vec<(String, NcExpr)> = Vec::new();
    for i in 1..=alg.rank() {
        gens.push((format!("e{i}"), NcExpr::e(alg, i).expect("e_i")));
        gens.push((format!("f{i}"), NcExpr::f(alg, i).expect("f_i")));
        gens.push((format!("t{i}"), NcExpr::t(alg, i, Q64::one()).expect("t_i")));
    }
    for (name, g) in gens {
        let delta = coproduct(&g);
        let res = (|| -> Result<Matrix, Error> {
            let d = evaluate_tensor(&delta, &[rep, rep])?;
            let dop = evaluate_tensor(&delta.flip(), &[rep, rep])?;
            Ok(r.matrix.mul(&d).sub(&dop.mul(&r.matrix)))
        })();
        match res {
            Ok(m) if m.is_zero() => report.pass(name),
            Ok(m) => report.fail(name, crate::reps::residual_detail(&m)),
            Err(e) => report.fail(name, e.to_string()),
        }
    }
    report
}

/// `(R_12, R_13, R_23)` on `V ⊗ V ⊗ V`, basis `(i, j, k) -> (i n + j) n + k`.
pub fn triple_embeddings<T: Field>(r: &SparseMatrix<T>, n: usize) -> [SparseMatrix<T>; 3] {
    let ctx = r.ctx().clone();
    let id = SparseMatrix::<T>::identity(n, &ctx);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let mut trip = Vec::new();
    for (row, col, x) in r.triplets() {
        let (i, k) = (row / n, row % n);
        let (i2, k2) = (col / n, col % n);
        for j in 0..n {
            trip.push(((i * n + j) * n + k, (i2 * n + j) * n + k2, x.clone()));
        }
    }
    let r13 = SparseMatrix::from_triplets(n * n * n, n * n * n, &ctx, trip);
    [r12, r13, r23]
}

/// `R_12 R_13 R_23 - R_23 R_13 R_12`.
pub fn ybe_residual<T: Field>(r: &SparseMatrix<T>, n: usize) -> SparseMatrix<T> {
    let [r12, r13, r23] = triple_embeddings(r, n);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    lhs.sub(&rhs)
}

/// Yang–Baxter check, exactly or at the given points `v0`.
pub fn check_ybe(r: &RMatrix, points: Option<&[Rational]>) -> Report {
    let mut report = Report::new(format!("Yang-Baxter equation, {}^3", r.n));
    match points {
        None => {
            let res = ybe_residual(&r.matrix, r.n);
            if res.is_zero() {
                report.pass("exact");
            } else {
                report.fail("exact", crate::reps::residual_detail(&res));
            }
        }
        Some(ps) => {
            for p in ps {
                let name = format!("v = {p}");
                match r.at_point(p) {
                    Ok(m) => {
                        let res = ybe_residual(&m, r.n);
                        if res.is_zero() {
                            report.pass(name);
                        } else {
                            report.fail(name, format!("residual has {} nonzero entries", res.nnz()));
                        }
                    }
                    Err(e) => report.fail(name, e.to_string()),
                }
            }
        }
    }
    report
}

/// `M = (id ⊗ S^{-1}) R = Σ (D(u^i) ⊗ 1) q^{+H} (1 ⊗ D(S^{-1} v_i))`.
pub fn r_inverse_via_antipode(rep: &Representation, sets: &BTreeMap<Vec<i64>, DualPairSet>) -> Result<Matrix, Error> {
    let alg = rep.algebra();
    let n = rep.dim();
    let k = alg.scalars();
    let id = Matrix::identity(n, k);
    let qh = cartan_diagonal(rep, -1)?;
    let mut acc = Matrix::zeros(n * n, n * n, k);
    for set in sets.values() {
        for (u, v) in &set.terms {
            let du = rep.evaluate(u)?;
            if du.is_zero() {
                continue;
            }
            let dv = rep.evaluate(&antipode(v, AntipodeDirection::Inverse))?;
            acc = acc.add(&du.kron(&id).mul(&qh).mul(&id.kron(&dv)));
        }
    }
    Ok(acc)
}

/// `M R = R M = 1` for `M` from [`r_inverse_via_antipode`], exactly or at points.
pub fn check_inverse(rep: &Representation, max_height: i64, points: Option<&[Rational]>) -> Report {
    let mut report = Report::new(format!("R^-1 = (id x S^-1) R on {}", rep.label()));
    let res = (|| -> Result<(Matrix, Matrix), Error> {
        let sets = pair_sets_for(rep, max_height)?;
        let r = RMatrix::from_pair_sets(rep, &sets)?;
        let m = r_inverse_via_antipode(rep, &sets)?;
        Ok((r.matrix, m))
    })();
    let (r, m) = match res {
        Ok(x) => x,
        Err(e) => {
            report.fail("assembly", e.to_string());
            return report;
        }
    };
    let nn = r.rows();
    match points {
        None => {
            let id = Matrix::identity(nn, r.ctx());
            for (name, prod) in [("M R", m.mul(&r)), ("R M", r.mul(&m))] {
                let res = prod.sub(&id);
                if res.is_zero() {
                    report.pass(name);
                } else {
                    report.fail(name, crate::reps::residual_detail(&res));
                }
            }
        }
        Some(ps) => {
            for p in ps {
                let pr = (to_point(&r, p), to_point(&m, p));
                let (Ok(rp), Ok(mp)) = pr else {
                    report.fail(format!("v = {p}"), "pole at evaluation point");
                    continue;
                };
                let id = SparseMatrix::<PointValue>::identity(nn, rp.ctx());
                for (name, prod) in [("M R", mp.mul(&rp)), ("R M", rp.mul(&mp))] {
                    let res = prod.sub(&id);
                    let label = format!("{name} at v = {p}");
                    if res.is_zero() {
                        report.pass(label);
                    } else {
                        report.fail(label, format!("residual has {} nonzero entries", res.nnz()));
                    }
                }
            }
        }
    }
    report
}

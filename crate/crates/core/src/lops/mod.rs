//! `L^±` operator matrices: sliced out of the truncated universal R in the base
//! representation, or taken from the closed forms, and compared with each other.

mod an;
mod catalog;
mod coef;
mod g2;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::ncalg::{antipode, Algebra, AntipodeDirection, CartanType, Monomial, NcExpr};
use crate::pairing::DualPairSet;
use crate::report::Report;
use crate::reps::{Matrix, OperatorMatrix, Representation};
use crate::rmatrix::{cartan_factor, pair_sets_for, RMatrix};
use crate::Error;

pub use an::{
    catalog_an, check_cartan_exponents, check_perm_sums, e_nonsimple, e_nonsimple_terms, perm_classes, perm_sum_u, tau_an,
};
pub use catalog::CatalogEntry;
pub use coef::Coef;
pub use g2::catalog_g2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LKind {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LSource {
    Slice,
    Catalog,
}

impl fmt::Display for LKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LKind::Plus => "L+",
            LKind::Minus => "L-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LMatrix {
    pub kind: LKind,
    pub source: LSource,
    pub entries: OperatorMatrix,
}

impl LMatrix {
    pub fn algebra(&self) -> &Algebra {
        self.entries.algebra()
    }

    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    /// `(L)^a_b`, 1-based.
    pub fn entry(&self, a: usize, b: usize) -> Result<&NcExpr, Error> {
        let n = self.dim();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::IndexOutOfRange(format!("({a}, {b}) in {n}x{n}")));
        }
        Ok(self.entries.get(a - 1, b - 1))
    }
}

fn cartan_t(alg: &Algebra, nu: &[i64]) -> Result<NcExpr, Error> {
    NcExpr::t_mono(alg, &cartan_factor(alg, nu))
}

/// `(L⁻)^a_b = Σ_β Σ_i D(v_i)_{ab} u^i T(ν_b)`, with `T(ν)` the Cartan factor of the
/// weight of basis vector `b`.
pub fn lminus_from_sets(rep: &Representation, sets: &BTreeMap<Vec<i64>, DualPairSet>) -> Result<LMatrix, Error> {
    let alg = rep.algebra();
    let n = rep.dim();
    let mut acc = vec![NcExpr::zero(alg); n * n];
    for set in sets.values() {
        for (u, v) in &set.terms {
            let dv = rep.evaluate(v)?;
            for (a, b, x) in dv.triplets() {
                acc[a * n + b] = &acc[a * n + b] + &u.scale(x);
            }
        }
    }
    let entries = OperatorMatrix::from_fn(alg, n, |a, b| Ok(&acc[a * n + b] * &cartan_t(alg, rep.weight(b))?))?;
    Ok(LMatrix { kind: LKind::Minus, source: LSource::Slice, entries })
}

/// `(L⁺)^a_b = S^{-1}(M^a_b)` with `M^a_b = Σ_β Σ_i D(u^i)_{ab} v_i T(μ_b)`.
pub fn lplus_from_sets(rep: &Representation, sets: &BTreeMap<Vec<i64>, DualPairSet>) -> Result<LMatrix, Error> {
    let alg = rep.algebra();
    let n = rep.dim();
    let mut acc = vec![NcExpr::zero(alg); n * n];
    for set in sets.values() {
        for (u, v) in &set.terms {
            let du = rep.evaluate(u)?;
            for (a, b, x) in du.triplets() {
                acc[a * n + b] = &acc[a * n + b] + &v.scale(x);
            }
        }
    }
    let entries = OperatorMatrix::from_fn(alg, n, |a, b| {
        let m = &acc[a * n + b] * &cartan_t(alg, rep.weight(b))?;
        Ok(antipode(&m, AntipodeDirection::Inverse))
    })?;
    Ok(LMatrix { kind: LKind::Plus, source: LSource::Slice, entries })
}

pub fn lminus_from_r(rep: &Representation, max_height: i64) -> Result<LMatrix, Error> {
    lminus_from_sets(rep, &pair_sets_for(rep, max_height)?)
}

pub fn lplus_from_r(rep: &Representation, max_height: i64) -> Result<LMatrix, Error> {
    lplus_from_sets(rep, &pair_sets_for(rep, max_height)?)
}

/// Closed form of `(L^∓)^a_b` (1-based) for `A_N` or `G_2`.
pub fn catalog_entry(alg: &Algebra, kind: LKind, a: usize, b: usize) -> Result<CatalogEntry, Error> {
    match alg.cartan_type() {
        CartanType::A(_) => catalog_an(alg, kind, a, b),
        CartanType::G2 => catalog_g2(alg, kind, a, b),
    }
}

pub fn catalog_lmatrix(alg: &Algebra, kind: LKind) -> Result<LMatrix, Error> {
    let n = match alg.cartan_type() {
        CartanType::A(n) => n + 1,
        CartanType::G2 => 7,
    };
    let entries = OperatorMatrix::from_fn(alg, n, |a, b| catalog_entry(alg, kind, a + 1, b + 1)?.to_nc(alg))?;
    Ok(LMatrix { kind, source: LSource::Catalog, entries })
}

/// `q_j -> q_j^{-1}` on coefficients, `e_j <-> f_j`, `t -> t^{-1}`, products reversed.
pub fn minus_to_plus_transform(x: &NcExpr) -> NcExpr {
    let alg = x.algebra();
    let mut out = NcExpr::zero(alg);
    for (m, c) in x.terms() {
        let t = NcExpr::term(alg, c.bar(), Monomial { word: Vec::new(), t: m.t.inverse() });
        let w = NcExpr::word(alg, m.word.iter().rev().map(|l| l.swap_kind()).collect());
        out = &out + &(&t * &w);
    }
    out
}

/// `(L^±)^a_b = transform((L^∓)^b_a)` for every entry.
pub fn transform_lmatrix(l: &LMatrix) -> LMatrix {
    let n = l.dim();
    let entries = OperatorMatrix::from_fn(l.algebra(), n, |a, b| Ok(minus_to_plus_transform(l.entries.get(b, a))))
        .expect("same algebra and dimension");
    let kind = match l.kind {
        LKind::Minus => LKind::Plus,
        LKind::Plus => LKind::Minus,
    };
    LMatrix { kind, source: l.source, entries }
}

fn residual_report(report: &mut Report, results: Vec<(String, Result<Matrix, Error>)>) {
    for (name, res) in results {
        match res {
            Ok(m) if m.is_zero() => report.pass(name),
            Ok(m) => report.fail(name, crate::reps::residual_detail(&m)),
            Err(e) => report.fail(name, e.to_string()),
        }
    }
}

fn all_cells(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
}

/// `D((L⁻)^a_b)_{cd} = R^{ca}_{db}`, or `D(S((L⁺)^a_b))_{cd} = R^{ac}_{bd}`, for every cell.
pub fn verify_slices(l: &LMatrix, r: &RMatrix, rep: &Representation) -> Report {
    let n = rep.dim();
    let mut report = Report::new(format!("{} slices of R on {}", l.kind, rep.label()));
    if l.dim() != n || r.n() != n {
        report.fail("dimensions", format!("L is {}x{0}, R acts on {}^2, V has dimension {n}", l.dim(), r.n()));
        return report;
    }
    let results: Vec<(String, Result<Matrix, Error>)> = all_cells(n)
        .into_par_iter()
        .map(|(a, b)| {
            let res = (|| -> Result<Matrix, Error> {
                let (x, cell): (NcExpr, Box<dyn Fn(usize, usize) -> crate::Scalar>) = match l.kind {
                    LKind::Minus => (l.entries.get(a, b).clone(), Box::new(|c, d| r.entry(c, a, d, b))),
                    LKind::Plus => (
                        antipode(l.entries.get(a, b), AntipodeDirection::Forward),
                        Box::new(|c, d| r.entry(a, c, b, d)),
                    ),
                };
                let lhs = rep.evaluate(&x)?;
                let trip = all_cells(n).into_iter().map(|(c, d)| (c, d, cell(c, d)));
                let rhs = Matrix::from_triplets(n, n, rep.algebra().scalars(), trip);
                Ok(lhs.sub(&rhs))
            })();
            (format!("({}, {})", a + 1, b + 1), res)
        })
        .collect();
    residual_report(&mut report, results);
    report
}

/// `D((L⁺)^a_b)_{cd} = (R^{-1})^{ac}_{bd}` for a given `R^{-1}` on `V ⊗ V`.
pub fn verify_plus_inverse(l: &LMatrix, r_inv: &Matrix, rep: &Representation) -> Report {
    let n = rep.dim();
    let mut report = Report::new(format!("L+ against R^-1 on {}", rep.label()));
    if l.kind != LKind::Plus || l.dim() != n || r_inv.rows() != n * n {
        report.fail("shape", "expects L+ and R^-1 on the same representation");
        return report;
    }
    let results = all_cells(n)
        .into_par_iter()
        .map(|(a, b)| {
            let res = rep.evaluate(l.entries.get(a, b)).map(|lhs| {
                let trip = all_cells(n).into_iter().map(|(c, d)| (c, d, r_inv.at(a * n + c, b * n + d)));
                lhs.sub(&Matrix::from_triplets(n, n, rep.algebra().scalars(), trip))
            });
            (format!("({}, {})", a + 1, b + 1), res)
        })
        .collect();
    residual_report(&mut report, results);
    report
}

/// `D(x^a_b) = D(y^a_b)` for every entry and every given representation.
pub fn compare_under_evaluation(x: &LMatrix, y: &LMatrix, reps: &[&Representation]) -> Report {
    let mut report = Report::new(format!("{} {:?} = {} {:?}", x.kind, x.source, y.kind, y.source).to_lowercase());
    if x.dim() != y.dim() {
        report.fail("dimensions", format!("{} vs {}", x.dim(), y.dim()));
        return report;
    }
    for rep in reps {
        let results = all_cells(x.dim())
            .into_par_iter()
            .map(|(a, b)| {
                let d = x.entries.get(a, b) - y.entries.get(a, b);
                (format!("{} ({}, {})", rep.label(), a + 1, b + 1), rep.evaluate(&d))
            })
            .collect();
        residual_report(&mut report, results);
    }
    report
}

/// `L⁻` vanishes above the diagonal and `L⁺` below it; diagonal entries are single
/// `t`-monomials.
pub fn check_triangular(l: &LMatrix) -> Report {
    let mut report = Report::new(format!("{} {:?} triangular form", l.kind, l.source).to_lowercase());
    for (a, b) in all_cells(l.dim()) {
        let x = l.entries.get(a, b);
        let name = format!("({}, {})", a + 1, b + 1);
        let upper = match l.kind {
            LKind::Minus => a < b,
            LKind::Plus => a > b,
        };
        if upper && !x.is_zero() {
            report.fail(name, "expected 0");
        } else if a == b && !(x.len() == 1 && x.is_cartan()) {
            report.fail(name, format!("expected a t-monomial, got {}", x.to_latex()));
        } else {
            report.pass(name);
        }
    }
    report
}

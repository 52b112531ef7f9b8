use std::cell::OnceCell;
use std::collections::BTreeMap;

use num_bigint::BigInt;

use qea_core::lops::{
    catalog_lmatrix, check_cartan_exponents, check_perm_sums, check_triangular, compare_under_evaluation,
    lminus_from_sets, lplus_from_sets, transform_lmatrix, verify_plus_inverse, verify_slices, LKind, LMatrix,
};
use qea_core::pairing::{check_serre_radical, DualPairSet};
use qea_core::report::Report;
use qea_core::reps::{check_hopf, check_relations, Representation};
use qea_core::rmatrix::{check_intertwiner, check_inverse, check_ybe, pair_sets_for, RMatrix};
use qea_core::{Algebra, CartanType, Rational};

use crate::{max_height, usage, Failure, Suite};

/// Lazily built pieces shared between suites.
struct Ctx<'a> {
    alg: &'a Algebra,
    height: i64,
    v: Representation,
    vv: OnceCell<Representation>,
    sets: OnceCell<BTreeMap<Vec<i64>, DualPairSet>>,
    r: OnceCell<RMatrix>,
}

impl<'a> Ctx<'a> {
    fn vv(&self) -> &Representation {
        self.vv.get_or_init(|| Representation::tensor_square(self.alg))
    }

    fn sets(&self) -> Result<&BTreeMap<Vec<i64>, DualPairSet>, Failure> {
        if self.sets.get().is_none() {
            let _ = self.sets.set(pair_sets_for(&self.v, self.height)?);
        }
        Ok(self.sets.get().expect("just set"))
    }

    fn r(&self) -> Result<&RMatrix, Failure> {
        if self.r.get().is_none() {
            let r = RMatrix::from_pair_sets(&self.v, self.sets()?)?;
            let _ = self.r.set(r);
        }
        Ok(self.r.get().expect("just set"))
    }

    fn slice(&self, kind: LKind) -> Result<LMatrix, Failure> {
        Ok(match kind {
            LKind::Minus => lminus_from_sets(&self.v, self.sets()?)?,
            LKind::Plus => lplus_from_sets(&self.v, self.sets()?)?,
        })
    }

    fn is_an(&self) -> bool {
        matches!(self.alg.cartan_type(), CartanType::A(_))
    }
}

fn default_points() -> Vec<Rational> {
    [(2, 1), (3, 2), (5, 3)].iter().map(|&(n, d)| Rational::new(BigInt::from(n), BigInt::from(d))).collect()
}

/// Exact for `A_N`, three points for `G_2`, unless overridden by `--at` or `--exact`.
fn points_for(ctx: &Ctx, at: &[Rational], exact: bool) -> Option<Vec<Rational>> {
    if exact {
        None
    } else if !at.is_empty() {
        Some(at.to_vec())
    } else if ctx.is_an() {
        None
    } else {
        Some(default_points())
    }
}

fn one(ctx: &Ctx, suite: Suite, at: &[Rational], exact: bool) -> Result<Vec<Report>, Failure> {
    let both = |x: &LMatrix, y: &LMatrix| compare_under_evaluation(x, y, &[&ctx.v, ctx.vv()]);
    Ok(match suite {
        Suite::Relations => vec![
            check_relations(&ctx.v),
            check_hopf(&ctx.v),
            check_relations(ctx.vv()),
            check_hopf(ctx.vv()),
        ],
        Suite::Ybe => {
            let r = ctx.r()?;
            vec![check_intertwiner(r, &ctx.v), check_ybe(r, points_for(ctx, at, exact).as_deref())]
        }
        Suite::Inverse => vec![check_inverse(&ctx.v, ctx.height, points_for(ctx, at, exact).as_deref())],
        Suite::Slice => {
            let r = ctx.r()?;
            let r_inv = r.matrix().inverse().ok_or_else(|| usage("R is singular"))?;
            let (lm, lp) = (ctx.slice(LKind::Minus)?, ctx.slice(LKind::Plus)?);
            vec![
                verify_slices(&lm, r, &ctx.v),
                verify_slices(&lp, r, &ctx.v),
                verify_plus_inverse(&lp, &r_inv, &ctx.v),
                check_triangular(&lm),
                check_triangular(&lp),
            ]
        }
        Suite::Catalog => {
            let mut out = Vec::new();
            for kind in [LKind::Minus, LKind::Plus] {
                let cat = catalog_lmatrix(ctx.alg, kind)?;
                out.push(check_triangular(&cat));
                out.push(both(&ctx.slice(kind)?, &cat));
            }
            out
        }
        Suite::Transform => {
            let cm = catalog_lmatrix(ctx.alg, LKind::Minus)?;
            let cp = catalog_lmatrix(ctx.alg, LKind::Plus)?;
            let (lm, lp) = (ctx.slice(LKind::Minus)?, ctx.slice(LKind::Plus)?);
            vec![
                both(&transform_lmatrix(&cm), &cp),
                both(&transform_lmatrix(&lm), &lp),
                both(&transform_lmatrix(&cm), &lp),
            ]
        }
        Suite::Perm => vec![check_perm_sums(ctx.alg, &[&ctx.v, ctx.vv()], 4)?],
        Suite::Qh => vec![check_cartan_exponents(ctx.alg)?],
        Suite::Radical => {
            let h = if ctx.is_an() { 4 } else { 6 };
            vec![check_serre_radical(ctx.alg, h.min(ctx.height as usize))?]
        }
        Suite::All => unreachable!("expanded by run"),
    })
}

pub(crate) fn run(alg: &Algebra, suite: Suite, at: &[Rational], exact: bool) -> Result<Vec<Report>, Failure> {
    let ctx = Ctx {
        alg,
        height: max_height()?,
        v: Representation::minimal(alg),
        vv: OnceCell::new(),
        sets: OnceCell::new(),
        r: OnceCell::new(),
    };
    let a_only = [Suite::Perm, Suite::Qh];
    let list = match suite {
        Suite::All => {
            let all = [
                Suite::Relations,
                Suite::Ybe,
                Suite::Slice,
                Suite::Catalog,
                Suite::Perm,
                Suite::Transform,
                Suite::Inverse,
                Suite::Qh,
                Suite::Radical,
            ];
            all.into_iter().filter(|s| ctx.is_an() || !a_only.contains(s)).collect()
        }
        s if a_only.contains(&s) && !ctx.is_an() => {
            let name = if s == Suite::Perm { "perm" } else { "qh" };
            return Err(usage(format!("the {name} suite applies to A_N only")));
        }
        s => vec![s],
    };
    let mut out = Vec::new();
    for s in list {
        out.extend(one(&ctx, s, at, exact)?);
    }
    Ok(out)
}

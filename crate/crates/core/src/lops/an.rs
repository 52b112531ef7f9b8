//! `A_N`-specific pieces: the q-commutator root vectors `E_ij`, the permutation-sum form
//! of the dual elements `u^i`, and the closed forms of `L^±`.

use super::catalog::CatalogEntry;
use super::coef::Coef;
use super::LKind;
use crate::ncalg::{Algebra, CartanType, Letter, NcExpr, Q64, Word};
use crate::report::Report;
use crate::reps::Representation;
use crate::rmatrix::cartan_factor;
use crate::Error;

fn rank_of(alg: &Algebra) -> Result<usize, Error> {
    match alg.cartan_type() {
        CartanType::A(n) => Ok(n),
        CartanType::G2 => Err(Error::Unsupported("E_ij root vectors are defined for A_N only".into())),
    }
}

/// `(integer, q-exponent)` pairs summed per word, in order of first appearance.
type Expansion = Vec<(Word, Vec<(i64, i64)>)>;

fn push(out: &mut Expansion, w: Word, c: i64, e: i64) {
    let slot = match out.iter().position(|(x, _)| *x == w) {
        Some(p) => &mut out[p].1,
        None => {
            out.push((w, Vec::new()));
            &mut out.last_mut().expect("just pushed").1
        }
    };
    match slot.iter().position(|&(_, x)| x == e) {
        Some(p) => slot[p].0 += c,
        None => slot.push((c, e)),
    }
    slot.retain(|&(c, _)| c != 0);
}

fn expand(i: usize, j: usize) -> Expansion {
    if j == i + 1 {
        return vec![(vec![Letter::E((i - 1) as u8)], vec![(1, 0)])];
    }
    if i == j + 1 {
        return vec![(vec![Letter::F((j - 1) as u8)], vec![(1, 0)])];
    }
    let (k, qe) = if i < j { (i + 1, 1) } else { (i - 1, -1) };
    let a = expand(i, k);
    let b = expand(k, j);
    let mut out = Expansion::new();
    for (first, second, scale) in [(&a, &b, None), (&b, &a, Some(qe))] {
        for (w1, c1) in first {
            for (w2, c2) in second {
                let w: Word = w1.iter().chain(w2).copied().collect();
                for &(x1, e1) in c1 {
                    for &(x2, e2) in c2 {
                        match scale {
                            None => push(&mut out, w.clone(), x1 * x2, e1 + e2),
                            Some(s) => push(&mut out, w.clone(), -x1 * x2, e1 + e2 + s),
                        }
                    }
                }
            }
        }
    }
    out.retain(|(_, c)| !c.is_empty());
    out
}

fn qmono(c: i64, e: i64) -> Coef {
    let mag = match (c.abs(), e) {
        (m, 0) => Coef::Int(m),
        (1, e) => Coef::Q(e),
        (m, e) => Coef::mul(vec![Coef::Int(m), Coef::Q(e)]),
    };
    if c < 0 {
        Coef::neg(mag)
    } else {
        mag
    }
}

fn expansion_terms(x: Expansion) -> Vec<(Coef, Word)> {
    x.into_iter()
        .map(|(w, cs)| {
            let c = if cs.len() == 1 { qmono(cs[0].0, cs[0].1) } else { Coef::Sum(cs.iter().map(|&(c, e)| qmono(c, e)).collect()) };
            (c, w)
        })
        .collect()
}

fn check_index(n: usize, i: usize) -> Result<(), Error> {
    if i == 0 || i > n + 1 {
        return Err(Error::IndexOutOfRange(format!("index {i} for A{n}")));
    }
    Ok(())
}

/// `E_ij` for `i ≠ j` (1-based) as a sum of words: `E_{j,j+1} = e_j`,
/// `E_{j+1,j} = f_j`, `E_ij = E_ik E_kj - q E_kj E_ik` with `k = i+1` when `i < j`, and
/// `E_ij = E_ik E_kj - q^{-1} E_kj E_ik` with `k = i-1` when `i > j`.
pub fn e_nonsimple_terms(alg: &Algebra, i: usize, j: usize) -> Result<Vec<(Coef, Word)>, Error> {
    let n = rank_of(alg)?;
    check_index(n, i)?;
    check_index(n, j)?;
    if i == j {
        return Err(Error::IndexOutOfRange(format!("E_{i}{j} needs i != j")));
    }
    Ok(expansion_terms(expand(i, j)))
}

pub fn e_nonsimple(alg: &Algebra, i: usize, j: usize) -> Result<NcExpr, Error> {
    let mut out = NcExpr::zero(alg);
    for (c, w) in e_nonsimple_terms(alg, i, j)? {
        out = &out + &NcExpr::word(alg, w).scale(&c.to_scalar(alg)?);
    }
    Ok(out)
}

/// Representatives of the inequivalent orderings of `e_b, …, e_{a-1}` with the number of
/// neighbouring transpositions each contains. Starting from `e_b`, every later `e_c` is
/// placed at the far left, or at the far right when `c` is in the transposed set.
pub fn perm_classes(a: usize, b: usize) -> Vec<(usize, Word)> {
    let span = a - b - 1;
    (0..1u64 << span)
        .map(|mask| {
            let mut w = std::collections::VecDeque::from([Letter::E((b - 1) as u8)]);
            for (bit, c) in (b + 1..a).enumerate() {
                let l = Letter::E((c - 1) as u8);
                if mask >> bit & 1 == 1 {
                    w.push_back(l);
                } else {
                    w.push_front(l);
                }
            }
            (mask.count_ones() as usize, w.into_iter().collect())
        })
        .collect()
}

/// `-ω q^{a-b-1} Σ_P (-q)^{-n(P)} e_{p_1} ⋯ e_{p_{a-b}}` over the classes of
/// [`perm_classes`]; equals `(-1)^{a-b} ω E_{ba}`.
pub fn perm_sum_u(alg: &Algebra, a: usize, b: usize) -> Result<NcExpr, Error> {
    let n = rank_of(alg)?;
    check_index(n, a)?;
    check_index(n, b)?;
    if a <= b {
        return Err(Error::IndexOutOfRange(format!("perm_sum_u needs a > b, got ({a}, {b})")));
    }
    let pre = Coef::mul(vec![Coef::neg(Coef::Omega(1)), Coef::Q((a - b - 1) as i64)]).to_scalar(alg)?;
    let mut out = NcExpr::zero(alg);
    for (np, w) in perm_classes(a, b) {
        let sign = if np % 2 == 1 { -1 } else { 1 };
        let c = qmono(sign, -(np as i64)).to_scalar(alg)?;
        out = &out + &NcExpr::word(alg, w).scale(&(&pre * &c));
    }
    Ok(out)
}

/// `τ_jb`, the exponent of `t_j` in the Cartan factor on basis vector `b` (both 1-based):
/// `j/(N+1) - 1` for `j ≥ b`, `j/(N+1)` otherwise.
pub fn tau_an(n: usize, j: usize, b: usize) -> Q64 {
    let base = Q64::new(j as i64, (n + 1) as i64);
    if j >= b {
        base - 1
    } else {
        base
    }
}

/// `(L^∓)^a_b` for `A_N` (1-based), with `P = ∏_j t_j^{j/(N+1)}`:
/// `L⁻`: `0` above the diagonal, `P ∏_{k≥b} t_k^{-1}` on it and
/// `(-1)^{a-b} ω E_ba P ∏_{k≥b} t_k^{-1}` below;
/// `L⁺`: `P^{-1} ∏_{k≥a} t_k` on the diagonal, `(-1)^{b-a+1} ω P^{-1} ∏_{k≥a} t_k E_ba`
/// above and `0` below.
pub fn catalog_an(alg: &Algebra, kind: LKind, a: usize, b: usize) -> Result<CatalogEntry, Error> {
    let n = rank_of(alg)?;
    check_index(n, a)?;
    check_index(n, b)?;
    let p = |j: usize| Q64::new(j as i64, (n + 1) as i64);
    let omega_sign = |k: usize| if k % 2 == 1 { Coef::neg(Coef::Omega(1)) } else { Coef::Omega(1) };
    Ok(match kind {
        LKind::Minus => {
            if a < b {
                return Ok(CatalogEntry::zero(n));
            }
            let t: Vec<Q64> = (1..=n).map(|j| if j >= b { p(j) - 1 } else { p(j) }).collect();
            if a == b {
                CatalogEntry::cartan(t)
            } else {
                CatalogEntry { prefactor: omega_sign(a - b), terms: e_nonsimple_terms(alg, b, a)?, t, t_left: false }
            }
        }
        LKind::Plus => {
            if a > b {
                return Ok(CatalogEntry::zero(n));
            }
            let t: Vec<Q64> = (1..=n).map(|j| if j >= a { Q64::from(1) - p(j) } else { -p(j) }).collect();
            if a == b {
                CatalogEntry::cartan(t)
            } else {
                CatalogEntry { prefactor: omega_sign(b - a + 1), terms: e_nonsimple_terms(alg, b, a)?, t, t_left: true }
            }
        }
    })
}

/// `perm_sum_u(a, b) = (-1)^{a-b} ω E_ba` in each representation, for all `a > b` with
/// `a - b ≤ max_gap`.
pub fn check_perm_sums(alg: &Algebra, reps: &[&Representation], max_gap: usize) -> Result<Report, Error> {
    let n = rank_of(alg)?;
    let omega = alg.omega(0);
    let mut report = Report::new(format!("permutation sums in A{n}"));
    for a in 2..=n + 1 {
        for b in (1..a).rev().take_while(|b| a - b <= max_gap) {
            let sign = if (a - b) % 2 == 0 { omega.clone() } else { -omega.clone() };
            let diff = &perm_sum_u(alg, a, b)? - &e_nonsimple(alg, b, a)?.scale(&sign);
            for rep in reps {
                let name = format!("{} ({a}, {b})", rep.label());
                match rep.evaluate(&diff) {
                    Ok(m) if m.is_zero() => report.pass(name),
                    Ok(m) => report.fail(name, crate::reps::residual_detail(&m)),
                    Err(e) => report.fail(name, e.to_string()),
                }
            }
        }
    }
    Ok(report)
}

/// The Cartan factor on each basis vector of the minimal representation against [`tau_an`].
pub fn check_cartan_exponents(alg: &Algebra) -> Result<Report, Error> {
    let n = rank_of(alg)?;
    let rep = Representation::minimal_an(n)?;
    let mut report = Report::new(format!("Cartan factor exponents in A{n}"));
    for b in 1..=n + 1 {
        let tau = cartan_factor(alg, rep.weight(b - 1));
        for j in 1..=n {
            let name = format!("tau({j}, {b})");
            if tau[j - 1] == tau_an(n, j, b) {
                report.pass(name);
            } else {
                report.fail(name, format!("{} from the weights, {} expected", tau[j - 1], tau_an(n, j, b)));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lops::catalog::w;
    use crate::reps::Representation;

    fn q(alg: &Algebra, e: i64) -> crate::Scalar {
        alg.q_i_pow(0, e)
    }

    #[test]
    fn simple_and_degree_two() {
        let a2 = Algebra::a(2).unwrap();
        assert_eq!(e_nonsimple(&a2, 1, 2).unwrap(), NcExpr::e(&a2, 1).unwrap());
        assert_eq!(e_nonsimple(&a2, 2, 1).unwrap(), NcExpr::f(&a2, 1).unwrap());
        let e13 = e_nonsimple(&a2, 1, 3).unwrap();
        let oracle = &NcExpr::word(&a2, w("e1 e2")) - &NcExpr::word(&a2, w("e2 e1")).scale(&q(&a2, 1));
        assert_eq!(e13, oracle);
        let e31 = e_nonsimple(&a2, 3, 1).unwrap();
        let oracle = &NcExpr::word(&a2, w("f2 f1")) - &NcExpr::word(&a2, w("f1 f2")).scale(&q(&a2, -1));
        assert_eq!(e31, oracle);
        assert!(e_nonsimple(&Algebra::g2(), 1, 2).is_err());
        assert!(e_nonsimple(&a2, 1, 1).is_err());
    }

    #[test]
    fn root_vector_independent_of_split_point() {
        // E_14 through k = 3 instead of k = 2
        let a3 = Algebra::a(3).unwrap();
        let rep = Representation::tensor_square(&a3);
        let e12 = e_nonsimple(&a3, 1, 2).unwrap();
        let e13 = e_nonsimple(&a3, 1, 3).unwrap();
        let e24 = e_nonsimple(&a3, 2, 4).unwrap();
        let e34 = e_nonsimple(&a3, 3, 4).unwrap();
        let alt = &(&e13 * &e34) - &(&e34 * &e13).scale(&q(&a3, 1));
        let alt2 = &(&e12 * &e24) - &(&e24 * &e12).scale(&q(&a3, 1));
        let e14 = e_nonsimple(&a3, 1, 4).unwrap();
        assert_eq!(rep.evaluate(&(&e14 - &alt)).unwrap().nnz(), 0);
        assert_eq!(rep.evaluate(&(&e14 - &alt2)).unwrap().nnz(), 0);
    }

    #[test]
    fn perm_sum_small_cases() {
        let a3 = Algebra::a(3).unwrap();
        let om = a3.omega(0);
        assert_eq!(perm_sum_u(&a3, 3, 2).unwrap(), NcExpr::e(&a3, 2).unwrap().scale(&-om.clone()));
        let two = perm_sum_u(&a3, 3, 1).unwrap();
        assert_eq!(two, e_nonsimple(&a3, 1, 3).unwrap().scale(&om));
        assert_eq!(perm_classes(4, 1).len(), 4);
        assert!(perm_sum_u(&a3, 2, 2).is_err());
    }

    #[test]
    fn catalog_a1_and_a2() {
        let a1 = Algebra::a(1).unwrap();
        let h = Q64::new(1, 2);
        let m11 = catalog_an(&a1, LKind::Minus, 1, 1).unwrap().to_nc(&a1).unwrap();
        assert_eq!(m11, NcExpr::t(&a1, 1, -h).unwrap());
        let m21 = catalog_an(&a1, LKind::Minus, 2, 1).unwrap().to_nc(&a1).unwrap();
        let oracle = (&NcExpr::e(&a1, 1).unwrap() * &NcExpr::t(&a1, 1, -h).unwrap()).scale(&-a1.omega(0));
        assert_eq!(m21, oracle);
        assert!(catalog_an(&a1, LKind::Minus, 1, 2).unwrap().is_zero());
        let p12 = catalog_an(&a1, LKind::Plus, 1, 2).unwrap().to_nc(&a1).unwrap();
        let oracle = (&NcExpr::t(&a1, 1, h).unwrap() * &NcExpr::f(&a1, 1).unwrap()).scale(&a1.omega(0));
        assert_eq!(p12, oracle);

        let a2 = Algebra::a(2).unwrap();
        let d = catalog_an(&a2, LKind::Minus, 2, 2).unwrap();
        assert_eq!(d.t, vec![Q64::new(1, 3), Q64::new(-1, 3)]);
        assert_eq!(tau_an(2, 1, 2), Q64::new(1, 3));
        assert_eq!(tau_an(2, 2, 2), Q64::new(-1, 3));
    }

    #[test]
    fn diagonals_are_inverse() {
        for n in 1..=3 {
            let alg = Algebra::a(n).unwrap();
            let rep = Representation::minimal_an(n).unwrap();
            for a in 1..=n + 1 {
                let m = catalog_an(&alg, LKind::Minus, a, a).unwrap().to_nc(&alg).unwrap();
                let p = catalog_an(&alg, LKind::Plus, a, a).unwrap().to_nc(&alg).unwrap();
                let id = crate::reps::Matrix::identity(rep.dim(), alg.scalars());
                assert_eq!(rep.evaluate(&(&p * &m)).unwrap(), id);
            }
        }
    }

    #[test]
    fn perm_sums_and_exponents_in_a3() {
        let a3 = Algebra::a(3).unwrap();
        let v = Representation::minimal_an(3).unwrap();
        let r = check_perm_sums(&a3, &[&v], 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.items.len(), 6);
        let r = check_cartan_exponents(&a3).unwrap();
        assert!(r.passed());
        assert!(check_cartan_exponents(&Algebra::g2()).is_err());
    }
}

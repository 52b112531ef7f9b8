//! The closed forms of `(L⁻)^a_b` for `G_2` in its 7-dimensional representation.

use super::catalog::{w, CatalogEntry};
use super::coef::Coef;
use super::LKind;
use crate::ncalg::{Algebra, CartanType, Q64};
use crate::Error;

use Coef::{Omega, QNum, Q, Q2};

fn mul(xs: Vec<Coef>) -> Coef {
    Coef::mul(xs)
}

fn neg(x: Coef) -> Coef {
    Coef::neg(x)
}

fn one() -> Coef {
    Coef::one()
}

/// `[2]^{1/2}`, `[2]^{-1/2}`.
fn s(sign: i8) -> Coef {
    Coef::Sqrt2(sign)
}

fn inv(x: Coef) -> Coef {
    Coef::div(one(), x)
}

/// `[4] - q_2^{e}`.
fn four_minus(e: i64) -> Coef {
    Coef::Sum(vec![QNum(4), neg(Q2(e))])
}

fn entry(prefactor: Coef, terms: Vec<(Coef, &str)>, t: (i64, i64)) -> CatalogEntry {
    CatalogEntry {
        prefactor,
        terms: terms.into_iter().map(|(c, x)| (c, w(x))).collect(),
        t: vec![Q64::from(t.0), Q64::from(t.1)],
        t_left: false,
    }
}

fn lminus(a: usize, b: usize) -> CatalogEntry {
    let diag = |t1: i64, t2: i64| CatalogEntry::cartan(vec![Q64::from(t1), Q64::from(t2)]);
    let six_three = || Coef::qratio(&[6], &[3]);
    match (a, b) {
        (1, 1) => diag(-1, -2),
        (2, 2) => diag(-1, -1),
        (3, 3) => diag(0, -1),
        (4, 4) => diag(0, 0),
        (5, 5) => diag(0, 1),
        (6, 6) => diag(1, 1),
        (7, 7) => diag(1, 2),

        (2, 1) => entry(neg(Omega(2)), vec![(one(), "e2")], (-1, -2)),
        (3, 2) => entry(neg(Omega(1)), vec![(one(), "e1")], (-1, -1)),
        (4, 3) => entry(neg(mul(vec![Omega(2), s(1)])), vec![(one(), "e2")], (0, -1)),
        (5, 4) => entry(neg(mul(vec![Omega(2), s(1)])), vec![(one(), "e2")], (0, 0)),
        (6, 5) => entry(neg(Omega(1)), vec![(one(), "e1")], (0, 1)),
        (7, 6) => entry(neg(Omega(2)), vec![(one(), "e2")], (1, 1)),

        (3, 1) => entry(Omega(2), vec![(Q(1), "e1 e2"), (neg(one()), "e2 e1")], (-1, -2)),
        (4, 2) => entry(neg(mul(vec![Omega(2), s(1)])), vec![(one(), "e1 e2"), (neg(Q(1)), "e2 e1")], (-1, -1)),
        (5, 3) => entry(mul(vec![Omega(2), Omega(2), Q2(-1)]), vec![(one(), "e2 e2")], (0, -1)),
        (6, 4) => entry(mul(vec![Omega(2), s(1)]), vec![(Q(1), "e1 e2"), (neg(one()), "e2 e1")], (0, 0)),
        (7, 5) => entry(neg(Omega(2)), vec![(one(), "e1 e2"), (neg(Q(1)), "e2 e1")], (0, 1)),

        (4, 1) => entry(
            mul(vec![Omega(2), Q2(2), s(-1)]),
            vec![(one(), "e1 e2 e2"), (neg(six_three()), "e2 e1 e2"), (one(), "e2 e2 e1")],
            (-1, -2),
        ),
        (5, 2) => entry(
            neg(mul(vec![Omega(2), inv(QNum(2))])),
            vec![(one(), "e1 e2 e2"), (neg(mul(vec![Q2(2), QNum(2)])), "e2 e1 e2"), (Q2(4), "e2 e2 e1")],
            (-1, -1),
        ),
        (6, 3) => entry(
            neg(mul(vec![Omega(2), inv(QNum(2))])),
            vec![(Q2(4), "e1 e2 e2"), (neg(mul(vec![Q2(2), QNum(2)])), "e2 e1 e2"), (one(), "e2 e2 e1")],
            (0, -1),
        ),
        (7, 4) => entry(
            mul(vec![Omega(2), Q2(2), s(-1)]),
            vec![(one(), "e1 e2 e2"), (neg(six_three()), "e2 e1 e2"), (one(), "e2 e2 e1")],
            (0, 0),
        ),

        (5, 1) => entry(
            mul(vec![Omega(2), Q2(1), inv(QNum(2))]),
            vec![
                (one(), "e1 e2 e2 e2"),
                (neg(four_minus(-1)), "e2 e1 e2 e2"),
                (mul(vec![Q2(1), four_minus(1)]), "e2 e2 e1 e2"),
                (neg(Q2(1)), "e2 e2 e2 e1"),
            ],
            (-1, -2),
        ),
        (6, 2) => entry(
            neg(mul(vec![Omega(1), Omega(2), Q2(2), inv(QNum(6))])),
            vec![
                (one(), "e1 e1 e2 e2"),
                (QNum(3), "e2 e1 e1 e2"),
                (neg(Coef::qratio(&[6, 5], &[3, 2])), "e1 e2 e2 e1"),
                (one(), "e2 e2 e1 e1"),
            ],
            (-1, -1),
        ),
        (7, 3) => entry(
            neg(mul(vec![Omega(2), Q2(1), inv(QNum(2))])),
            vec![
                (Q2(1), "e1 e2 e2 e2"),
                (neg(mul(vec![Q2(1), four_minus(1)])), "e2 e1 e2 e2"),
                (four_minus(-1), "e2 e2 e1 e2"),
                (neg(one()), "e2 e2 e2 e1"),
            ],
            (0, -1),
        ),

        (6, 1) => entry(
            mul(vec![Omega(1), Q(1), inv(mul(vec![QNum(6), QNum(2)]))]),
            vec![
                (Q2(2), "e1 e1 e2 e2 e2"),
                (Q2(-2), "e2 e2 e2 e1 e1"),
                (mul(vec![Q2(1), four_minus(-1)]), "e2 e1 e1 e2 e2"),
                (mul(vec![Q2(-1), four_minus(1)]), "e2 e2 e1 e1 e2"),
                (neg(mul(vec![Q2(2), four_minus(1), six_three()])), "e1 e2 e2 e1 e2"),
                (neg(mul(vec![Q2(-2), four_minus(-1), six_three()])), "e2 e1 e2 e2 e1"),
                (Coef::qratio(&[6, 4], &[3, 2]), "e1 e2 e2 e2 e1"),
            ],
            (-1, -2),
        ),
        (7, 2) => entry(
            mul(vec![Omega(1), Q(1), inv(mul(vec![QNum(6), QNum(2)]))]),
            vec![
                (Q2(-2), "e1 e1 e2 e2 e2"),
                (Q2(2), "e2 e2 e2 e1 e1"),
                (mul(vec![Q2(-1), four_minus(1)]), "e2 e1 e1 e2 e2"),
                (mul(vec![Q2(1), four_minus(-1)]), "e2 e2 e1 e1 e2"),
                (neg(mul(vec![Q2(-2), four_minus(-1), six_three()])), "e1 e2 e2 e1 e2"),
                (neg(mul(vec![Q2(2), four_minus(1), six_three()])), "e2 e1 e2 e2 e1"),
                (Coef::qratio(&[6, 4], &[3, 2]), "e1 e2 e2 e2 e1"),
            ],
            (-1, -1),
        ),
        (7, 1) => {
            let c56 = || Coef::qratio(&[6, 5], &[3, 2]);
            entry(
                mul(vec![Omega(1), Omega(2), Q(1), inv(mul(vec![QNum(6), QNum(2)]))]),
                vec![
                    (Coef::qratio(&[6, 4, 4], &[3, 2]), "e2 e1 e2 e2 e1 e2"),
                    (neg(Coef::qratio(&[6], &[3, 2])), "e1 e2 e2 e2 e2 e1"),
                    (neg(Coef::Sum(vec![mul(vec![QNum(4), QNum(2)]), neg(one())])), "e2 e2 e1 e1 e2 e2"),
                    (one(), "e2 e2 e2 e2 e1 e1"),
                    (one(), "e1 e1 e2 e2 e2 e2"),
                    (neg(c56()), "e1 e2 e2 e1 e2 e2"),
                    (neg(c56()), "e2 e2 e1 e2 e2 e1"),
                ],
                (-1, -2),
            )
        }
        _ => CatalogEntry::zero(2),
    }
}

/// `(L^∓)^a_b` for `G_2` (1-based); `L⁺` entries come from the `L⁻` table through
/// [`CatalogEntry::transform`] applied to `(L⁻)^b_a`.
pub fn catalog_g2(alg: &Algebra, kind: LKind, a: usize, b: usize) -> Result<CatalogEntry, Error> {
    if alg.cartan_type() != CartanType::G2 {
        return Err(Error::Unsupported("G2 catalog requested for another algebra".into()));
    }
    if !(1..=7).contains(&a) || !(1..=7).contains(&b) {
        return Err(Error::IndexOutOfRange(format!("({a}, {b}) for the 7-dimensional representation")));
    }
    Ok(match kind {
        LKind::Minus => lminus(a, b),
        LKind::Plus => lminus(b, a).transform(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{NcExpr, Word};
    use crate::reps::Representation;

    #[test]
    fn twenty_eight_nonzero_entries() {
        let g = Algebra::g2();
        let mut count = 0;
        for a in 1..=7 {
            for b in 1..=7 {
                let e = catalog_g2(&g, LKind::Minus, a, b).unwrap();
                assert_eq!(!e.is_zero(), a >= b, "({a}, {b})");
                count += usize::from(!e.is_zero());
            }
        }
        assert_eq!(count, 28);
    }

    #[test]
    fn entries_have_the_weight_of_their_cell() {
        let g = Algebra::g2();
        let rep = Representation::minimal_g2();
        for a in 1..=7 {
            for b in 1..a {
                let e = catalog_g2(&g, LKind::Minus, a, b).unwrap();
                let diff = crate::rmatrix::positive_root_coords(&g, rep.weight(b - 1), rep.weight(a - 1)).unwrap();
                for (_, word) in &e.terms {
                    let wt = crate::ncalg::weight_of(&g, word).unwrap();
                    assert_eq!(wt, diff, "({a}, {b}) {word:?}");
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let g = Algebra::g2();
        let k = g.scalars();
        assert_eq!(catalog_g2(&g, LKind::Minus, 7, 7).unwrap().to_nc(&g).unwrap(), NcExpr::t_mono(&g, &[Q64::from(1), Q64::from(2)]).unwrap());
        let e53 = catalog_g2(&g, LKind::Minus, 5, 3).unwrap().to_nc(&g).unwrap();
        let w22: Word = w("e2 e2");
        let om2 = g.omega(1);
        let oracle = (&NcExpr::word(&g, w22) * &NcExpr::t(&g, 2, Q64::from(-1)).unwrap()).scale(&(&(&om2 * &om2) * &k.v_pow(-1)));
        assert_eq!(e53, oracle);
    }

    #[test]
    fn latex_form() {
        let g = Algebra::g2();
        let e41 = catalog_g2(&g, LKind::Minus, 4, 1).unwrap();
        assert_eq!(
            e41.to_latex(&g),
            "\\omega_2 q_2^{2} [2]^{-1/2} \\left\\{e_1 e_2^{2} - ([6]/[3]) e_2 e_1 e_2 + e_2^{2} e_1\\right\\} t_1^{-1} t_2^{-2}"
        );
        let p14 = catalog_g2(&g, LKind::Plus, 1, 4).unwrap();
        assert_eq!(
            p14.to_latex(&g),
            "-\\omega_2 q_2^{-2} [2]^{-1/2} t_1 t_2^{2} \\left\\{f_2^{2} f_1 - ([6]/[3]) f_2 f_1 f_2 + f_1 f_2^{2}\\right\\}"
        );
        assert_eq!(catalog_g2(&g, LKind::Minus, 4, 3).unwrap().to_latex(&g), "-\\omega_2 [2]^{1/2} e_2 t_2^{-1}");
        assert_eq!(catalog_g2(&g, LKind::Minus, 5, 3).unwrap().to_latex(&g), "\\omega_2^{2} q_2^{-1} e_2^{2} t_2^{-1}");
    }
}

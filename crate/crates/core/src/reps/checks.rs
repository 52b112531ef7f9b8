use num_traits::One;

use super::{Matrix, Representation};
use crate::ncalg::{antipode, coproduct, counit, serre_element, AntipodeDirection, GeneratorKind, NcExpr, Q64};
use crate::report::Report;
use crate::Error;

/// Residual text for a report entry, truncated for large matrices.
pub(crate) fn residual_detail(m: &Matrix) -> String {
    let mut out = format!("residual has {} nonzero entries", m.nnz());
    for (r, c, x) in m.triplets().take(6) {
        out.push_str(&format!("\n({}, {}) = {}", r + 1, c + 1, x));
    }
    out
}

fn record(report: &mut Report, name: String, residual: Result<Matrix, Error>) {
    match residual {
        Ok(m) if m.is_zero() => report.pass(name),
        Ok(m) => report.fail(name, residual_detail(&m)),
        Err(e) => report.fail(name, e.to_string()),
    }
}

/// Every defining relation as a matrix identity: commuting `t`s, `t`-conjugation of
/// `e`/`f`, the `[e_i, f_j]` commutator and both q-Serre families.
pub fn check_relations(rep: &Representation) -> Report {
    let alg = rep.algebra();
    let k = alg.scalars();
    let r = alg.rank();
    let mut report = Report::new(format!("relations in {}", rep.label()));
    let t = |i: usize, p: i64| NcExpr::t(alg, i + 1, Q64::from(p)).and_then(|x| rep.evaluate(&x));

    for i in 0..r {
        record(&mut report, format!("t{0} t{0}^-1 = 1", i + 1), (|| {
            Ok(t(i, 1)?.mul(&t(i, -1)?).sub(&Matrix::identity(rep.dim(), k)))
        })());
        for j in 0..r {
            if i < j {
                record(&mut report, format!("t{} t{} = t{1} t{0}", i + 1, j + 1), (|| {
                    Ok(t(i, 1)?.mul(&t(j, 1)?).sub(&t(j, 1)?.mul(&t(i, 1)?)))
                })());
            }
            let qa = alg.q_i_pow(i, alg.cartan(i, j));
            record(&mut report, format!("t{0} e{1} t{0}^-1 = q{0}^a{0}{1} e{1}", i + 1, j + 1), (|| {
                let lhs = t(i, 1)?.mul(rep.e_mat(j)).mul(&t(i, -1)?);
                Ok(lhs.sub(&rep.e_mat(j).scale(&qa)))
            })());
            let qa_inv = alg.q_i_pow(i, -alg.cartan(i, j));
            record(&mut report, format!("t{0} f{1} t{0}^-1 = q{0}^-a{0}{1} f{1}", i + 1, j + 1), (|| {
                let lhs = t(i, 1)?.mul(rep.f_mat(j)).mul(&t(i, -1)?);
                Ok(lhs.sub(&rep.f_mat(j).scale(&qa_inv)))
            })());
            record(&mut report, format!("[e{}, f{}]", i + 1, j + 1), (|| {
                let comm = rep.e_mat(i).mul(rep.f_mat(j)).sub(&rep.f_mat(j).mul(rep.e_mat(i)));
                if i != j {
                    return Ok(comm);
                }
                let rhs = t(i, 1)?.sub(&t(i, -1)?).scale(&alg.omega(i).inv()?);
                Ok(comm.sub(&rhs))
            })());
        }
    }
    for kind in [GeneratorKind::E, GeneratorKind::F] {
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let name = format!("Serre {:?} ({}, {})", kind, i + 1, j + 1).to_lowercase();
                record(&mut report, name, serre_element(alg, i + 1, j + 1, kind).and_then(|x| rep.evaluate(&x)));
            }
        }
    }
    report
}

/// `m(S ⊗ id)Δ(x) = m(id ⊗ S)Δ(x) = ε(x)·1` and the corresponding identities for `S⁻¹`
/// with the opposite coproduct, for every generator and every product of two of them.
pub fn check_hopf(rep: &Representation) -> Report {
    let alg = rep.algebra();
    let k = alg.scalars();
    let mut report = Report::new(format!("Hopf axioms in {}", rep.label()));
    let mut gens: Vec<(String, NcExpr)> = Vec::new();
    for i in 1..=alg.rank() {
        gens.push((format!("t{i}"), NcExpr::t(alg, i, Q64::one()).expect("t_i")));
        gens.push((format!("t{i}^-1"), NcExpr::t(alg, i, -Q64::one()).expect("t_i")));
        gens.push((format!("e{i}"), NcExpr::e(alg, i).expect("e_i")));
        gens.push((format!("f{i}"), NcExpr::f(alg, i).expect("f_i")));
    }
    let mut xs = gens.clone();
    for (na, a) in gens.iter().filter(|(n, _)| !n.starts_with('t')) {
        for (nb, b) in gens.iter().filter(|(n, _)| !n.starts_with('t')) {
            xs.push((format!("{na} {nb}"), a * b));
        }
    }
    let s = |x: &NcExpr| antipode(x, AntipodeDirection::Forward);
    let sinv = |x: &NcExpr| antipode(x, AntipodeDirection::Inverse);
    let id = |x: &NcExpr| x.clone();
    for (name, x) in &xs {
        let delta = coproduct(x);
        let eps = Matrix::identity(rep.dim(), k).scale(&counit(x));
        let cases: [(&str, bool, &dyn Fn(&NcExpr) -> NcExpr, &dyn Fn(&NcExpr) -> NcExpr); 4] = [
            ("m(S x id)D", false, &s, &id),
            ("m(id x S)D", false, &id, &s),
            ("m(S^-1 x id)D^op", true, &sinv, &id),
            ("m(id x S^-1)D^op", true, &id, &sinv),
        ];
        for (label, flip, f, g) in cases {
            let res = (|| -> Result<Matrix, Error> {
                let mut acc = Matrix::zeros(rep.dim(), rep.dim(), k);
                for (ms, c) in delta.terms() {
                    let (m1, m2) = if flip { (&ms[1], &ms[0]) } else { (&ms[0], &ms[1]) };
                    let x1 = NcExpr::term(alg, k.one(), m1.clone());
                    let x2 = NcExpr::term(alg, k.one(), m2.clone());
                    let p = rep.evaluate(&f(&x1))?.mul(&rep.evaluate(&g(&x2))?);
                    acc = acc.add(&p.scale(c));
                }
                Ok(acc.sub(&eps))
            })();
            record(&mut report, format!("{label} ({name})"), res);
        }
    }
    report
}

//! JSON and LaTeX forms of expressions.
//!
//! JSON: a list of `{"coeff": Scalar, "word": ["e1", …], "texp": ["p/q", …]}`.

use serde::{Deserialize, Serialize};

use super::algebra::{Algebra, CartanType, Q64};
use super::expr::{Letter, Monomial, NcExpr, TMono};
use super::hopf::TensorExpr;
use crate::scalar::{LaurentPoly, RatFunc, Scalar, ScalarWire};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcTermWire {
    pub coeff: ScalarWire,
    pub word: Vec<String>,
    pub texp: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermWire {
    pub coeff: ScalarWire,
    pub factors: Vec<MonomialWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialWire {
    pub word: Vec<String>,
    pub texp: Vec<String>,
}

fn monomial_to_wire(alg: &Algebra, m: &Monomial) -> MonomialWire {
    MonomialWire {
        word: m.word.iter().map(|l| l.name()).collect(),
        texp: (0..alg.rank()).map(|j| m.t.exponent(alg, j).to_string()).collect(),
    }
}

fn monomial_from_wire(alg: &Algebra, word: &[String], texp: &[String]) -> Result<Monomial, Error> {
    let word = word
        .iter()
        .map(|s| {
            let l = Letter::parse(s).ok_or_else(|| Error::Parse(format!("bad generator {s:?}")))?;
            if l.index() >= alg.rank() {
                return Err(Error::IndexOutOfRange(format!("generator {s} for rank {}", alg.rank())));
            }
            Ok(l)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let exps = if texp.is_empty() {
        vec![Q64::from(0); alg.rank()]
    } else {
        texp.iter()
            .map(|s| s.trim().parse::<Q64>().map_err(|_| Error::Parse(format!("bad exponent {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(Monomial { word, t: TMono::new(alg, &exps)? })
}

impl NcExpr {
    pub fn to_wire(&self) -> Vec<NcTermWire> {
        self.terms()
            .map(|(m, c)| {
                let w = monomial_to_wire(self.algebra(), m);
                NcTermWire { coeff: c.to_wire(), word: w.word, texp: w.texp }
            })
            .collect()
    }

    pub fn from_wire(alg: &Algebra, terms: &[NcTermWire]) -> Result<Self, Error> {
        let mut out = NcExpr::zero(alg);
        for t in terms {
            let m = monomial_from_wire(alg, &t.word, &t.texp)?;
            out.add_term(m, Scalar::from_wire(&t.coeff, alg.scalars())?);
        }
        Ok(out)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("expression wire form serializes")
    }

    pub fn from_json_str(alg: &Algebra, s: &str) -> Result<Self, Error> {
        let w: Vec<NcTermWire> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_wire(alg, &w)
    }

    /// LaTeX in the usual notation: `q`-powers for coefficients, `e_i`, `f_i`, `t_j^{r}`.
    pub fn to_latex(&self) -> String {
        let alg = self.algebra();
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (m, c)) in self.terms().enumerate() {
            let (neg, body) = coeff_latex(alg, c);
            let factors = monomial_latex(alg, m);
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (body.as_str(), factors.is_empty()) {
                ("1", true) => out.push('1'),
                ("1", false) => out.push_str(&factors),
                (b, true) => out.push_str(b),
                (b, false) => {
                    out.push_str(b);
                    out.push(' ');
                    out.push_str(&factors);
                }
            }
        }
        out
    }
}

impl TensorExpr {
    pub fn to_wire(&self) -> Vec<TensorTermWire> {
        self.terms()
            .map(|(ms, c)| TensorTermWire {
                coeff: c.to_wire(),
                factors: ms.iter().map(|m| monomial_to_wire(self.algebra(), m)).collect(),
            })
            .collect()
    }
}

/// `e_1 e_2^{2} t_1^{1/3}`; repeated letters are grouped.
pub(crate) fn monomial_latex(alg: &Algebra, m: &Monomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < m.word.len() {
        let l = m.word[i];
        let mut k = 1;
        while i + k < m.word.len() && m.word[i + k] == l {
            k += 1;
        }
        let base = match l {
            Letter::E(j) => format!("e_{}", j + 1),
            Letter::F(j) => format!("f_{}", j + 1),
        };
        parts.push(if k == 1 { base } else { format!("{base}^{{{k}}}") });
        i += k;
    }
    for j in 0..alg.rank() {
        let x = m.t.exponent(alg, j);
        if x != Q64::from(0) {
            parts.push(if x == Q64::from(1) { format!("t_{}", j + 1) } else { format!("t_{}^{{{x}}}", j + 1) });
        }
    }
    parts.join(" ")
}

/// Power of the deformation variable: `q^{k/L}` for `A_N`, `q_2^{k}` for `G_2`.
pub(crate) fn vpow_latex(alg: &Algebra, k: i64) -> String {
    let (base, x) = match alg.cartan_type() {
        CartanType::G2 => ("q_2", Q64::from(k)),
        CartanType::A(_) => ("q", Q64::new(k, alg.root_order())),
    };
    if x == Q64::from(1) {
        base.to_string()
    } else {
        format!("{base}^{{{x}}}")
    }
}

fn laurent_latex(alg: &Algebra, p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (e, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let neg = num_traits::Signed::is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag == num_traits::One::one();
        let num = if mag.is_integer() { mag.to_string() } else { format!("\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom()) };
        match (e, unit) {
            (0, _) => out.push_str(&num),
            (_, true) => out.push_str(&vpow_latex(alg, e)),
            (_, false) => {
                out.push_str(&num);
                out.push_str(&vpow_latex(alg, e));
            }
        }
    }
    out
}

fn ratfunc_latex(alg: &Algebra, r: &RatFunc) -> String {
    if r.den().is_one() {
        laurent_latex(alg, r.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", laurent_latex(alg, r.num()), laurent_latex(alg, r.den()))
    }
}

/// Coefficient as `(negative, magnitude)`; composite magnitudes are parenthesized.
pub(crate) fn coeff_latex(alg: &Algebra, c: &Scalar) -> (bool, String) {
    if let Some((x, k)) = c.as_monomial() {
        let neg = x < num_traits::Zero::zero();
        let mag = if neg { -x } else { x };
        let lone = LaurentPoly::from_terms([(k, mag)]);
        return (neg, laurent_latex(alg, &lone));
    }
    let a = c.rational_part();
    let b = c.sqrt_part();
    let s = "[2]^{1/2}";
    let body = match (a.is_zero(), b.is_zero()) {
        (_, true) => ratfunc_latex(alg, a),
        (true, false) => format!("\\left({}\\right) {s}", ratfunc_latex(alg, b)),
        (false, false) => format!("{} + \\left({}\\right) {s}", ratfunc_latex(alg, a), ratfunc_latex(alg, b)),
    };
    (false, format!("\\left({body}\\right)"))
}

//! Closed forms as symbolic entries: `prefactor · {Σ c_k w_k} · t` with `t` on the right
//! for `L⁻` and on the left for `L⁺`.

use super::coef::Coef;
use crate::ncalg::json_support::monomial_latex;
use crate::ncalg::{Algebra, Letter, Monomial, NcExpr, Q64, TMono, Word};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub prefactor: Coef,
    pub terms: Vec<(Coef, Word)>,
    /// Rational exponents of `t_1, …, t_r`.
    pub t: Vec<Q64>,
    pub t_left: bool,
}

impl CatalogEntry {
    pub fn zero(rank: usize) -> Self {
        CatalogEntry { prefactor: Coef::Int(0), terms: Vec::new(), t: vec![Q64::from(0); rank], t_left: false }
    }

    pub fn cartan(t: Vec<Q64>) -> Self {
        CatalogEntry { prefactor: Coef::one(), terms: vec![(Coef::one(), Vec::new())], t, t_left: false }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.prefactor == Coef::Int(0)
    }

    pub fn to_nc(&self, alg: &Algebra) -> Result<NcExpr, Error> {
        if self.is_zero() {
            return Ok(NcExpr::zero(alg));
        }
        let t = NcExpr::t_mono(alg, &self.t)?;
        let mut body = NcExpr::zero(alg);
        for (c, w) in &self.terms {
            body = &body + &NcExpr::word(alg, w.clone()).scale(&c.to_scalar(alg)?);
        }
        let body = body.scale(&self.prefactor.to_scalar(alg)?);
        Ok(if self.t_left { &t * &body } else { &body * &t })
    }

    /// `q_j -> q_j^{-1}`, `e_j <-> f_j`, `t -> t^{-1}`, every product reversed.
    pub fn transform(&self) -> CatalogEntry {
        CatalogEntry {
            prefactor: self.prefactor.bar(),
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.bar(), w.iter().rev().map(|l| l.swap_kind()).collect()))
                .collect(),
            t: self.t.iter().map(|x| -x).collect(),
            t_left: !self.t_left,
        }
    }

    pub fn to_latex(&self, alg: &Algebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let tm = TMono::new(alg, &self.t).expect("catalog exponents are representable");
        let t = monomial_latex(alg, &Monomial { word: Vec::new(), t: tm });
        let mut body = String::new();
        for (n, (c, w)) in self.terms.iter().enumerate() {
            let (neg, m) = c.split_sign();
            let word = monomial_latex(alg, &Monomial { word: w.clone(), t: TMono::identity(alg.rank()) });
            let coef = match (&m, matches!(m, Coef::Sum(_))) {
                (m, _) if m.is_one() => String::new(),
                (m, true) => format!("({}) ", m.to_latex(alg)),
                (m, false) => format!("{} ", m.to_latex(alg)),
            };
            let sign = match (n, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            body.push_str(&format!("{sign}{coef}{word}"));
        }
        let single = self.terms.len() == 1 && self.terms[0].0.split_sign().1.is_one();
        let (neg, pre) = self.prefactor.split_sign();
        let mut parts: Vec<String> = Vec::new();
        if !pre.is_one() {
            parts.push(pre.to_latex(alg));
        }
        let t_part = (!t.is_empty()).then_some(t);
        if self.t_left {
            parts.extend(t_part.clone());
        }
        if !body.is_empty() {
            if single {
                parts.push(body.trim_start_matches('-').to_string());
            } else {
                parts.push(format!("\\left\\{{{body}\\right\\}}"));
            }
        }
        if !self.t_left {
            parts.extend(t_part);
        }
        let body_neg = single && body.starts_with('-');
        let mut out = String::new();
        if neg ^ body_neg {
            out.push('-');
        }
        out.push_str(&if parts.is_empty() { "1".to_string() } else { parts.join(" ") });
        out
    }
}

/// Parse `"e1 e2 e2"` into a word; used by the transcribed tables.
pub(crate) fn w(s: &str) -> Word {
    s.split_whitespace().map(|x| Letter::parse(x).expect("letter")).collect()
}

//! Symbolic coefficients in the notation of the closed forms: `q`, `q_2`, `ω_j`, `[m]`,
//! `[2]^{±1/2}`, integers, and their sums, products and quotients.

use crate::ncalg::{Algebra, CartanType};
use crate::scalar::Scalar;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coef {
    Int(i64),
    /// `q^k` (`q = q_1`).
    Q(i64),
    /// `q_2^k`.
    Q2(i64),
    /// `ω_j`, 1-based; `ω` for `A_N`.
    Omega(usize),
    /// `[m]` in base `q_2` (`G_2`) or `q` (`A_N`).
    QNum(i64),
    /// `[2]^{±1/2}`.
    Sqrt2(i8),
    Neg(Box<Coef>),
    Mul(Vec<Coef>),
    Div(Box<Coef>, Box<Coef>),
    Sum(Vec<Coef>),
}

impl Coef {
    pub fn one() -> Coef {
        Coef::Int(1)
    }

    pub fn mul(items: Vec<Coef>) -> Coef {
        Coef::Mul(items)
    }

    pub fn div(a: Coef, b: Coef) -> Coef {
        Coef::Div(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Coef) -> Coef {
        Coef::Neg(Box::new(a))
    }

    /// `[a]/[b]`-style quotient of products of q-numbers.
    pub fn qratio(num: &[i64], den: &[i64]) -> Coef {
        let prod = |xs: &[i64]| match xs.len() {
            1 => Coef::QNum(xs[0]),
            _ => Coef::Mul(xs.iter().map(|&m| Coef::QNum(m)).collect()),
        };
        Coef::div(prod(num), prod(den))
    }

    pub fn to_scalar(&self, alg: &Algebra) -> Result<Scalar, Error> {
        let k = alg.scalars();
        let base = match alg.cartan_type() {
            CartanType::G2 => 1,
            CartanType::A(_) => 0,
        };
        Ok(match self {
            Coef::Int(n) => k.from_int(*n),
            Coef::Q(e) => alg.q_i_pow(0, *e),
            Coef::Q2(e) => {
                if alg.cartan_type() != CartanType::G2 {
                    return Err(Error::Unsupported("q_2 outside G2".into()));
                }
                alg.q_i_pow(1, *e)
            }
            Coef::Omega(j) => {
                if *j == 0 || *j > alg.rank() {
                    return Err(Error::IndexOutOfRange(format!("omega_{j}")));
                }
                alg.omega(j - 1)
            }
            Coef::QNum(m) => alg.qnum_i(base, *m),
            Coef::Sqrt2(sign) => {
                let s = k.sqrt()?;
                if *sign > 0 {
                    s
                } else {
                    s.inv()?
                }
            }
            Coef::Neg(a) => -a.to_scalar(alg)?,
            Coef::Mul(xs) => {
                let mut acc = k.one();
                for x in xs {
                    acc = &acc * &x.to_scalar(alg)?;
                }
                acc
            }
            Coef::Div(a, b) => a.to_scalar(alg)?.try_div(&b.to_scalar(alg)?)?,
            Coef::Sum(xs) => {
                let mut acc = k.zero();
                for x in xs {
                    acc = &acc + &x.to_scalar(alg)?;
                }
                acc
            }
        })
    }

    /// `q_j -> q_j^{-1}`: `q`-powers invert, `ω_j -> -ω_j`, `[m]` and `[2]^{1/2}` fixed.
    pub fn bar(&self) -> Coef {
        match self {
            Coef::Int(_) | Coef::QNum(_) | Coef::Sqrt2(_) => self.clone(),
            Coef::Q(e) => Coef::Q(-e),
            Coef::Q2(e) => Coef::Q2(-e),
            Coef::Omega(j) => Coef::neg(Coef::Omega(*j)),
            Coef::Neg(a) => Coef::neg(a.bar()),
            Coef::Mul(xs) => Coef::Mul(xs.iter().map(Coef::bar).collect()),
            Coef::Div(a, b) => Coef::div(a.bar(), b.bar()),
            Coef::Sum(xs) => Coef::Sum(xs.iter().map(Coef::bar).collect()),
        }
    }

    /// Pull out signs: `(negative, magnitude)` with no outer `Neg` and no `Neg` factors.
    pub fn split_sign(&self) -> (bool, Coef) {
        match self {
            Coef::Neg(a) => {
                let (n, m) = a.split_sign();
                (!n, m)
            }
            Coef::Int(n) if *n < 0 => (true, Coef::Int(-n)),
            Coef::Mul(xs) => {
                let mut neg = false;
                let mut out = Vec::new();
                for x in xs {
                    let (n, m) = x.split_sign();
                    neg ^= n;
                    match m {
                        Coef::Int(1) => {}
                        Coef::Mul(ys) => out.extend(ys),
                        other => out.push(other),
                    }
                }
                (neg, match out.len() {
                    0 => Coef::Int(1),
                    1 => out.pop().expect("one factor"),
                    _ => Coef::Mul(out),
                })
            }
            Coef::Div(a, b) => {
                let (na, ma) = a.split_sign();
                let (nb, mb) = b.split_sign();
                (na ^ nb, Coef::div(ma, mb))
            }
            _ => (false, self.clone()),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coef::Int(1)) || matches!(self, Coef::Mul(xs) if xs.is_empty())
    }

    fn is_atom(&self) -> bool {
        !matches!(self, Coef::Sum(_) | Coef::Neg(_))
    }

    /// LaTeX in the notation of the closed forms.
    pub fn to_latex(&self, alg: &Algebra) -> String {
        let g2 = alg.cartan_type() == CartanType::G2;
        match self {
            Coef::Int(n) => n.to_string(),
            Coef::Q(1) => "q".into(),
            Coef::Q(e) => format!("q^{{{e}}}"),
            Coef::Q2(1) => "q_2".into(),
            Coef::Q2(e) => format!("q_2^{{{e}}}"),
            Coef::Omega(j) => {
                if g2 {
                    format!("\\omega_{j}")
                } else {
                    "\\omega".into()
                }
            }
            Coef::QNum(m) => format!("[{m}]"),
            Coef::Sqrt2(s) => format!("[2]^{{{}1/2}}", if *s < 0 { "-" } else { "" }),
            Coef::Neg(a) => {
                if a.is_atom() {
                    format!("-{}", a.to_latex(alg))
                } else {
                    format!("-({})", a.to_latex(alg))
                }
            }
            Coef::Mul(xs) => {
                let mut parts: Vec<(String, bool)> = Vec::new();
                let mut i = 0;
                while i < xs.len() {
                    let mut k = 1;
                    while i + k < xs.len() && xs[i + k] == xs[i] {
                        k += 1;
                    }
                    let x = &xs[i];
                    let base = if x.is_atom() { x.to_latex(alg) } else { format!("({})", x.to_latex(alg)) };
                    let body = if k == 1 { base } else { format!("{base}^{{{k}}}") };
                    parts.push((body, matches!(x, Coef::QNum(_))));
                    i += k;
                }
                let mut out = String::new();
                for (n, (p, qn)) in parts.iter().enumerate() {
                    if n > 0 && !(*qn && parts[n - 1].1) {
                        out.push(' ');
                    }
                    out.push_str(p);
                }
                out
            }
            Coef::Div(a, b) => {
                if a.is_one() {
                    let inner = b.to_latex(alg);
                    match **b {
                        Coef::QNum(_) | Coef::Sqrt2(_) | Coef::Omega(_) => format!("{inner}^{{-1}}"),
                        _ => format!("({inner})^{{-1}}"),
                    }
                } else {
                    format!("({}/{})", a.to_latex(alg), b.to_latex(alg))
                }
            }
            Coef::Sum(xs) => {
                let mut out = String::new();
                for (i, x) in xs.iter().enumerate() {
                    let (neg, m) = x.split_sign();
                    let body = if m.is_atom() { m.to_latex(alg) } else { format!("({})", m.to_latex(alg)) };
                    match (i, neg) {
                        (0, false) => out.push_str(&body),
                        (0, true) => out.push_str(&format!("-{body}")),
                        (_, false) => out.push_str(&format!(" + {body}")),
                        (_, true) => out.push_str(&format!(" - {body}")),
                    }
                }
                out
            }
        }
    }
}

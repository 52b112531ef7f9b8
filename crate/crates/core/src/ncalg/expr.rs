//! Noncommutative expressions: sums of `coeff · word · t-monomial`.
//!
//! Words in the `e_i`, `f_i` are kept free (no Serre reduction); only the
//! `t`-commutation rules `t_i e_j = q_i^{a_ij} e_j t_i`, `t_i f_j = q_i^{-a_ij} f_j t_i`
//! are applied, and every term is stored with its `t`-monomial on the right.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::algebra::{Algebra, Q64};
use crate::scalar::Scalar;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `e_{i+1}` (0-based index).
    E(u8),
    /// `f_{i+1}` (0-based index).
    F(u8),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::E(i) | Letter::F(i) => i as usize,
        }
    }

    pub fn is_e(self) -> bool {
        matches!(self, Letter::E(_))
    }

    /// `e_i <-> f_i`.
    pub fn swap_kind(self) -> Letter {
        match self {
            Letter::E(i) => Letter::F(i),
            Letter::F(i) => Letter::E(i),
        }
    }

    pub fn name(self) -> String {
        match self {
            Letter::E(i) => format!("e{}", i + 1),
            Letter::F(i) => format!("f{}", i + 1),
        }
    }

    pub fn parse(s: &str) -> Option<Letter> {
        let (kind, idx) = s.split_at(1);
        let i: u8 = idx.parse().ok()?;
        if i == 0 {
            return None;
        }
        match kind {
            "e" => Some(Letter::E(i - 1)),
            "f" => Some(Letter::F(i - 1)),
            _ => None,
        }
    }
}

pub type Word = Vec<Letter>;

/// `∏_j t_j^{k_j / L}`, stored as the integer numerators `k_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TMono(Vec<i64>);

impl TMono {
    pub fn identity(rank: usize) -> Self {
        TMono(vec![0; rank])
    }

    /// Build from rational exponents, checking that the monomial commutes past every
    /// generator with a representable scalar, i.e. `k_j · L d_j · a_jl ≡ 0 (mod L)`.
    pub fn new(alg: &Algebra, exps: &[Q64]) -> Result<Self, Error> {
        if exps.len() != alg.rank() {
            return Err(Error::IndexOutOfRange(format!("t-monomial of length {} for rank {}", exps.len(), alg.rank())));
        }
        let l = alg.root_order();
        let mut ks = Vec::with_capacity(exps.len());
        for &x in exps {
            let k = x * Q64::from(l);
            if !k.is_integer() {
                return Err(Error::NotRepresentable(format!("t-exponent {x} with L = {l}")));
            }
            ks.push(k.to_integer());
        }
        Self::from_numerators(alg, ks)
    }

    pub fn from_numerators(alg: &Algebra, ks: Vec<i64>) -> Result<Self, Error> {
        let l = alg.root_order();
        for m in 0..alg.rank() {
            let x: i64 = ks.iter().enumerate().map(|(j, &k)| k * alg.scale(j) * alg.cartan(j, m)).sum();
            if x % l != 0 {
                return Err(Error::NotRepresentable(format!(
                    "t-monomial {:?}/{l} does not commute representably past generator {}",
                    ks,
                    m + 1
                )));
            }
        }
        Ok(TMono(ks))
    }

    pub fn numerators(&self) -> &[i64] {
        &self.0
    }

    pub fn exponent(&self, alg: &Algebra, j: usize) -> Q64 {
        Q64::new(self.0[j], alg.root_order())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn mul(&self, other: &TMono) -> TMono {
        TMono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> TMono {
        TMono(self.0.iter().map(|a| -a).collect())
    }

    /// `v`-exponent `x` with `t^λ · letter = v^x · letter · t^λ`.
    pub fn commute_exp(&self, alg: &Algebra, letter: Letter) -> i64 {
        let j = letter.index();
        let num: i64 = self.0.iter().enumerate().map(|(i, &k)| k * alg.scale(i) * alg.cartan(i, j)).sum();
        let x = num / alg.root_order();
        if letter.is_e() {
            x
        } else {
            -x
        }
    }
}

/// `word · t-monomial`, the basis element of the expression space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub word: Word,
    pub t: TMono,
}

impl Monomial {
    pub fn unit(rank: usize) -> Self {
        Monomial { word: Vec::new(), t: TMono::identity(rank) }
    }

    /// `(w1 t1)(w2 t2) = v^x (w1 w2)(t1 t2)`; returns `(x, w1 w2 t1 t2)`.
    pub fn mul(&self, other: &Monomial, alg: &Algebra) -> (i64, Monomial) {
        let x: i64 = other.word.iter().map(|&l| self.t.commute_exp(alg, l)).sum();
        let mut word = Vec::with_capacity(self.word.len() + other.word.len());
        word.extend_from_slice(&self.word);
        word.extend_from_slice(&other.word);
        (x, Monomial { word, t: self.t.mul(&other.t) })
    }
}

/// Finite sum of `Scalar · Monomial` in canonical order (by word, then `t`-exponents).
#[derive(Clone, PartialEq, Eq)]
pub struct NcExpr {
    alg: Algebra,
    terms: BTreeMap<Monomial, Scalar>,
}

impl NcExpr {
    pub fn zero(alg: &Algebra) -> Self {
        NcExpr { alg: alg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::scalar(alg, alg.scalars().one())
    }

    pub fn scalar(alg: &Algebra, c: Scalar) -> Self {
        Self::term(alg, c, Monomial::unit(alg.rank()))
    }

    pub fn term(alg: &Algebra, c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        NcExpr { alg: alg.clone(), terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(alg: &Algebra, it: I) -> Self {
        let mut e = Self::zero(alg);
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    fn letter(alg: &Algebra, l: Letter) -> Result<Self, Error> {
        if l.index() >= alg.rank() {
            return Err(Error::IndexOutOfRange(format!("generator {} for rank {}", l.name(), alg.rank())));
        }
        Ok(Self::word(alg, vec![l]))
    }

    /// `e_i`, 1-based.
    pub fn e(alg: &Algebra, i: usize) -> Result<Self, Error> {
        Self::letter(alg, Letter::E(checked_index(i)?))
    }

    /// `f_i`, 1-based.
    pub fn f(alg: &Algebra, i: usize) -> Result<Self, Error> {
        Self::letter(alg, Letter::F(checked_index(i)?))
    }

    /// `t_i^r`, 1-based.
    pub fn t(alg: &Algebra, i: usize, r: Q64) -> Result<Self, Error> {
        if i == 0 || i > alg.rank() {
            return Err(Error::IndexOutOfRange(format!("t_{i} for rank {}", alg.rank())));
        }
        let mut exps = vec![Q64::zero(); alg.rank()];
        exps[i - 1] = r;
        Self::t_mono(alg, &exps)
    }

    pub fn t_mono(alg: &Algebra, exps: &[Q64]) -> Result<Self, Error> {
        let t = TMono::new(alg, exps)?;
        Ok(Self::term(alg, alg.scalars().one(), Monomial { word: Vec::new(), t }))
    }

    pub fn word(alg: &Algebra, word: Word) -> Self {
        Self::term(alg, alg.scalars().one(), Monomial { word, t: TMono::identity(alg.rank()) })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                let y = &*x + &c;
                if y.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *x = y;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.alg != other.alg {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, Error> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let mut out = Self::zero(&self.alg);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let (x, m) = m1.mul(m2, &self.alg);
                out.add_term(m, (c1 * c2).shift(x));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.alg);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(&self.alg), |acc, _| &acc * self)
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs<F: Fn(&Scalar) -> Scalar>(&self, f: F) -> Self {
        Self::from_terms(&self.alg, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Terms whose word is empty (the Cartan part).
    pub fn is_cartan(&self) -> bool {
        self.terms.keys().all(|m| m.word.is_empty())
    }

    /// Highest `word` length present.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.word.len()).max().unwrap_or(0)
    }

}

fn checked_index(i: usize) -> Result<u8, Error> {
    if i == 0 || i > u8::MAX as usize {
        return Err(Error::IndexOutOfRange(format!("generator index {i}")));
    }
    Ok((i - 1) as u8)
}

macro_rules! forward_expr_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&NcExpr> for &NcExpr {
            type Output = NcExpr;
            /// Panics if the operands belong to different algebras.
            fn $m(self, rhs: &NcExpr) -> NcExpr {
                self.$checked(rhs).expect("algebra mismatch")
            }
        }
        impl $tr<NcExpr> for NcExpr {
            type Output = NcExpr;
            fn $m(self, rhs: NcExpr) -> NcExpr {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_expr_binop!(Add, add, try_add);
forward_expr_binop!(Sub, sub, try_sub);
forward_expr_binop!(Mul, mul, try_mul);

impl Neg for &NcExpr {
    type Output = NcExpr;
    fn neg(self) -> NcExpr {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for NcExpr {
    type Output = NcExpr;
    fn neg(self) -> NcExpr {
        -&self
    }
}

impl fmt::Debug for NcExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NcExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for l in &m.word {
                write!(f, " {}", l.name())?;
            }
            for (j, &k) in m.t.numerators().iter().enumerate() {
                if k != 0 {
                    write!(f, " t{}^({})", j + 1, Q64::new(k, self.alg.root_order()))?;
                }
            }
        }
        Ok(())
    }
}

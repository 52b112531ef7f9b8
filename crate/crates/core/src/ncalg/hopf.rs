//! Coproduct, counit and antipode:
//!
//! ```text
//! Δ(t) = t ⊗ t        Δ(e) = e ⊗ 1 + t ⊗ e      Δ(f) = f ⊗ t⁻¹ + 1 ⊗ f
//! ε(t) = 1            ε(e) = ε(f) = 0
//! S(t) = t⁻¹          S(e) = -t⁻¹ e             S(f) = -f t
//! S⁻¹(t) = t⁻¹        S⁻¹(e) = -e t⁻¹           S⁻¹(f) = -t f
//! ```

use std::collections::BTreeMap;

use num_traits::One;

use super::algebra::{Algebra, Q64};
use super::expr::{Letter, Monomial, NcExpr, TMono};
use crate::scalar::Scalar;
use crate::Error;

/// Element of `U^{⊗k}`: a sum of `Scalar · (m_1 ⊗ … ⊗ m_k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorExpr {
    alg: Algebra,
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

impl TensorExpr {
    pub fn zero(alg: &Algebra, arity: usize) -> Self {
        TensorExpr { alg: alg.clone(), arity, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(alg: &Algebra, arity: usize) -> Self {
        let mut t = Self::zero(alg, arity);
        t.add_term(vec![Monomial::unit(alg.rank()); arity], alg.scalars().one());
        t
    }

    /// `x_1 ⊗ … ⊗ x_k`, expanded multilinearly.
    pub fn pure(factors: &[&NcExpr]) -> Result<Self, Error> {
        let alg = factors.first().ok_or(Error::IndexOutOfRange("empty tensor".into()))?.algebra().clone();
        let mut acc = vec![(Vec::new(), alg.scalars().one())];
        for x in factors {
            if x.algebra() != &alg {
                return Err(Error::ContextMismatch);
            }
            let mut next = Vec::new();
            for (ms, c) in &acc {
                for (m, d) in x.terms() {
                    let mut ms2: Vec<Monomial> = ms.clone();
                    ms2.push(m.clone());
                    next.push((ms2, c * d));
                }
            }
            acc = next;
        }
        let mut t = Self::zero(&alg, factors.len());
        for (ms, c) in acc {
            t.add_term(ms, c);
        }
        Ok(t)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, ms: Vec<Monomial>, c: Scalar) {
        debug_assert_eq!(ms.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&ms) {
            Some(x) => {
                let y = &*x + &c;
                if y.is_zero() {
                    self.terms.remove(&ms);
                } else {
                    *x = y;
                }
            }
            None => {
                self.terms.insert(ms, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        let mut out = self.clone();
        for (ms, c) in &other.terms {
            out.add_term(ms.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-self.alg.scalars().one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.alg, self.arity);
        for (ms, x) in &self.terms {
            out.add_term(ms.clone(), x * c);
        }
        out
    }

    /// Slotwise product `(a_1 ⊗ …)(b_1 ⊗ …) = a_1 b_1 ⊗ …`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        let mut out = Self::zero(&self.alg, self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut shift = 0;
                let ms = ma
                    .iter()
                    .zip(mb)
                    .map(|(x, y)| {
                        let (s, m) = x.mul(y, &self.alg);
                        shift += s;
                        m
                    })
                    .collect();
                out.add_term(ms, (ca * cb).shift(shift));
            }
        }
        out
    }

    /// Replace slot `k` by the image of a linear map `U -> U^{⊗j}` given on monomials.
    pub fn expand_slot<F>(&self, k: usize, f: F) -> Self
    where
        F: Fn(&Monomial) -> TensorExpr,
    {
        let mut out: Option<TensorExpr> = None;
        for (ms, c) in &self.terms {
            let img = f(&ms[k]);
            let arity = self.arity - 1 + img.arity;
            let acc = out.get_or_insert_with(|| TensorExpr::zero(&self.alg, arity));
            for (ims, ic) in &img.terms {
                let mut new_ms = Vec::with_capacity(arity);
                new_ms.extend_from_slice(&ms[..k]);
                new_ms.extend(ims.iter().cloned());
                new_ms.extend_from_slice(&ms[k + 1..]);
                acc.add_term(new_ms, c * ic);
            }
        }
        out.unwrap_or_else(|| TensorExpr::zero(&self.alg, self.arity + 1))
    }

    /// `(id ⊗ … ⊗ Δ ⊗ … ⊗ id)` at slot `k`.
    pub fn coproduct_at(&self, k: usize) -> Self {
        self.expand_slot(k, |m| coproduct_monomial(&self.alg, m))
    }

    /// `(id ⊗ … ⊗ ε ⊗ … ⊗ id)` at slot `k`.
    pub fn counit_at(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.alg, self.arity - 1);
        for (ms, c) in &self.terms {
            if ms[k].word.is_empty() {
                let mut rest = ms.clone();
                rest.remove(k);
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Apply a map to the expression in slot `k`.
    pub fn map_slot<F: Fn(&NcExpr) -> NcExpr>(&self, k: usize, f: F) -> Self {
        let mut out = Self::zero(&self.alg, self.arity);
        for (ms, c) in &self.terms {
            let img = f(&NcExpr::term(&self.alg, self.alg.scalars().one(), ms[k].clone()));
            for (m, d) in img.terms() {
                let mut new_ms = ms.clone();
                new_ms[k] = m.clone();
                out.add_term(new_ms, c * d);
            }
        }
        out
    }

    /// Reverse slot order (`P ∘ ·` for arity two).
    pub fn flip(&self) -> Self {
        let mut out = Self::zero(&self.alg, self.arity);
        for (ms, c) in &self.terms {
            let mut r = ms.clone();
            r.reverse();
            out.add_term(r, c.clone());
        }
        out
    }

    /// Multiply the slots together in order: `m(a ⊗ b ⊗ …) = a b …`.
    pub fn multiply_out(&self) -> NcExpr {
        let mut out = NcExpr::zero(&self.alg);
        for (ms, c) in &self.terms {
            let mut shift = 0;
            let mut acc = Monomial::unit(self.alg.rank());
            for m in ms {
                let (s, p) = acc.mul(m, &self.alg);
                shift += s;
                acc = p;
            }
            out.add_term(acc, c.shift(shift));
        }
        out
    }
}

fn letter_coproduct(alg: &Algebra, l: Letter) -> TensorExpr {
    let rank = alg.rank();
    let one = alg.scalars().one();
    let unit = Monomial::unit(rank);
    let gen = Monomial { word: vec![l], t: TMono::identity(rank) };
    let mut tj = vec![0; rank];
    let mut out = TensorExpr::zero(alg, 2);
    match l {
        Letter::E(_) => {
            tj[l.index()] = alg.root_order();
            let t = Monomial { word: Vec::new(), t: TMono::from_numerators(alg, tj).expect("integral t") };
            out.add_term(vec![gen.clone(), unit.clone()], one.clone());
            out.add_term(vec![t, gen], one);
        }
        Letter::F(_) => {
            tj[l.index()] = -alg.root_order();
            let tinv = Monomial { word: Vec::new(), t: TMono::from_numerators(alg, tj).expect("integral t") };
            out.add_term(vec![gen.clone(), tinv], one.clone());
            out.add_term(vec![unit, gen], one);
        }
    }
    out
}

fn coproduct_monomial(alg: &Algebra, m: &Monomial) -> TensorExpr {
    let mut acc = TensorExpr::one(alg, 2);
    for &l in &m.word {
        acc = acc.mul(&letter_coproduct(alg, l));
    }
    let tt = Monomial { word: Vec::new(), t: m.t.clone() };
    let mut group_like = TensorExpr::zero(alg, 2);
    group_like.add_term(vec![tt.clone(), tt], alg.scalars().one());
    acc.mul(&group_like)
}

/// `Δ(x)`, extended multiplicatively from the generators.
pub fn coproduct(x: &NcExpr) -> TensorExpr {
    let alg = x.algebra();
    let mut out = TensorExpr::zero(alg, 2);
    for (m, c) in x.terms() {
        for (ms, d) in coproduct_monomial(alg, m).terms() {
            out.add_term(ms.clone(), c * d);
        }
    }
    out
}

/// `ε(x)`: the sum of coefficients of terms with empty word.
pub fn counit(x: &NcExpr) -> Scalar {
    x.terms()
        .filter(|(m, _)| m.word.is_empty())
        .fold(x.algebra().scalars().zero(), |acc, (_, c)| &acc + c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodeDirection {
    Forward,
    Inverse,
}

fn letter_antipode(alg: &Algebra, l: Letter, dir: AntipodeDirection) -> NcExpr {
    let i = l.index() + 1;
    let word = NcExpr::word(alg, vec![l]);
    let t_plus = NcExpr::t(alg, i, Q64::one()).expect("integral t");
    let t_minus = NcExpr::t(alg, i, -Q64::one()).expect("integral t");
    let prod = match (l, dir) {
        (Letter::E(_), AntipodeDirection::Forward) => &t_minus * &word,
        (Letter::E(_), AntipodeDirection::Inverse) => &word * &t_minus,
        (Letter::F(_), AntipodeDirection::Forward) => &word * &t_plus,
        (Letter::F(_), AntipodeDirection::Inverse) => &t_plus * &word,
    };
    -prod
}

/// `S(x)` or `S⁻¹(x)`; both are algebra anti-homomorphisms with `t ↦ t⁻¹`.
pub fn antipode(x: &NcExpr, dir: AntipodeDirection) -> NcExpr {
    let alg = x.algebra();
    let mut out = NcExpr::zero(alg);
    for (m, c) in x.terms() {
        let tinv = NcExpr::term(alg, alg.scalars().one(), Monomial { word: Vec::new(), t: m.t.inverse() });
        let img = m.word.iter().rev().fold(tinv, |acc, &l| &acc * &letter_antipode(alg, l, dir));
        out = &out + &img.scale(c);
    }
    out
}

/// `Σ_j` (count of `e_j` or `f_j`) `· r_j` for a pure-e or pure-f word.
pub fn weight_of(alg: &Algebra, word: &[Letter]) -> Result<Vec<i64>, Error> {
    let mut beta = vec![0; alg.rank()];
    if let Some(first) = word.first() {
        if word.iter().any(|l| l.is_e() != first.is_e()) {
            return Err(Error::MixedWord);
        }
    }
    for l in word {
        if l.index() >= alg.rank() {
            return Err(Error::IndexOutOfRange(l.name()));
        }
        beta[l.index()] += 1;
    }
    Ok(beta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    E,
    F,
}

impl GeneratorKind {
    pub fn letter(self, i: usize) -> Letter {
        match self {
            GeneratorKind::E => Letter::E(i as u8),
            GeneratorKind::F => Letter::F(i as u8),
        }
    }
}

/// The q-Serre element `Σ_n (-1)^n [1-a_ij choose n]_{q_i} x_i^{1-a_ij-n} x_j x_i^n`
/// (1-based `i != j`).
pub fn serre_element(alg: &Algebra, i: usize, j: usize, kind: GeneratorKind) -> Result<NcExpr, Error> {
    if i == j {
        return Err(Error::IndexOutOfRange("Serre element needs i != j".into()));
    }
    if i == 0 || j == 0 || i > alg.rank() || j > alg.rank() {
        return Err(Error::IndexOutOfRange(format!("Serre element ({i}, {j})")));
    }
    let (i0, j0) = (i - 1, j - 1);
    let n_max = 1 - alg.cartan(i0, j0);
    let xi = kind.letter(i0);
    let xj = kind.letter(j0);
    let mut out = NcExpr::zero(alg);
    for n in 0..=n_max {
        let c = alg.scalars().qbinom(n_max, n, alg.d(i0))?;
        let c = if n % 2 == 1 { -c } else { c };
        let mut word = vec![xi; (n_max - n) as usize];
        word.push(xj);
        word.extend(std::iter::repeat_n(xi, n as usize));
        out = &out + &NcExpr::word(alg, word).scale(&c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(alg: &Algebra, s: &str) -> NcExpr {
        NcExpr::word(alg, s.split_whitespace().map(|x| Letter::parse(x).unwrap()).collect())
    }

    #[test]
    fn coproduct_of_e1() {
        let a = Algebra::a(1).unwrap();
        let e = NcExpr::e(&a, 1).unwrap();
        let t = NcExpr::t(&a, 1, Q64::one()).unwrap();
        let one = NcExpr::one(&a);
        let expect = TensorExpr::pure(&[&e, &one]).unwrap().add(&TensorExpr::pure(&[&t, &e]).unwrap());
        assert_eq!(coproduct(&e), expect);
    }

    #[test]
    fn coproduct_of_half_power_is_group_like() {
        let a = Algebra::a(1).unwrap();
        let t = NcExpr::t(&a, 1, Q64::new(1, 2)).unwrap();
        assert_eq!(coproduct(&t), TensorExpr::pure(&[&t, &t]).unwrap());
    }

    #[test]
    fn coproduct_of_e1e2() {
        // Δ(e1 e2) = e1e2⊗1 + e1 t2⊗e2 + t1 e2⊗e1 + t1 t2⊗e1e2, oracle: product of the
        // generator coproducts multiplied out slotwise by hand.
        let a = Algebra::a(2).unwrap();
        let e1 = NcExpr::e(&a, 1).unwrap();
        let e2 = NcExpr::e(&a, 2).unwrap();
        let t1 = NcExpr::t(&a, 1, Q64::one()).unwrap();
        let t2 = NcExpr::t(&a, 2, Q64::one()).unwrap();
        let one = NcExpr::one(&a);
        let e1e2 = &e1 * &e2;
        let expect = TensorExpr::pure(&[&e1e2, &one])
            .unwrap()
            .add(&TensorExpr::pure(&[&(&e1 * &t2), &e2]).unwrap())
            .add(&TensorExpr::pure(&[&(&t1 * &e2), &e1]).unwrap())
            .add(&TensorExpr::pure(&[&(&t1 * &t2), &e1e2]).unwrap());
        assert_eq!(coproduct(&e1e2), expect);
    }

    #[test]
    fn antipode_examples() {
        let a = Algebra::a(2).unwrap();
        let e1 = NcExpr::e(&a, 1).unwrap();
        let t1inv = NcExpr::t(&a, 1, -Q64::one()).unwrap();
        assert_eq!(antipode(&e1, AntipodeDirection::Forward), -(&t1inv * &e1));
        let one = NcExpr::one(&a);
        assert_eq!(antipode(&one, AntipodeDirection::Forward), one);
        let x = &e1 * &NcExpr::f(&a, 2).unwrap();
        let back = antipode(&antipode(&x, AntipodeDirection::Forward), AntipodeDirection::Inverse);
        assert_eq!(back, x);
    }

    #[test]
    fn counit_examples() {
        let a = Algebra::a(2).unwrap();
        let k = a.scalars();
        assert!(counit(&NcExpr::t(&a, 1, Q64::new(3, 2)).unwrap_or_else(|_| NcExpr::one(&a))).is_one());
        let x = &NcExpr::e(&a, 1).unwrap() * &NcExpr::t(&a, 2, Q64::one()).unwrap();
        assert!(counit(&x).is_zero());
        let y = NcExpr::scalar(&a, k.from_int(5)) + NcExpr::f(&a, 1).unwrap().scale(&k.from_int(2));
        assert_eq!(counit(&y), k.from_int(5));
    }

    #[test]
    fn weights() {
        let g = Algebra::g2();
        let w = |s: &str| weight_of(&g, &s.split_whitespace().map(|x| Letter::parse(x).unwrap()).collect::<Vec<_>>());
        assert_eq!(w("e1 e2 e1").unwrap(), vec![2, 1]);
        assert_eq!(w("").unwrap(), vec![0, 0]);
        assert_eq!(w("f2 f2 f1 f2").unwrap(), vec![1, 3]);
        assert!(matches!(w("e1 f1"), Err(Error::MixedWord)));
    }

    #[test]
    fn serre_examples() {
        let a2 = Algebra::a(2).unwrap();
        let two = a2.qnum_i(0, 2);
        let expect = ex(&a2, "e1 e1 e2") - ex(&a2, "e1 e2 e1").scale(&two) + ex(&a2, "e2 e1 e1");
        assert_eq!(serre_element(&a2, 1, 2, GeneratorKind::E).unwrap(), expect);

        let a3 = Algebra::a(3).unwrap();
        assert_eq!(
            serre_element(&a3, 1, 3, GeneratorKind::E).unwrap(),
            ex(&a3, "e1 e3") - ex(&a3, "e3 e1")
        );

        let g = Algebra::g2();
        let two1 = g.qnum_i(0, 2);
        let expect = ex(&g, "e1 e1 e2") - ex(&g, "e1 e2 e1").scale(&two1) + ex(&g, "e2 e1 e1");
        assert_eq!(serre_element(&g, 1, 2, GeneratorKind::E).unwrap(), expect);
        let quartic = serre_element(&g, 2, 1, GeneratorKind::E).unwrap();
        assert_eq!(quartic.len(), 5);
        assert_eq!(quartic.degree(), 5);
        assert!(serre_element(&g, 1, 1, GeneratorKind::F).is_err());
    }
}

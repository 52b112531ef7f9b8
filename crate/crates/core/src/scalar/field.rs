//! The coefficient field `Q(v)` or `Q(v)(s)` with `s^2 = Δ_s(v)`, where `q = v^L`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Rational};
use super::point::PointValue;
use super::ratfunc::RatFunc;
use super::ScalarError;

#[derive(Debug, PartialEq, Eq)]
struct SpecInner {
    root_order: u32,
    sqrt_of: Option<LaurentPoly>,
}

/// Which field a [`Scalar`] lives in: `q = v^root_order`, optionally with `s = sqrt(Δ_s)`.
#[derive(Clone, Debug)]
pub struct ScalarSpec(Arc<SpecInner>);

impl PartialEq for ScalarSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ScalarSpec {}

impl ScalarSpec {
    pub fn new(root_order: u32, sqrt_of: Option<LaurentPoly>) -> Result<Self, ScalarError> {
        if root_order == 0 {
            return Err(ScalarError::InvalidSpec("root order must be at least 1".into()));
        }
        if sqrt_of.as_ref().is_some_and(LaurentPoly::is_zero) {
            return Err(ScalarError::InvalidSpec("cannot adjoin the square root of zero".into()));
        }
        Ok(ScalarSpec(Arc::new(SpecInner { root_order, sqrt_of })))
    }

    /// `Q(v)` with `q = v^L`.
    pub fn rational(root_order: u32) -> Self {
        Self::new(root_order, None).expect("valid root order")
    }

    pub fn root_order(&self) -> u32 {
        self.0.root_order
    }

    pub fn sqrt_of(&self) -> Option<&LaurentPoly> {
        self.0.sqrt_of.as_ref()
    }

    pub fn zero(&self) -> Scalar {
        Scalar { spec: self.clone(), a: RatFunc::zero(), b: RatFunc::zero() }
    }

    pub fn one(&self) -> Scalar {
        self.from_ratfunc(RatFunc::one())
    }

    pub fn from_int(&self, c: i64) -> Scalar {
        self.from_rational(Rational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(&self, c: Rational) -> Scalar {
        self.from_ratfunc(RatFunc::from_rational(c))
    }

    pub fn from_ratfunc(&self, a: RatFunc) -> Scalar {
        Scalar { spec: self.clone(), a, b: RatFunc::zero() }
    }

    pub fn from_laurent(&self, p: LaurentPoly) -> Scalar {
        self.from_ratfunc(RatFunc::from_laurent(p))
    }

    /// `a + b·s`; fails if `b != 0` and no root is adjoined.
    pub fn from_parts(&self, a: RatFunc, b: RatFunc) -> Result<Scalar, ScalarError> {
        if !b.is_zero() && self.sqrt_of().is_none() {
            return Err(ScalarError::NoSqrt);
        }
        Ok(Scalar { spec: self.clone(), a, b })
    }

    /// `v^k`.
    pub fn v_pow(&self, k: i64) -> Scalar {
        self.from_ratfunc(RatFunc::v_pow(k))
    }

    /// `q^e` for rational `e`; needs `L·e` integral.
    pub fn q_pow(&self, e: Ratio<i64>) -> Result<Scalar, ScalarError> {
        let scaled = e * Ratio::from_integer(self.root_order() as i64);
        if !scaled.is_integer() {
            return Err(ScalarError::NotRepresentable(format!("q^({e}) with L = {}", self.root_order())));
        }
        Ok(self.v_pow(scaled.to_integer()))
    }

    /// The adjoined square root `s`.
    pub fn sqrt(&self) -> Result<Scalar, ScalarError> {
        if self.sqrt_of().is_none() {
            return Err(ScalarError::NoSqrt);
        }
        Ok(Scalar { spec: self.clone(), a: RatFunc::zero(), b: RatFunc::one() })
    }

    /// Exponent `k` with `q^d = v^k`.
    fn base_exponent(&self, d: Ratio<i64>) -> Result<i64, ScalarError> {
        let k = d * Ratio::from_integer(self.root_order() as i64);
        if !k.is_integer() {
            return Err(ScalarError::NotRepresentable(format!(
                "base q^({d}) with L = {}",
                self.root_order()
            )));
        }
        if k.is_zero() {
            return Err(ScalarError::NotRepresentable("q-number in base q^0".into()));
        }
        Ok(k.to_integer())
    }

    /// The q-number `[m]` in base `q^d`: `(q^{dm} - q^{-dm}) / (q^d - q^{-d})`.
    pub fn qnum(&self, m: i64, d: Ratio<i64>) -> Result<Scalar, ScalarError> {
        let k = self.base_exponent(d)?;
        Ok(self.from_laurent(qnum_laurent(m, k)))
    }

    /// `[n]! / ([k]! [n-k]!)` in base `q^d`.
    pub fn qbinom(&self, n: i64, k: i64, d: Ratio<i64>) -> Result<Scalar, ScalarError> {
        if k < 0 || n < k {
            return Err(ScalarError::OutOfRange(format!("q-binomial ({n} choose {k})")));
        }
        let base = self.base_exponent(d)?;
        let fact = |m: i64| (1..=m).fold(LaurentPoly::one(), |acc, i| acc.mul(&qnum_laurent(i, base)));
        let num = fact(n);
        let den = fact(k).mul(&fact(n - k));
        let r = RatFunc::new(num, den).expect("q-factorials are nonzero");
        // Gaussian binomials are Laurent polynomials; the quotient must be exact.
        assert!(r.is_laurent(), "q-binomial with non-trivial denominator");
        Ok(self.from_ratfunc(r))
    }

    /// `ω` in base `q^d`: `q^d - q^{-d}`.
    pub fn omega(&self, d: Ratio<i64>) -> Result<Scalar, ScalarError> {
        let k = self.base_exponent(d)?;
        Ok(self.v_pow(k) - self.v_pow(-k))
    }
}

/// `[m]` in base `v^k` as a Laurent polynomial: `Σ_{i=0}^{m-1} v^{k(m-1-2i)}`.
pub(crate) fn qnum_laurent(m: i64, k: i64) -> LaurentPoly {
    if m < 0 {
        return qnum_laurent(-m, k).neg();
    }
    LaurentPoly::from_terms((0..m).map(|i| (k * (m - 1 - 2 * i), Rational::one())))
}

/// `a + b·s` with `a, b ∈ Q(v)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    spec: ScalarSpec,
    a: RatFunc,
    b: RatFunc,
}

impl Scalar {
    pub fn spec(&self) -> &ScalarSpec {
        &self.spec
    }

    pub fn rational_part(&self) -> &RatFunc {
        &self.a
    }

    pub fn sqrt_part(&self) -> &RatFunc {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), ScalarError> {
        if self.spec != other.spec {
            return Err(ScalarError::ContextMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        Ok(Scalar { spec: self.spec.clone(), a: self.a.add(&other.a), b: self.b.add(&other.b) })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        Ok(Scalar { spec: self.spec.clone(), a: self.a.sub(&other.a), b: self.b.sub(&other.b) })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        let (a, b) = if self.b.is_zero() && other.b.is_zero() {
            (self.a.mul(&other.a), RatFunc::zero())
        } else {
            let delta = self.delta();
            // (a + bs)(c + ds) = ac + bdΔ + (ad + bc)s
            let a = self.a.mul(&other.a).add(&self.b.mul(&other.b).mul(&delta));
            let b = self.a.mul(&other.b).add(&self.b.mul(&other.a));
            (a, b)
        };
        Ok(Scalar { spec: self.spec.clone(), a, b })
    }

    fn delta(&self) -> RatFunc {
        RatFunc::from_laurent(self.spec.sqrt_of().cloned().unwrap_or_else(LaurentPoly::zero))
    }

    /// `(a - bs) / (a^2 - b^2 Δ)`.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.b.is_zero() {
            let a = self.a.inv().map_err(|_| ScalarError::DivisionByZero)?;
            return Ok(Scalar { spec: self.spec.clone(), a, b: RatFunc::zero() });
        }
        let norm = self.a.mul(&self.a).sub(&self.b.mul(&self.b).mul(&self.delta()));
        let ninv = norm.inv().map_err(|_| ScalarError::DivisionByZero)?;
        Ok(Scalar { spec: self.spec.clone(), a: self.a.mul(&ninv), b: self.b.neg().mul(&ninv) })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.spec.one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Scalar { spec: self.spec.clone(), a: self.a.shift(k), b: self.b.shift(k) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Scalar { spec: self.spec.clone(), a: self.a.scale(c), b: self.b.scale(c) }
    }

    /// `v -> v^{-1}` on the coefficients; `s` is fixed, which is consistent only when
    /// `Δ_s` is itself bar-invariant.
    pub fn bar(&self) -> Self {
        Scalar { spec: self.spec.clone(), a: self.a.bar(), b: self.b.bar() }
    }

    /// Exact value at `v = v0`, as `p + r·sqrt(Δ_s(v0))`.
    pub fn eval_at(&self, v0: &Rational) -> Result<PointValue, ScalarError> {
        if v0.is_zero() {
            return Err(ScalarError::Pole);
        }
        let p = self.a.eval(v0).map_err(|_| ScalarError::Pole)?;
        let r = self.b.eval(v0).map_err(|_| ScalarError::Pole)?;
        let d = self.spec.sqrt_of().map(|s| s.eval(v0)).unwrap_or_else(Rational::zero);
        Ok(PointValue::new(p, r, Arc::new(d)))
    }

    /// Rough size of the canonical form.
    pub fn size(&self) -> usize {
        self.a.size() + self.b.size()
    }

    /// `Some(c)` if this is the rational constant `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.b.is_zero() || !self.a.is_laurent() {
            return None;
        }
        let n = self.a.num();
        if n.is_zero() {
            return Some(Rational::zero());
        }
        (n.low() == 0 && n.span() == 1).then(|| n.coeffs()[0].clone())
    }

    /// `Some((c, k))` if this is `c · v^k`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        if !self.b.is_zero() || !self.a.is_laurent() || !self.a.num().is_monomial() {
            return None;
        }
        let n = self.a.num();
        Some((n.coeffs()[0].clone(), n.low()))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})*s", self.b),
            (false, false) => write!(f, "{} + ({})*s", self.a, self.b),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics if the operands live in different fields.
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar spec mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { spec: self.spec.clone(), a: self.a.neg(), b: self.b.neg() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// `Δ_s = v + v^{-1}`, i.e. `s = [2]^{1/2}` in base `v`.
pub fn bracket_two() -> LaurentPoly {
    LaurentPoly::from_terms([(1, Rational::one()), (-1, Rational::one())])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn g2() -> ScalarSpec {
        ScalarSpec::new(3, Some(bracket_two())).unwrap()
    }

    #[test]
    fn q_difference_product() {
        let k = ScalarSpec::rational(1);
        let x = k.v_pow(1) + k.v_pow(-1);
        let y = k.v_pow(1) - k.v_pow(-1);
        assert_eq!(x * y, k.v_pow(2) - k.v_pow(-2));
    }

    #[test]
    fn inverse_of_sqrt() {
        let k = g2();
        let s = k.sqrt().unwrap();
        let expect = s.try_div(&k.from_laurent(bracket_two())).unwrap();
        assert_eq!(s.inv().unwrap(), expect);
        assert!((&s * &s.inv().unwrap()).is_one());
        assert_eq!(&s * &s, k.from_laurent(bracket_two()));
    }

    #[test]
    fn omega_two_is_q2_difference() {
        let k = g2();
        let w2 = k.omega(r(1, 3)).unwrap();
        assert_eq!(w2, k.v_pow(1) - k.v_pow(-1));
    }

    #[test]
    fn qnum_small_cases() {
        let k = g2();
        assert!(k.qnum(1, r(1, 3)).unwrap().is_one());
        assert!(k.qnum(0, r(1, 3)).unwrap().is_zero());
        assert_eq!(k.qnum(2, r(1, 3)).unwrap(), k.v_pow(1) + k.v_pow(-1));
        // [3] ω₂ = ω₁
        let lhs = k.qnum(3, r(1, 3)).unwrap() * k.omega(r(1, 3)).unwrap();
        assert_eq!(lhs, k.omega(r(1, 1)).unwrap());
    }

    #[test]
    fn qnum_matches_quotient_definition() {
        let k = g2();
        for m in -4..7 {
            let num = k.v_pow(m) - k.v_pow(-m);
            let den = k.v_pow(1) - k.v_pow(-1);
            assert_eq!(k.qnum(m, r(1, 3)).unwrap(), num.try_div(&den).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn qbinom_cases() {
        let k = ScalarSpec::rational(1);
        assert_eq!(k.qbinom(2, 1, r(1, 1)).unwrap(), k.v_pow(1) + k.v_pow(-1));
        for n in 0..6 {
            assert!(k.qbinom(n, 0, r(1, 1)).unwrap().is_one());
        }
        assert!(k.qbinom(2, 3, r(1, 1)).is_err());
        assert!(k.qbinom(2, -1, r(1, 1)).is_err());
        // [4 choose 2] in base v, expanded by hand through [4][3]/([2][1]):
        // [4][3] = (v^3+v+v^-1+v^-3)(v^2+1+v^-2), [2] = v + v^-1
        // quotient = v^4 + v^2 + 2 + v^-2 + v^-4
        let g = g2();
        let expect = LaurentPoly::from_terms([
            (4, Rational::one()),
            (2, Rational::one()),
            (0, Rational::from_integer(2.into())),
            (-2, Rational::one()),
            (-4, Rational::one()),
        ]);
        assert_eq!(g.qbinom(4, 2, r(1, 3)).unwrap(), g.from_laurent(expect));
    }

    #[test]
    fn non_representable_base() {
        let k = ScalarSpec::rational(2);
        assert!(matches!(k.qnum(2, r(1, 3)), Err(ScalarError::NotRepresentable(_))));
        assert!(k.q_pow(r(1, 2)).is_ok());
        assert!(k.q_pow(r(1, 3)).is_err());
    }

    #[test]
    fn context_mismatch_and_division_errors() {
        let a = ScalarSpec::rational(2).one();
        let b = ScalarSpec::rational(3).one();
        assert_eq!(a.try_add(&b), Err(ScalarError::ContextMismatch));
        assert_eq!(ScalarSpec::rational(2).zero().inv(), Err(ScalarError::DivisionByZero));
        assert!(ScalarSpec::rational(1).sqrt().is_err());
    }

    #[test]
    fn point_evaluation() {
        let k = g2();
        let two = Rational::from_integer(2.into());
        let x = k.v_pow(1) + k.v_pow(-1);
        let p = x.eval_at(&two).unwrap();
        assert_eq!(p.rational(), &Rational::new(5.into(), 2.into()));
        assert!(p.irrational().is_zero());
        let s = k.sqrt().unwrap().eval_at(&two).unwrap();
        assert!(s.rational().is_zero());
        assert!(s.irrational().is_one());
        assert_eq!(s.radicand(), &Rational::new(5.into(), 2.into()));
        // [3] in base v at v = 2: 4 + 1 + 1/4
        let q3 = k.qnum(3, r(1, 3)).unwrap().eval_at(&two).unwrap();
        assert_eq!(q3.rational(), &Rational::new(21.into(), 4.into()));
    }

    #[test]
    fn pole_is_reported() {
        let k = ScalarSpec::rational(1);
        let x = (k.v_pow(1) - k.one()).inv().unwrap();
        assert_eq!(x.eval_at(&Rational::one()), Err(ScalarError::Pole));
        assert_eq!(k.one().eval_at(&Rational::zero()), Err(ScalarError::Pole));
    }
}

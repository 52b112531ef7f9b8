//! Canonical rational functions in `v` over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use super::laurent::{make_monic, poly_exact_div, poly_gcd, LaurentPoly, Rational};

/// `num / den` in lowest terms.
///
/// Canonical form: `den` is an ordinary polynomial with nonzero constant term and
/// leading coefficient 1, `gcd(num, den) = 1`. All powers of `v` live in `num`, so
/// structural equality coincides with equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionByZero;

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn v_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::v_pow(k))
    }

    /// Build `num / den`, reducing to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, DivisionByZero> {
        if den.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Move v-powers of the denominator into the numerator.
        let num = num.shift(-den.low());
        let den_c = den.coeffs().to_vec();
        if den_c.len() == 1 {
            let inv = den_c[0].recip();
            return RatFunc { num: num.scale(&inv), den: LaurentPoly::one() };
        }
        let g = poly_gcd(num.coeffs(), &den_c);
        let (n_c, d_c) = if g.len() > 1 {
            (poly_exact_div(num.coeffs(), &g), poly_exact_div(&den_c, &g))
        } else {
            (num.coeffs().to_vec(), den_c)
        };
        let lead = d_c.last().unwrap().clone();
        let d_c = make_monic(d_c);
        let n = LaurentPoly::from_parts(num.low(), n_c);
        let n = if lead.is_one() { n } else { n.scale(&lead.recip()) };
        // An exact division can leave trailing zero constants in the denominator
        // only if g absorbed a v-factor, which cannot happen since den(0) != 0.
        let d = LaurentPoly::from_parts(0, d_c);
        debug_assert_eq!(d.low(), 0);
        RatFunc { num: n, den: d }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return RatFunc { num, den: LaurentPoly::one() };
            }
            return Self::canonicalize(num, self.den.clone());
        }
        if self.den.is_one() {
            // a + c/d = (a d + c)/d, already reduced.
            let num = self.num.mul(&other.den).add(&other.num);
            return Self::reduced(num, other.den.clone());
        }
        if other.den.is_one() {
            let num = other.num.mul(&self.den).add(&self.num);
            return Self::reduced(num, self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::canonicalize(num, self.den.mul(&other.den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            Self::zero()
        } else {
            RatFunc { num, den }
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: LaurentPoly::one() };
        }
        // Cross-cancel: gcd(n1, d2) and gcd(n2, d1).
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        // Both factors are monic with nonzero constant terms, so the product is canonical.
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Self::canonicalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, DivisionByZero> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn shift(&self, k: i64) -> Self {
        RatFunc { num: self.num.shift(k), den: self.den.clone() }
    }

    /// `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self::canonicalize(self.num.bar(), self.den.bar())
    }

    pub fn eval(&self, v0: &Rational) -> Result<Rational, DivisionByZero> {
        let d = self.den.eval(v0);
        if d.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(self.num.eval(v0) / d)
    }

    /// Total coefficient span, a cheap proxy for expression size.
    pub fn size(&self) -> usize {
        self.num.span() + self.den.span()
    }
}

/// Remove the common factor of a Laurent numerator and a canonical denominator.
fn cancel(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if den.is_one() {
        return (num.clone(), den.clone());
    }
    let g = poly_gcd(num.coeffs(), den.coeffs());
    if g.len() <= 1 {
        return (num.clone(), den.clone());
    }
    let n = LaurentPoly::from_parts(num.low(), poly_exact_div(num.coeffs(), &g));
    // den monic and g monic, so the quotient is monic.
    let d = LaurentPoly::from_parts(0, poly_exact_div(den.coeffs(), &g));
    (n, d)
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

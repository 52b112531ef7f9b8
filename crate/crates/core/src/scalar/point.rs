//! Exact values of scalars at a rational point: elements `p + r·sqrt(d)` of `Q(sqrt(d))`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::laurent::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct PointValue {
    p: Rational,
    r: Rational,
    d: Arc<Rational>,
}

impl PointValue {
    pub fn new(p: Rational, r: Rational, d: Arc<Rational>) -> Self {
        PointValue { p, r, d }
    }

    pub fn rational(&self) -> &Rational {
        &self.p
    }

    pub fn irrational(&self) -> &Rational {
        &self.r
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.r.is_zero()
    }

    pub fn zero_in(d: Arc<Rational>) -> Self {
        PointValue { p: Rational::zero(), r: Rational::zero(), d }
    }

    pub fn one_in(d: Arc<Rational>) -> Self {
        PointValue { p: num_traits::One::one(), r: Rational::zero(), d }
    }

    pub fn add(&self, o: &Self) -> Self {
        PointValue { p: &self.p + &o.p, r: &self.r + &o.r, d: self.d.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        PointValue { p: &self.p - &o.p, r: &self.r - &o.r, d: self.d.clone() }
    }

    pub fn neg(&self) -> Self {
        PointValue { p: -&self.p, r: -&self.r, d: self.d.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.r.is_zero() && o.r.is_zero() {
            return PointValue { p: &self.p * &o.p, r: Rational::zero(), d: self.d.clone() };
        }
        let p = &self.p * &o.p + &self.r * &o.r * &*self.d;
        let r = &self.p * &o.r + &self.r * &o.p;
        PointValue { p, r, d: self.d.clone() }
    }

    /// `None` when the value is a zero divisor (zero, or `d` a perfect square and the
    /// norm vanishes).
    pub fn inv(&self) -> Option<Self> {
        let norm = &self.p * &self.p - &self.r * &self.r * &*self.d;
        if norm.is_zero() {
            return None;
        }
        Some(PointValue { p: &self.p / &norm, r: -&self.r / &norm, d: self.d.clone() })
    }
}

impl fmt::Debug for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_zero() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{} + {}*sqrt({})", self.p, self.r, self.d)
        }
    }
}

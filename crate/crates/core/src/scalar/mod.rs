//! Exact scalar arithmetic: Laurent polynomials, rational functions in `v`, the optional
//! quadratic extension, and exact point evaluation.

mod field;
mod json;
mod laurent;
mod point;
mod ratfunc;

use std::sync::Arc;

use thiserror::Error;

pub use field::{bracket_two, Scalar, ScalarSpec};
pub use json::{LaurentWire, RatFuncWire, ScalarWire};
pub use laurent::{LaurentPoly, Rational};
pub use point::PointValue;
pub use ratfunc::{DivisionByZero, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields")]
    ContextMismatch,
    #[error("no square root is adjoined to this field")]
    NoSqrt,
    #[error("not representable: {0}")]
    NotRepresentable(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("pole at the evaluation point")]
    Pole,
    #[error("invalid scalar spec: {0}")]
    InvalidSpec(String),
    #[error("malformed scalar JSON: {0}")]
    Json(String),
}

/// Minimal field interface shared by symbolic scalars and point values, so that the
/// matrix routines run unchanged in both modes.
pub trait Field: Clone + PartialEq + Send + Sync + std::fmt::Debug {
    /// Whatever is needed to build constants of the field.
    type Ctx: Clone + Send + Sync + std::fmt::Debug;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn ctx(&self) -> Self::Ctx;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Pivot preference for elimination; smaller is better.
    fn complexity(&self) -> usize {
        0
    }
}

impl Field for Scalar {
    type Ctx = ScalarSpec;

    fn zero(ctx: &ScalarSpec) -> Self {
        ctx.zero()
    }
    fn one(ctx: &ScalarSpec) -> Self {
        ctx.one()
    }
    fn ctx(&self) -> ScalarSpec {
        self.spec().clone()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self).ok()
    }
    fn complexity(&self) -> usize {
        self.size()
    }
}

impl Field for PointValue {
    type Ctx = Arc<Rational>;

    fn zero(ctx: &Arc<Rational>) -> Self {
        PointValue::zero_in(ctx.clone())
    }
    fn one(ctx: &Arc<Rational>) -> Self {
        PointValue::one_in(ctx.clone())
    }
    fn ctx(&self) -> Arc<Rational> {
        Arc::new(self.radicand().clone())
    }
    fn is_zero(&self) -> bool {
        PointValue::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        PointValue::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        PointValue::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        PointValue::mul(self, other)
    }
    fn neg(&self) -> Self {
        PointValue::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        PointValue::inv(self)
    }
}

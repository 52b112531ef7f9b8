//! Noncommutative expressions in `t_j^r`, `e_j`, `f_j` and the Hopf structure on them.

mod algebra;
mod expr;
mod hopf;
mod json;
pub(crate) mod json_support {
    pub(crate) use super::json::{coeff_latex, monomial_latex};
}

pub use algebra::{Algebra, CartanType, Q64};
pub use expr::{Letter, Monomial, NcExpr, TMono, Word};
pub use hopf::{
    antipode, coproduct, counit, serre_element, weight_of, AntipodeDirection, GeneratorKind, TensorExpr,
};
pub use json::{NcTermWire, TensorTermWire};

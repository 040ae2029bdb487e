//! Exact arithmetic in Q(i).

mod gaussian;
mod gint;
mod rational;
mod text;

pub use gaussian::{ArithError, ArithOp, GaussianRational};
pub use gint::GaussianInt;
pub use rational::Rational;
pub use text::ParseError;

/// `a op b` in canonical form.
pub fn gq_arith(
    a: &GaussianRational,
    b: &GaussianRational,
    op: ArithOp,
) -> Result<GaussianRational, ArithError> {
    a.apply(op, b)
}

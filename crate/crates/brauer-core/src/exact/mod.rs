//! Exact scalar arithmetic and exact linear algebra.
//!
//! Everything downstream (diagram algebras, group algebras, tensor actions,
//! ideal closures) runs on [`Scalar`] values drawn from one of four rings:
//! arbitrary-precision integers, rationals, odd prime fields GF(p), and the
//! integer polynomial ring Z[x] used for the generic-parameter Brauer algebra
//! B_n(x). Mixing variants is always an error, never a coercion.

mod matrix;
mod scalar;
mod span;

pub use matrix::ExactMatrix;
pub use scalar::{Ring, Scalar};
pub use span::SpanBasis;

pub(crate) use scalar::parse_scalar;

//! Exact computational engine for Brauer diagram algebras B_n(delta) and
//! symmetric group algebras, built for mechanical verification of structural
//! identities: signed quasi-idempotents, cellular (Murphy) and seminormal
//! bases, the action on tensor space, and two-sided ideal computations, all
//! over exact coefficient rings (Z, Q, GF(p), Z[x]).

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod exact;
pub mod ideals;
pub mod perm;
pub mod seminormal;
pub mod symgroup;
pub mod tensor;

pub use error::{Error, Result};

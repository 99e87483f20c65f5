use crate::exact::Ring;

/// Crate-wide error type. Every fallible operation in the engine reports
/// through this enum so the CLI can map failures onto its exit-code contract.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: Ring, right: Ring },

    #[error("operation `{op}` is not supported over {ring}")]
    UnsupportedRing { ring: Ring, op: &'static str },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("characteristic 2 is excluded by the standing hypothesis: \
             all annihilator and cell-ideal statements assume characteristic not equal to 2")]
    CharacteristicTwo,

    #[error("resource guard: {what} = {requested} exceeds the limit {limit}")]
    GuardExceeded {
        what: String,
        limit: u128,
        requested: u128,
    },

    #[error("delta mismatch: element carries delta = {carried}, operation requires delta = {required}")]
    DeltaMismatch { carried: String, required: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid pairing spec: {0}")]
    InvalidSpec(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("ambient algebra mismatch: {0}")]
    AmbientMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

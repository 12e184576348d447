use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("empty operand: {0}")]
    EmptyOperand(&'static str),
    #[error("action is not a homomorphism: {0}")]
    NotHomomorphic(String),
    #[error("measure is not invariant: {0}")]
    NotInvariant(String),
    #[error("measure weights sum to {0}, expected 1")]
    BadTotalMass(String),
    #[error("system is not ergodic ({0} orbits carry mass)")]
    NotErgodic(usize),
    #[error("null set: {0}")]
    NullSet(&'static str),
    #[error("enumeration guard exceeded: {size} candidates > {limit}")]
    GuardExceeded { size: usize, limit: usize },
    #[error("integer overflow while scaling capacities")]
    Overflow,
    #[error("degenerate descriptor: {0}")]
    Degenerate(&'static str),
    #[error("no transitive point: {0} orbits")]
    NoTransitivePoint(usize),
}

//! Exact arithmetic in cyclotomic fields `Q(zeta_N)` and exact linear
//! algebra over them.
//!
//! Values of class functions live in the union of the fields `Q(zeta_N)`;
//! every element carries its own level `N` and is stored canonically as a
//! polynomial in `zeta_N` reduced modulo the `N`-th cyclotomic polynomial,
//! so equality at a fixed level is coefficient equality.  Binary operations
//! lift both operands to the lcm of their levels.  There is no floating
//! point anywhere; ranks, inner products and solution vectors are exact.

mod cyclo;
mod linalg;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloElem, MAX_CYCLOTOMIC_LEVEL};
pub use linalg::{solve_linear, CycloMatrix, SolveOutcome};

/// Exact rational number, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExactNumError {
    #[error("cyclotomic level {0} out of bounds (1..={MAX_CYCLOTOMIC_LEVEL})")]
    LevelOutOfBounds(u64),
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u64),
    #[error("value at level {from} is not expressible at level {to}")]
    Representation { from: u64, to: u64 },
    #[error("exponent {0} is not invertible modulo the level {1}")]
    BadGaloisExponent(u64, u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

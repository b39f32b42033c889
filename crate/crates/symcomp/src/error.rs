//! Crate-wide error type.
//!
//! Every failure carries enough context to point at the first witness
//! (a monomial, a basis triple, a matrix position) rather than a bare flag.

use std::fmt;

/// Errors produced by field arithmetic, linear algebra and the composition
/// machinery.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Attempted to invert zero or divide by zero.
    DivisionByZero,
    /// The modulus handed to a prime-field constructor is not prime.
    NotPrime(u64),
    /// A quadratic extension by a cube root of unity was requested over a
    /// field that already contains one, or has characteristic 3.
    OmegaNotAdjoinable(String),
    /// An element does not belong to the field it is used with.
    FieldMismatch { expected: String, found: String },
    /// Vector or matrix dimensions do not line up.
    DimensionMismatch { expected: String, found: String },
    /// The polar form of a quadratic space is singular.
    SingularPolarForm,
    /// A matrix that must be invertible is not.
    NotInvertible,
    /// The coefficient table of q∘f is not a scalar multiple of the table
    /// of q; the witness is the first mismatching coefficient position.
    NotASimilarity { row: usize, col: usize },
    /// No vector of norm one was found within the search strategy.
    NormOneNotFound,
    /// An exhaustive enumeration would exceed its budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// An enumeration was requested over an infinite field.
    InfiniteField,
    /// The multiplication tensor violates a composition axiom; `condition`
    /// is 1 for the norm identity, 2 for associativity of the polar form.
    CompositionViolation { condition: u8, witness: String },
    /// The norm identity holds only with multiplier zero.
    DegenerateComposition,
    /// A scalar that must be nonzero is zero.
    ZeroScalar,
    /// A map expected to be an algebra automorphism is not.
    NotAnAutomorphism(String),
    /// A twisting map must have order dividing 3.
    OrderNotThree,
    /// The cocycle condition ρ²[f]·ρ[f]·[f] = 1 fails.
    CocycleViolation,
    /// The twist partner is not in the class ρ²[f]⁻¹.
    WrongTwistPartner,
    /// The even Clifford basis did not reach full rank.
    RankDeficient { got: usize },
    /// Transport of the even Clifford algebra neither preserves nor swaps
    /// the two factors.
    FactorInconsistency,
    /// A similarity expected to be proper is improper, or vice versa.
    WrongParity { expected_proper: bool },
    /// The constraint system ψ(E)·g = g·E has no invertible solution.
    NoInnerRepresentative(String),
    /// The class of the given similarity is not fixed by ρ.
    NotFixedByRho,
    /// A map expected to be an isometry has multiplier ≠ 1.
    NotAnIsometry,
    /// A spin-triple relation fails; `which` is 1, 2 or 3.
    TripleRelationFailure { which: u8, witness: String },
    /// No spin lift exists (the required square roots are missing).
    NoLift(String),
    /// Presentation-change data violates its defining constraint.
    PresentationConstraint(String),
    /// The field has no primitive cube root of unity.
    MissingOmega,
    /// The construction is undefined in this characteristic.
    BadCharacteristic { construction: &'static str, needs: &'static str },
    /// A scalar, vector or file failed to parse.
    Parse(String),
    /// Filesystem or stream failure in the CLI.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::OmegaNotAdjoinable(why) => {
                write!(f, "cannot adjoin a primitive cube root of unity: {why}")
            }
            Error::FieldMismatch { expected, found } => {
                write!(f, "field mismatch: expected element of {expected}, found {found}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::SingularPolarForm => write!(f, "polar form is singular"),
            Error::NotInvertible => write!(f, "matrix is not invertible"),
            Error::NotASimilarity { row, col } => write!(
                f,
                "not a similarity: coefficient ({row},{col}) of q∘f is not the \
                 common multiple of the coefficient of q"
            ),
            Error::NormOneNotFound => write!(f, "no vector of norm one found"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {needed} steps, budget is {budget}")
            }
            Error::InfiniteField => write!(f, "enumeration requested over an infinite field"),
            Error::CompositionViolation { condition, witness } => {
                write!(f, "composition axiom ({condition}) fails at {witness}")
            }
            Error::DegenerateComposition => {
                write!(f, "norm identity holds only with multiplier zero")
            }
            Error::ZeroScalar => write!(f, "scalar must be nonzero"),
            Error::NotAnAutomorphism(why) => write!(f, "not an algebra automorphism: {why}"),
            Error::OrderNotThree => write!(f, "twisting map must satisfy f³ = id"),
            Error::CocycleViolation => {
                write!(f, "cocycle condition ρ²[f]·ρ[f]·[f] = 1 fails")
            }
            Error::WrongTwistPartner => {
                write!(f, "twist partner is not in the class ρ²[f]⁻¹")
            }
            Error::RankDeficient { got } => {
                write!(f, "even Clifford basis stalled at rank {got} of 128")
            }
            Error::FactorInconsistency => write!(
                f,
                "transport neither preserves nor swaps the two factors of the even Clifford algebra"
            ),
            Error::WrongParity { expected_proper } => {
                if *expected_proper {
                    write!(f, "similarity is improper, expected proper")
                } else {
                    write!(f, "similarity is proper, expected improper")
                }
            }
            Error::NoInnerRepresentative(why) => {
                write!(f, "ψ(E)·g = g·E has no invertible solution: {why}")
            }
            Error::NotFixedByRho => write!(f, "class is not fixed by ρ"),
            Error::NotAnIsometry => write!(f, "map is not an isometry (multiplier ≠ 1)"),
            Error::TripleRelationFailure { which, witness } => {
                write!(f, "spin-triple relation ({which}) fails at {witness}")
            }
            Error::NoLift(why) => write!(f, "no spin lift: {why}"),
            Error::PresentationConstraint(why) => {
                write!(f, "presentation-change data invalid: {why}")
            }
            Error::MissingOmega => {
                write!(f, "field has no primitive cube root of unity")
            }
            Error::BadCharacteristic { construction, needs } => {
                write!(f, "{construction} requires characteristic {needs}")
            }
            Error::Parse(why) => write!(f, "parse error: {why}"),
            Error::Io(why) => write!(f, "io error: {why}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

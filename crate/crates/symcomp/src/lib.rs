//! Exact arithmetic for 8-dimensional symmetric composition algebras and
//! the trialitarian automorphism computed through their even Clifford
//! algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`]: exact scalars — ℚ, prime fields F_p, quadratic extensions
//!   F(ω) by a primitive cube root of unity;
//! - [`linalg`]: dense exact matrices, row reduction, kernels;
//! - [`quadform`]: nonsingular 8-dimensional quadratic spaces with
//!   characteristic-free coefficient tables and symbolic similarity checks;
//! - [`composition`]: symmetric composition structures `(S, ⋆, n)` with
//!   `n(x⋆y) = λ·n(x)·n(y)` and associative polar form, plus scaling,
//!   opposites, twists, normalization, derivations and para-unit search;
//! - [`constructors`]: the classical families — para-Zorn, para-octonion,
//!   split Petersson, Okubo (split-matrix and hermitian), and the two-
//!   parameter table family on a hyperbolic basis;
//! - [`clifford`]: the even Clifford representation
//!   `C₀(S, n) ≅ End(S) × End(S)`, properness of similarities, and the
//!   order-3 outer automorphism ρ on proper similarity classes;
//! - [`spin`]: triples `(f, f₁, f₂)` of proper isometries related through
//!   the product, their cyclic shift, and presentation changes;
//! - [`serialize`] and [`cli`]: the JSON file formats and the command-line
//!   pipeline used by the `symcomp` binary.
//!
//! Every runnable capability has a corresponding program under `examples/`;
//! start with `cargo run --example build_and_verify`.

pub mod cli;
pub mod clifford;
pub mod composition;
pub mod constructors;
pub mod error;
pub mod field;
pub mod linalg;
pub mod quadform;
pub mod serialize;
pub mod spin;

pub use error::{Error, Result};

//! Hall numbers, Hall polynomials and the Ringel-Hall Lie algebra of the
//! gentle one-cycle algebra given by the quiver `1 -> 2 -> ... -> n` with a
//! loop `alpha` at `n` and relation `alpha^2 = 0`, computed over prime fields
//! by exhaustive submodule enumeration.

pub mod combo;
pub mod error;
pub mod exact;
pub mod gf;
pub mod hall;
pub mod hom;
pub mod label;
pub mod lie;
pub mod poly;
pub mod quiver;

pub use error::{Error, Result};
pub use gf::{Matrix, SubspaceBasis};
pub use label::{DecompositionMultiset, IndecLabel, Multiset};
pub use quiver::{AlgebraContext, Representation};

/// Exact rationals used for multiplicity solves and interpolation.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;

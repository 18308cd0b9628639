//! Plactic-like monoids and their faithful upper-triangular representations.

pub mod error;
pub mod family;
pub mod hypoplactic;
pub mod identities;
pub mod monoid;
pub mod presentations;
pub mod rps;
pub mod scan;
pub mod semiring;
pub mod stalactic;
pub mod sylvester;
pub mod taiga;
pub mod words;

pub use error::{Error, Result};
pub use semiring::{BlockDiag, Matrix, Natural, Semiring, SemiringKind, Tropical};
pub use words::{Symbol, Word};

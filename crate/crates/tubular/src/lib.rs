//! Exact computations with bound quiver algebras and their modules: one-point extensions,
//! trivial extensions and repetitive categories, Galois coverings, non-stable tubes and the
//! symbolic Ziegler closure of a tube.

pub mod error;
pub mod exact_linear;
pub mod quiver_algebra;
pub mod representation;
pub mod constructions;
pub mod tube;
pub mod fixtures;
pub mod ziegler;
pub mod covering;

pub use error::{Error, Result};
pub use exact_linear::{Matrix, Scalar};

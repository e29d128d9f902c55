//! Pseudo effect algebras as computable structures: finite partial-addition
//! tables, interval algebras over partially ordered groups, exhaustive
//! checkers for the Riesz decomposition property family, constructive
//! refinement lifting through lexicographic products, and the n-perfect
//! decomposition machinery.

pub mod element;
pub mod error;
pub mod group;
pub mod lift;
pub mod nperfect;
pub mod pea;
pub mod riesz;

pub use element::Element;
pub use error::{Error, Result};
pub use group::{descriptor::parse_group, PoGroup};

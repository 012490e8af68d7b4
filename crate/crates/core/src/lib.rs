//! Secondary polytopes, GKZ vectors and torus Chow stability of projective
//! toric varieties, computed in exact rational arithmetic.

pub mod ehrhart;
pub mod error;
pub mod exact;
pub mod secondary;
pub mod stability;
pub mod subdivision;

pub use error::{Error, Result};

//! Matroid computations on small ground sets: minors through prescribed
//! elements, N-connectivity, the connectivity function, and canonical 2-sum
//! tree decompositions.

pub mod bits;
pub mod catalog;
pub mod connectivity;
pub mod construct;
pub mod enumerate;
mod error;
pub mod iso;
pub mod json;
pub mod matroid;
pub mod minor;
pub mod treedecomp;
pub mod verify;

pub use error::{Error, Result};
pub use matroid::{ElementClassification, GroundSet, Matroid};

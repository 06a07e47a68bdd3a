//! Exact Kronecker products of irreducible characters of the symmetric
//! groups, their extreme constituents, and exhaustive checks of
//! classification results for products with few components.

pub mod characters;
pub mod classify;
pub mod cli;
pub mod error;
pub mod extreme;
pub mod kronecker;
pub mod lr;
pub mod par;
pub mod partition;
pub mod vchar;

pub use error::{Error, Result};
pub use kronecker::Method;
pub use partition::{partitions_of, Node, Partition, SkewShape};
pub use vchar::{Decomposition, VirtualCharacter};

//! Non-decreasing Deutsch paths: exhaustive and structural enumeration,
//! the single/double-edge tree encoding, exact generating functions, and
//! closed-form counts.

pub mod closed;
pub mod path;
pub mod series;
pub mod tree;
pub mod verify;

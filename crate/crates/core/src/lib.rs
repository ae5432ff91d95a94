//! Finite skew braces: construction, ideals, radicals, Yang–Baxter maps,
//! enumeration up to isomorphism and a compact database format.

pub mod brace;
pub mod db;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod ideal;
pub mod mask;
pub mod perm;
pub mod radical;
mod text;

pub use brace::{socle, BraceDescriptor, SkewBrace};
pub use error::{Error, Result};
pub use group::{CayleyGroup, GroupDescriptor};
pub use mask::SubsetMask;
pub use perm::Permutation;

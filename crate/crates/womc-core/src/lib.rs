//! Coding primitives for write-once bit memories.
//!
//! A write-once memory is an array of cells that start at 0 and can only be
//! raised to 1, never cleared. Everything here is built from two layers:
//!
//! * a dense GF(2) linear-algebra kernel ([`bits`]) and binary field
//!   arithmetic ([`field`]) feeding a seeded ensemble of systematic
//!   matrices ([`wozencraft`]);
//! * encoders that spend that structure on multiple write rounds:
//!   two-round block codes ([`wom2`]), a three-symbol triplet code
//!   ([`rivest_shamir`]) extended to three rounds ([`wom3`]), writing
//!   around stuck cells ([`stuckat`]), and a two-round code whose decoder
//!   needs no side lookups ([`lookupfree`]).
//!
//! [`rate`] holds the closed-form rate and capacity curves the encoders are
//! measured against, and [`image`] the in-memory cell-array state shared by
//! every scheme.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
pub mod error;
pub mod field;
pub mod image;
pub mod lookupfree;
pub mod ranking;
pub mod rate;
pub mod rivest_shamir;
pub mod stuckat;
pub mod wom2;
pub mod wom3;
pub mod wozencraft;

pub use bits::{solve_constrained, BitMatrix, BitVector, IndexSet};
pub use error::Error;
pub use field::FieldElement;
pub use image::{MemoryImage, Scheme};
pub use wozencraft::WozParams;

/// Shorthand for results carrying this crate's [`Error`].
pub type Result<T> = core::result::Result<T, Error>;

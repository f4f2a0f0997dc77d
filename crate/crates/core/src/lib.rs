//! Exact combinatorics of double Bruhat graphs and affine Deligne-Lusztig
//! varieties for split reductive groups.
//!
//! The crate provides, over any finite Cartan type of rank at most 8:
//!
//! - root systems, Weyl groups and Bruhat order ([`rootsys`]);
//! - the extended affine Weyl group with its length functionals and
//!   length-positive sets ([`affine`]);
//! - reflection orders on the positive roots ([`reforder`]);
//! - increasing labelled paths in the double Bruhat graph and their weight
//!   multisets ([`dbg`]);
//! - the quantum Bruhat graph and its embedding into the double Bruhat
//!   graph ([`qbg`]);
//! - admissible types, the types/paths bijection and semi-infinite orbit
//!   intersection censuses ([`admtypes`]);
//! - non-emptiness, dimension and top-component counts of affine
//!   Deligne-Lusztig varieties for integral classes ([`adlv`]);
//! - exhaustive verification batteries for all of the above ([`verify`]).
//!
//! All arithmetic is exact; `2ρ` and `2ρ∨` are kept doubled so that every
//! pairing stays in the integers.

pub mod admtypes;
pub mod affine;
pub mod dbg;
pub mod error;
pub mod qbg;
pub mod reforder;
pub mod rootsys;

pub use affine::{AffineElement, AffineRoot};
pub use error::{Error, Result};
pub use rootsys::{build_root_system, CartanLabel, Coweight, Root, RootSystem, WeylElement};

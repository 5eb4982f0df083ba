//! Intuitionistic fuzzy soft sets over finite universes.
//!
//! The crate provides:
//! - dual t-norm/t-conorm pairs and the value algebra ([`algebra`]),
//! - soft sets with intersection, union and subset tests ([`softset`]),
//! - cartesian products, soft relations, inverse, composition and powers
//!   ([`relation`]),
//! - symmetric/transitive/reflexive/equivalence predicates plus a
//!   law-verification engine with deterministic counterexample search
//!   ([`laws`]),
//! - JSON interchange and the `ifss` command line ([`io`], [`cli`]).

pub mod algebra;
pub mod cli;
mod error;
pub mod io;
pub mod laws;
pub mod relation;
pub mod softset;

pub use algebra::{IFValue, NormPair, TconormKind, TnormKind, UnitScalar, EPS_CMP, EPS_CONSTRAINT};
pub use error::Error;
pub use relation::{IFSoftRelation, ParamPair};
pub use softset::{IFSet, IFSoftSet, Universe};

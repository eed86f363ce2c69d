//! Exact-arithmetic sliceness obstructions for winding-number satellites
//! in S1 x S2.
//!
//! The library computes Levine-Tristram signatures of knots given by Seifert
//! matrices, evaluated at exact roots of unity, and combines them with
//! surgery-presentation homology and a Casson-Gordon style signature bound to
//! produce machine-checkable non-sliceness certificates for satellites
//! `K_w(J)` of winding number `w`. Every comparison that decides a result is
//! exact: integers and rationals are arbitrary precision, cyclotomic numbers
//! are polynomial residues with exact zero tests, and real signs are certified
//! by adaptive-precision interval enclosures that fall back to exact
//! arithmetic whenever an enclosure is inconclusive.

pub mod arith;
pub mod branched;
pub mod catalog;
pub mod cyclotomic;
pub mod error;
pub mod hermitian;
pub mod interval;
pub mod matrix;
pub mod obstruct;
pub mod reproduce;
pub mod root;
pub mod signature;
pub mod smith;
pub mod surgery;

pub use error::Error;

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

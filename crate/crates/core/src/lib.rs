//! Skew polynomial rings `S[t; sigma, delta]` over small finite commutative
//! rings, their nonassociative Petit quotient algebras, the skew polycyclic
//! codes they carry, and the equivalence and isometry classification of
//! code classes.
//!
//! Everything is exact and exhaustive; ring and enumeration sizes are capped
//! so that every search either finishes or refuses up front.

pub mod catalogue;
pub mod classify;
pub mod codes;
pub mod coeffring;
pub mod error;
pub mod job;
pub mod matrix;
pub mod petit;
pub mod skewpoly;
pub mod verify;

pub use coeffring::{Automorphism, Elem, RingContext};
pub use error::{Error, Result};
pub use skewpoly::{Derivation, SkewPoly, TwistContext};

//! Exact numerical intersection theory for projectivized parabolic bundles
//! over smooth projective curves.
//!
//! Given the numerical data of a parabolic vector bundle — rank, underlying
//! degree, and rational weights with multiplicities at finitely many marked
//! points — this crate computes, in exact rational arithmetic:
//!
//! * parabolic degree, slope, level, and Harder-Narasimhan data
//!   ([`bundle`]);
//! * the numerical intersection ring of the projectivization, generated by
//!   the tautological class and the fiber class ([`ring`]);
//! * the nef and pseudo-effective cones of cycle classes in every grade,
//!   their duality under the intersection pairing, and the semistability
//!   criterion equating the upper effective and nef cones ([`cone`]);
//! * an independent cross-check of all cone formulas through a Galois cover
//!   on which the parabolic structure becomes an honest bundle ([`oracle`]).
//!
//! [`corpus`] provides deterministic random sample data for test suites.

pub mod arith;
pub mod bundle;
pub mod cone;
pub mod corpus;
pub mod error;
pub mod oracle;
pub mod ring;

pub use arith::Rat;
pub use error::{Error, Result};

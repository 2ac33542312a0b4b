//! Exact integer, rational and integer-polynomial arithmetic.

pub mod cyclotomic;
pub mod numtheory;
pub mod poly;
pub mod rational;
pub mod residues;

pub use cyclotomic::{cyclotomic, vanishes_at_primitive_root, CyclotomicCache};
pub use poly::IntegerPolynomial;
pub use rational::{Rational, RationalInterval};
pub use residues::{mask_zero_residues, symbol_vanishes_at_rational, ZeroResidues};

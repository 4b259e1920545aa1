//! Exact computations around the categorical boson–fermion correspondence:
//! charged sequences and partitions, Clifford and Heisenberg actions on the
//! two Fock spaces, symmetric-group representations in a rescaled
//! Vershik–Okounkov basis, the quiver algebra of Young's lattice with its
//! projective resolutions, and the coefficient comparison between the
//! bosonic and fermionic restriction maps.
//!
//! Every scalar is a [`Rational`](rational::Rational); nothing is floating point.

pub mod bf;
pub mod error;
pub mod fock;
pub mod heisenberg;
pub mod lincomb;
pub mod matrix;
pub mod partition;
pub mod quiver;
pub mod rational;
pub mod sequence;
pub mod verify;
pub mod vershik_okounkov;

pub use error::{Error, Result};
pub use lincomb::{FockVector, LinearCombination, SchurVector};
pub use matrix::RationalMatrix;
pub use partition::{Cell, Partition};
pub use rational::Rational;
pub use sequence::ChargedSequence;

//! Exact laboratory for Plünnecke-type sumset inequalities on abelian groups.
//!
//! Everything in this crate is `no_std` + `alloc`: finite abelian groups and
//! their subsets as dense bit-sets, eventually-periodic subsets of the
//! integers with exact Banach densities, finite measure-preserving actions,
//! magnification ratios computed by parametric min-cut, character sums, and
//! an inequality harness that checks each statement with exact rationals.
//!
//! IO, file formats and the command-line front end live in `plunnecke-lab`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod campaign;
pub mod correspondence;
mod error;
pub mod flow;
pub mod group;
pub mod gspace;
pub mod levelset;
pub mod magnification;
pub mod rational;
pub mod spectral;
pub mod verify;
pub mod zdensity;

pub use bitset::BitSet;
pub use error::Error;
pub use group::{FiniteSet, GroupSpec};
pub use gspace::{ActionSystem, StateSubset};
pub use magnification::{MagnificationResult, Method};
pub use rational::Rational;
pub use zdensity::{Tail, ZSetDesc};

pub type Result<T, E = Error> = core::result::Result<T, E>;

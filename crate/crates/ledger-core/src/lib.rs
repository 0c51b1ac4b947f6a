//! Exact period ledger for motives of the form M ⊗ RM(χ) attached to unitary
//! groups: Laurent-polynomial determinant identities, Hodge and Weyl
//! combinatorics, critical integers, and ℤ-lattice derivations of period
//! relations up to units.
#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod symlaurent;

pub use error::{Error, Result};
pub mod critical_values;
pub mod hecke_cm;
pub mod hodge_periods;
pub mod proof_engine;
pub mod weights;

//! Symbolic verification of the period factorizations and the lattice
//! derivations of the main L-value formulas.

pub mod derive;
pub mod ledger;
pub mod report;
pub mod verify;

pub use derive::*;
pub use ledger::{lattice_check, Axiom, Grade, LatticeOutcome, PeriodExpr, PeriodSym, Sign};
pub use report::{Step, Verdict};
pub use verify::*;

//! Scenario files, reports and parameter sweeps on top of `period-ledger-core`.

pub mod critical;
pub mod records;
pub mod scenario;
pub mod sweep;
pub mod weyl;

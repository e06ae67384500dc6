//! Orchestration: run configurations, the assertion ledger, and report
//! assembly.

mod checks;
mod config;
mod report;

pub use checks::*;
pub use config::*;
pub use report::*;

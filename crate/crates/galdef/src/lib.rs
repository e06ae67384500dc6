//! Verification engine for explicit local models of Galois deformation
//! rings: affine Weyl combinatorics, character-lattice arithmetic, the
//! universal gauge charts, mechanically derived determinant/monodromy
//! ideals, and an orchestrated assertion ledger with structured reports.

pub mod chars;
pub mod charts;
pub mod monodromy;
pub mod verify;
pub mod weyl;

//! Reed-Solomon lattices at desk scale: exact construction of the lattice
//! L_{q,k}, brute-force minimum-distance certificates, exact point counts
//! for power-sum varieties over F_q and small extensions, empirical bound
//! checks, locally dense gadget certification with projection-fiber
//! witnesses, and explicit Reed-Solomon list-decoding configurations.
//!
//! Everything is computed in exact arithmetic: field elements as canonical
//! residues, counts as big integers, parameters as big rationals. Floating
//! point appears only in the (diagnostic) dimension estimates.

pub mod algebra;
pub mod budget;
pub mod error;
pub mod gadget;
pub mod listdec;
pub mod rslattice;
pub mod varieties;

pub use budget::Budgets;
pub use error::{Error, Result};

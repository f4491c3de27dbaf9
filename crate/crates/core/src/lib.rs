//! Exact computations on oriented matroids: covectors and flags, Salvetti
//! complexes, Orlik–Solomon and Cordovil duals, the Varchenko–Gelfand,
//! Quillen and Kalinin filtrations of the tope space, and the sign cosheaf
//! on the matroid fan.

pub mod algebras;
pub mod cli;
pub mod corpus;
pub mod cosheaf;
pub mod error;
pub mod filtrations;
pub mod linalg;
pub mod om;
pub mod report;
pub mod salvetti;

pub use error::{Error, Result};

pub mod arrangement;
pub mod flags;
pub mod io;
pub mod matroid;
pub mod sign;

pub use arrangement::Arrangement;
pub use flags::{enumerate_flags, initial_matroid, tope_flag_set, Flag};
pub use matroid::{check_covector_axioms, Axiom, AxiomReport, OrientedMatroid};
pub use sign::{Mask, Sign, SignVector};

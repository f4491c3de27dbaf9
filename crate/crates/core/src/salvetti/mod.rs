pub mod coarse;
pub mod cochain;
pub mod fine;

pub use coarse::{Cell, SalvettiComplex};
pub use cochain::bz_cochain_eval;
pub use fine::{FineSalvetti, IntegralHomology};

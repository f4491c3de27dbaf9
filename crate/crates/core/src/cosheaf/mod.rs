//! The matroid fan, the sign cosheaf with its Varchenko–Gelfand filtration,
//! the Cordovil cosheaves, and the stalkwise exact sequences between them.

pub mod fan;
pub mod obstruction;
pub mod stalks;
pub mod verify;

pub use fan::{difference_sets, fan_cones, flag_lift, ConeSummary, FanCone};
pub use obstruction::{lifting_system, LiftTarget, LiftingReport};
pub use stalks::{
    cosheaf_map, functorial, stalk_topes_match, verify_naturality, verify_ses, CosheafKind,
    NaturalityReport, SesReport, Stalk,
};
pub use verify::{verify_cosheaf, CosheafReport};

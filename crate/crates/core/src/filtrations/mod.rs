//! Filtrations of the tope space: Varchenko–Gelfand (`P_p`), Quillen (`Q_p`) and
//! Kalinin (`K_p`), with the maps `qbv_p`, `bv_p` and `ã_p`.

pub mod heaviside;
pub mod kalinin;
pub mod maps;
pub mod prefix;
pub mod quillen;
pub mod verify;

pub use heaviside::{
    asymptotic_filtration, asymptotic_member, evaluation_matrix, heaviside_eval, in_vg_lower,
    vg_lower_mod2, vg_lower_z,
};
pub use kalinin::{
    brick, brick_mod2, kalinin_k, prefix_certificate, viro_bv, KalininCertificate, ViroSolver,
};
pub use maps::{tilde_a, tilde_a_unchecked, TildeA};
pub use prefix::{
    affine_coordinate_chain, affine_set, all_prefix_specs, chain_mod2, prefix_chain, tope_chain,
    vg_lower_by_prefix, PrefixSpec,
};
pub use quillen::{
    affine_generators, qbv, quillen_q, quillen_q_exhaustive, quillen_z_demo, quillen_z_power,
    AffineGenerator, QuillenMap, QuillenZDemo,
};
pub use verify::{
    verify_cochain_pairing, verify_cochain_pairing_in_degrees, verify_filtrations_agree,
    FiltrationReport, PairingReport,
};

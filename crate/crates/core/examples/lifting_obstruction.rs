//! An integer system asking for one map on tope chains of U(2,3) that restricts
//! to a lift of qbv_1 on every stalk. It has no solution when the stalks carry
//! the Orlik–Solomon lattices and one when they carry the Cordovil lattices.
//!
//! cargo run --example lifting_obstruction

use tope_filtrations::corpus::builtin;
use tope_filtrations::cosheaf::{lifting_system, LiftTarget};
use tope_filtrations::om::enumerate_flags;

fn main() -> tope_filtrations::Result<()> {
    let m = builtin("u23").expect("builtin").load().matroid;
    let flags = enumerate_flags(&m, true);
    for target in [LiftTarget::OrlikSolomon, LiftTarget::Cordovil] {
        let rep = lifting_system(&m, &flags, target)?;
        println!(
            "{:?}: {} equations in {} unknowns over {} flags, feasible: {}",
            rep.target,
            rep.equations,
            rep.unknowns,
            rep.flags.len(),
            rep.feasible
        );
    }
    let one = lifting_system(&m, &flags[..1], LiftTarget::OrlikSolomon)?;
    println!("a single flag alone: feasible: {}", one.feasible);
    Ok(())
}

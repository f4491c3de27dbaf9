//! Prefix chains of U(2,3), their bricks, and the Viro homomorphism computed
//! by solving for a Kalinin certificate.
//!
//! cargo run --example viro

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tope_filtrations::corpus::builtin;
use tope_filtrations::filtrations::{
    brick, chain_mod2, prefix_certificate, prefix_chain, PrefixSpec, ViroSolver,
};
use tope_filtrations::om::{Flag, SignVector};
use tope_filtrations::report::format_chain;
use tope_filtrations::salvetti::SalvettiComplex;

fn main() -> tope_filtrations::Result<()> {
    let m = builtin("u23").expect("builtin").load().matroid;
    let coarse = SalvettiComplex::build(&m);
    let flag = Flag::new(&m, vec![0, 0b001, 0b111])?;
    let origin = SignVector::parse("+++")?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);

    for p in 1..=2 {
        let spec = PrefixSpec::new(&m, flag.clone(), origin, p)?;
        let gamma = prefix_chain(&m, &spec);
        println!("prefix chain p={p}: {}", format_chain(&m, &gamma));
        let terms: Vec<String> = brick(&spec)
            .iter()
            .map(|(c, k)| format!("{k:+} {c:?}"))
            .collect();
        println!("  brick: {}", terms.join(" "));

        let cert = prefix_certificate(&m, &coarse, &spec);
        println!(
            "  closed-form certificate verifies: {}",
            cert.verify(&coarse)
        );

        let viro = ViroSolver::new(&coarse, p)?;
        let (cycle, _) = viro.bv(&chain_mod2(&gamma), &mut rng)?;
        println!("  bv_{p}: {:?}", coarse.support(p, &cycle));
        println!(
            "  homologous to the brick: {}",
            coarse.homologous(p, &cycle, &cert.cycle(&coarse))
        );
    }
    Ok(())
}

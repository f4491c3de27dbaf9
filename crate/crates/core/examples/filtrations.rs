//! The Quillen, Varchenko–Gelfand and Kalinin filtrations of the tope space,
//! degree by degree, with their successive quotients.
//!
//! cargo run --example filtrations -- u34

use tope_filtrations::algebras::ElementOrder;
use tope_filtrations::corpus::load;
use tope_filtrations::filtrations::{asymptotic_filtration, verify_filtrations_agree, vg_lower_z};
use tope_filtrations::salvetti::SalvettiComplex;

fn main() -> tope_filtrations::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "u34".into());
    let (name, parsed) = load(&input)?;
    let m = parsed.matroid;
    let coarse = SalvettiComplex::build(&m);
    let rep = verify_filtrations_agree(&m, &coarse, &ElementOrder::identity(m.ground_size()));

    println!("{name}");
    println!(" p  dim Q  dim P̄  dim K  rank P  asymptotic = P");
    for p in 0..=m.rank() + 1 {
        let asym = asymptotic_filtration(&m, p).equals(&vg_lower_z(&m, p))?;
        println!(
            "{p:>2} {:>6} {:>6} {:>6} {:>7}  {asym}",
            rep.quillen[p], rep.vg_mod2[p], rep.kalinin[p], rep.vg_rank[p]
        );
    }
    println!(
        "Betti numbers {:?}, NBC counts {:?}",
        rep.betti_mod2, rep.nbc
    );
    println!("filtrations coincide: {}", rep.pass());
    Ok(())
}

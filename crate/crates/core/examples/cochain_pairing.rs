//! Evaluates the cochains c^S on Viro cycles and compares them with the
//! Quillen map into the exterior algebra, over every prefix chain.
//!
//! cargo run --release --example cochain_pairing -- a3 --order 6,5,4,3,2,1

use tope_filtrations::algebras::ElementOrder;
use tope_filtrations::corpus::load;
use tope_filtrations::filtrations::verify_cochain_pairing;
use tope_filtrations::salvetti::{FineSalvetti, SalvettiComplex};

fn main() -> tope_filtrations::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let input = args.first().cloned().unwrap_or_else(|| "u34".into());
    let (name, parsed) = load(&input)?;
    let m = parsed.matroid;
    let order = match args.iter().position(|a| a == "--order") {
        Some(i) => ElementOrder::parse(&args[i + 1], m.ground_size())?,
        None => ElementOrder::identity(m.ground_size()),
    };
    let coarse = SalvettiComplex::build(&m);
    let fine = FineSalvetti::from_coarse(&coarse);
    let rep = verify_cochain_pairing(&m, &coarse, &fine, &order, 0)?;
    println!("{name}: prefix chains per degree {:?}", rep.generators);
    println!(
        "{} comparisons, {} failures",
        rep.comparisons,
        rep.failures.len()
    );
    for f in rep.failures.iter().take(5) {
        println!("  {f}");
    }
    Ok(())
}

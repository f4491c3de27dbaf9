//! Coarse and fine Salvetti complexes: cell counts, homology over Z/2 and Z,
//! and the conjugation involution.
//!
//! cargo run --example salvetti -- a3

use tope_filtrations::corpus::load;
use tope_filtrations::salvetti::{FineSalvetti, SalvettiComplex};

fn main() -> tope_filtrations::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "u23".into());
    let (name, parsed) = load(&input)?;
    let m = parsed.matroid;

    let coarse = SalvettiComplex::build(&m);
    println!("{name}: coarse cells {:?}", coarse.cell_counts());
    println!("mod-2 Betti numbers {:?}", coarse.betti_numbers_mod2());
    println!("Euler characteristic {}", coarse.euler_characteristic());
    println!(
        "conjugation fixes {} cells, one per tope",
        coarse.fixed_cells().len()
    );

    let fine = FineSalvetti::from_coarse(&coarse);
    println!("fine simplices {:?}", fine.simplex_counts());
    for p in 0..=fine.top_dim() {
        let h = fine.homology_z(p);
        println!("H_{p}(Z): rank {}, torsion {:?}", h.rank, h.torsion);
    }
    Ok(())
}

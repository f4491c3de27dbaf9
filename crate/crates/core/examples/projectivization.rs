//! The quotient of A_p by the image of antipodal differences, degree by degree.
//!
//! cargo run --example projectivization -- a3

use tope_filtrations::algebras::{projectivize, ElementOrder};
use tope_filtrations::corpus::load;

fn main() -> tope_filtrations::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "u34".into());
    let (name, parsed) = load(&input)?;
    let m = parsed.matroid;
    let order = ElementOrder::identity(m.ground_size());
    println!("{name}");
    for p in 0..=m.rank() {
        let q = projectivize(&m, &order, p)?;
        println!(
            "p={p}: rank A {}, rank B {}, quotient Z^{} ⊕ {:?}, mod-2 dim {} (NBC avoiding min: {})",
            q.rank_a, q.rank_b, q.free_rank, q.torsion, q.dim_mod2, q.nbc_avoiding_min
        );
    }
    Ok(())
}

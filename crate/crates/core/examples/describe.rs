//! Covectors, flats and NBC sets of an arrangement given by its normals,
//! and of the same oriented matroid read back from its covector list.
//!
//! cargo run --example describe

use tope_filtrations::algebras::{nbc_sets, ElementOrder};
use tope_filtrations::om::io::{parse_arrangement, parse_covectors};
use tope_filtrations::om::sign::mask_label;

fn main() -> tope_filtrations::Result<()> {
    // three lines through the origin of Q^2
    let arrangement = parse_arrangement("3 2\n1 0\n0 1\n-1 1\n")?;
    let m = arrangement.oriented_matroid()?;
    println!("rank {} on {} elements", m.rank(), m.ground_size());
    println!(
        "{} covectors, {} topes",
        m.covectors().len(),
        m.topes().len()
    );
    for k in 0..=m.rank() {
        let flats: Vec<String> = m.flats_of_rank(k).map(mask_label).collect();
        println!("flats of rank {k}: {}", flats.join(" "));
    }
    let order = ElementOrder::identity(m.ground_size());
    for p in 0..=m.rank() {
        let nbc: Vec<String> = nbc_sets(&m, &order, p)
            .into_iter()
            .map(mask_label)
            .collect();
        println!("NBC_{p}: {}", nbc.join(" "));
    }

    let listed: String = m.covectors().iter().map(|c| format!("{c}\n")).collect();
    let again = parse_covectors(&listed)?;
    assert_eq!(again.topes(), m.topes());
    println!("covector list round-trips");

    // a sign set that is not closed under composition
    match parse_covectors("00\n+0\n-0\n0+\n0-\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

//! The matroid fan, the stalks of the sign cosheaf, and the exact sequences
//! 0 → P_{p+1} → P_p → A_p → 0 at every cone.
//!
//! cargo run --example cosheaf -- u34

use tope_filtrations::corpus::load;
use tope_filtrations::cosheaf::{fan_cones, verify_cosheaf, verify_ses, Stalk};

fn main() -> tope_filtrations::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "u23".into());
    let (name, parsed) = load(&input)?;
    let m = parsed.matroid;

    for cone in fan_cones(&m) {
        let stalk = Stalk::new(&m, &cone.flag)?;
        let ranks: Vec<String> = (0..=m.rank())
            .map(|p| {
                let r = verify_ses(&stalk, p)?;
                Ok(format!("{}→{}→{}", r.rank_next, r.rank_p, r.rank_a))
            })
            .collect::<tope_filtrations::Result<_>>()?;
        println!(
            "cone {:<24} dim {} stalk {:>2} topes  {}",
            cone.label(),
            cone.dim(),
            stalk.matroid.topes().len(),
            ranks.join("  ")
        );
    }

    let degrees: Vec<usize> = (0..=m.rank()).collect();
    let rep = verify_cosheaf(&m, &degrees)?;
    println!(
        "{name}: {} sequences, {} squares, {} compositions, {} failures",
        rep.sequences.len(),
        rep.squares.len(),
        rep.compositions,
        rep.failures.len()
    );
    Ok(())
}

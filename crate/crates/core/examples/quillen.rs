//! The Quillen filtration mod 2, the map qbv into the exterior algebra, and the
//! powers of the augmentation ideal over Z, which never stabilise.
//!
//! cargo run --example quillen

use tope_filtrations::corpus::builtin;
use tope_filtrations::filtrations::{
    chain_mod2, prefix_chain, quillen_q, quillen_q_exhaustive, quillen_z_demo, PrefixSpec,
    QuillenMap,
};
use tope_filtrations::om::sign::mask_label;
use tope_filtrations::om::{Flag, SignVector};

fn main() -> tope_filtrations::Result<()> {
    let m = builtin("u23").expect("builtin").load().matroid;
    for p in 0..=m.rank() + 1 {
        let q = quillen_q(&m, p);
        let all = quillen_q_exhaustive(&m, p);
        println!(
            "dim Q_{p} = {} (all affine subspaces: {})",
            q.dim(),
            all.dim()
        );
    }

    let flag = Flag::new(&m, vec![0, 0b001, 0b111])?;
    let origin = SignVector::parse("+++")?;
    for p in 1..=2 {
        let gamma = prefix_chain(&m, &PrefixSpec::new(&m, flag.clone(), origin, p)?);
        let map = QuillenMap::new(&m, p);
        let image = map.qbv(&chain_mod2(&gamma))?;
        let terms: Vec<String> = map
            .subsets()
            .iter()
            .enumerate()
            .filter(|&(k, _)| image.get(k))
            .map(|(_, &s)| format!("e{}", mask_label(s)))
            .collect();
        println!("qbv_{p} of the prefix chain: {}", terms.join(" + "));
    }

    let u22 = builtin("u22").expect("builtin").load().matroid;
    for p in 1..=3 {
        let d = quillen_z_demo(&u22, p);
        println!(
            "U(2,2): I^{p} has rank {}, I^{} sits in it with invariants {:?}",
            d.rank,
            p + 1,
            d.next_index
        );
    }
    Ok(())
}

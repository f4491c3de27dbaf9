use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebras::{nbc_sets, ElementOrder};
use crate::error::Result;
use crate::om::sign::mask_label;
use crate::om::OrientedMatroid;
use crate::salvetti::{bz_cochain_eval, FineSalvetti, SalvettiComplex};

use super::heaviside::{vg_lower_mod2, vg_lower_z};
use super::kalinin::{kalinin_k, ViroSolver};
use super::prefix::{all_prefix_specs, chain_mod2, prefix_chain};
use super::quillen::{quillen_q, QuillenMap};

/// Dimensions of `Q_p`, `P̄_p`, `K_p` and `P_p` for `p = 0..=rank+1`, and whether
/// the three mod-2 filtrations coincide.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FiltrationReport {
    pub quillen: Vec<usize>,
    pub vg_mod2: Vec<usize>,
    pub kalinin: Vec<usize>,
    pub vg_rank: Vec<usize>,
    pub betti_mod2: Vec<usize>,
    pub nbc: Vec<usize>,
    pub chain_of_inclusions: bool,
    pub equal: bool,
    /// Every successive quotient has dimension `b_p`.
    pub bookkeeping: bool,
    pub discrepancy: Option<String>,
}

impl FiltrationReport {
    pub fn pass(&self) -> bool {
        self.equal && self.chain_of_inclusions && self.bookkeeping
    }
}

fn diffs(v: &[usize]) -> Vec<usize> {
    v.windows(2).map(|w| w[0].saturating_sub(w[1])).collect()
}

pub fn verify_filtrations_agree(
    m: &OrientedMatroid,
    coarse: &SalvettiComplex,
    order: &ElementOrder,
) -> FiltrationReport {
    let r = m.rank();
    let mut rep = FiltrationReport {
        quillen: Vec::new(),
        vg_mod2: Vec::new(),
        kalinin: Vec::new(),
        vg_rank: Vec::new(),
        betti_mod2: coarse.betti_numbers_mod2(),
        nbc: (0..=r).map(|p| nbc_sets(m, order, p).len()).collect(),
        chain_of_inclusions: true,
        equal: true,
        bookkeeping: true,
        discrepancy: None,
    };
    for p in 0..=r + 1 {
        let q = quillen_q(m, p);
        let pz = vg_lower_z(m, p);
        let pbar = vg_lower_mod2(m, p);
        let k = kalinin_k(coarse, p);
        rep.quillen.push(q.dim());
        rep.vg_mod2.push(pbar.dim());
        rep.kalinin.push(k.dim());
        rep.vg_rank.push(pz.rank());
        let incl = q.is_subspace_of(&pbar) && pbar.is_subspace_of(&k);
        let eq = incl && q.dim() == k.dim();
        if !incl {
            rep.chain_of_inclusions = false;
        }
        if !eq {
            rep.equal = false;
            if rep.discrepancy.is_none() {
                rep.discrepancy = Some(format!(
                    "p={p}: dim Q={}, dim P̄={}, dim K={}, inclusions {}",
                    q.dim(),
                    pbar.dim(),
                    k.dim(),
                    if incl { "hold" } else { "fail" }
                ));
            }
        }
    }
    let b = &rep.betti_mod2;
    rep.bookkeeping = diffs(&rep.quillen) == *b
        && diffs(&rep.kalinin) == *b
        && diffs(&rep.vg_rank) == *b
        && diffs(&rep.vg_mod2) == *b
        && rep.nbc == *b;
    if !rep.bookkeeping && rep.discrepancy.is_none() {
        rep.discrepancy = Some("successive quotients differ from the Betti numbers".into());
    }
    rep
}

/// Comparison of `c^S(bv_p(γ))` with the `S`-coefficient of `qbv_p(γ)` over all
/// prefix chains `γ` and NBC sets `S`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PairingReport {
    pub degrees: Vec<usize>,
    /// Number of prefix chains checked in each degree.
    pub generators: Vec<usize>,
    pub comparisons: usize,
    pub failures: Vec<String>,
}

impl PairingReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_cochain_pairing(
    m: &OrientedMatroid,
    coarse: &SalvettiComplex,
    fine: &FineSalvetti,
    order: &ElementOrder,
    seed: u64,
) -> Result<PairingReport> {
    let degrees: Vec<usize> = (0..=m.rank()).collect();
    verify_cochain_pairing_in_degrees(m, coarse, fine, order, seed, &degrees)
}

/// [`verify_cochain_pairing`] restricted to the given degrees.
pub fn verify_cochain_pairing_in_degrees(
    m: &OrientedMatroid,
    coarse: &SalvettiComplex,
    fine: &FineSalvetti,
    order: &ElementOrder,
    seed: u64,
    degrees: &[usize],
) -> Result<PairingReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = PairingReport {
        degrees: degrees.to_vec(),
        generators: Vec::new(),
        comparisons: 0,
        failures: Vec::new(),
    };
    for &p in degrees {
        let viro = ViroSolver::new(coarse, p)?;
        let qmap = QuillenMap::new(m, p);
        let nbc = nbc_sets(m, order, p);
        let specs = all_prefix_specs(m, p);
        rep.generators.push(specs.len());
        for spec in &specs {
            let gamma = chain_mod2(&prefix_chain(m, spec));
            let (cycle, _) = viro.bv(&gamma, &mut rng)?;
            let fine_chain = fine.coarse_to_fine(m, coarse, p, &cycle);
            let wedge = qmap.qbv(&gamma)?;
            for &s in &nbc {
                let lhs = bz_cochain_eval(fine, &order.descending(s), p, &fine_chain)?;
                let k = qmap
                    .subsets()
                    .iter()
                    .position(|&x| x == s)
                    .expect("p-subset");
                let rhs = wedge.get(k);
                rep.comparisons += 1;
                if lhs != rhs {
                    rep.failures.push(format!(
                        "p={p} flag {} origin {} S={}: c^S = {}, qbv = {}",
                        spec.flag,
                        spec.origin,
                        mask_label(s),
                        lhs as u8,
                        rhs as u8
                    ));
                }
            }
        }
    }
    Ok(rep)
}

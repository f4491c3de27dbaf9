use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::Result;
use crate::filtrations::{tilde_a_unchecked, vg_lower_z};
use crate::linalg::{IntVector, LatticeZ};
use crate::om::OrientedMatroid;

use super::{cordovil_dual, nbc_sets, p_subsets, ElementOrder};

/// `A_p^pj = A_p / B_p` with `B_p = ã_p(Θ ∩ P_p)` and `Θ` spanned by `T − (−T)`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Projectivization {
    pub p: usize,
    pub rank_a: usize,
    pub rank_b: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    /// `dim (A_p / B_p) ⊗ Z/2`.
    pub dim_mod2: usize,
    /// Number of NBC sets of size `p` avoiding the minimal element.
    pub nbc_avoiding_min: usize,
    pub pass: bool,
}

pub fn antipodal_lattice(m: &OrientedMatroid) -> LatticeZ {
    let topes = m.topes();
    let gens: Vec<IntVector> = topes
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let mut v = vec![BigInt::from(0); topes.len()];
            v[i] += 1;
            v[m.tope_index(&t.neg())
                .expect("topes are closed under negation")] -= 1;
            v
        })
        .collect();
    LatticeZ::from_generators(topes.len(), &gens)
}

pub fn projectivize(
    m: &OrientedMatroid,
    order: &ElementOrder,
    p: usize,
) -> Result<Projectivization> {
    let subsets = p_subsets(m.ground_size(), p);
    let a = cordovil_dual(m, p)?;
    let theta_p = antipodal_lattice(m).intersection(&vg_lower_z(m, p));
    let images: Vec<IntVector> = theta_p
        .basis()
        .iter()
        .map(|g| {
            tilde_a_unchecked(m, g, p)
                .coordinates(&subsets)
                .expect("degree p")
        })
        .collect();
    let b = LatticeZ::from_generators(subsets.len(), &images);
    let quotient = b.quotient_invariants(&a)?;
    let min = order.minimum();
    let nbc_avoiding_min = nbc_sets(m, order, p)
        .into_iter()
        .filter(|s| min.is_none_or(|e| s >> e & 1 == 0))
        .count();
    let (free_rank, torsion, dim_mod2) = match &quotient {
        Some(q) => (
            q.free_rank,
            q.torsion.clone(),
            q.free_rank + q.torsion.iter().filter(|t| t.is_even()).count(),
        ),
        None => (0, Vec::new(), 0),
    };
    let pass = quotient.is_some()
        && if p.is_multiple_of(2) {
            b.rank() == 0
        } else {
            let twice: Vec<IntVector> = a
                .basis()
                .iter()
                .map(|v| v.iter().map(|x| x * 2).collect())
                .collect();
            LatticeZ::from_generators(subsets.len(), &twice).is_sublattice_of(&b)?
                && dim_mod2 == nbc_avoiding_min
        };
    Ok(Projectivization {
        p,
        rank_a: a.rank(),
        rank_b: b.rank(),
        free_rank,
        torsion: torsion.iter().map(ToString::to_string).collect(),
        dim_mod2,
        nbc_avoiding_min,
        pass,
    })
}

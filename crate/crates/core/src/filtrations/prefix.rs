use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{BitVec, IntVector, LatticeZ};
use crate::om::sign::Mask;
use crate::om::{enumerate_flags, tope_flag_set, Flag, OrientedMatroid, SignVector};

/// Data `(F, v, p)` of a prefix chain: a complete flag, an origin tope in `T_F`
/// and a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixSpec {
    pub flag: Flag,
    pub origin: SignVector,
    pub p: usize,
}

impl PrefixSpec {
    pub fn new(m: &OrientedMatroid, flag: Flag, origin: SignVector, p: usize) -> Result<Self> {
        if !flag.is_complete(m) {
            return Err(Error::NotAFlag(format!("{flag} is not complete")));
        }
        if !tope_flag_set(m, &flag).contains(&origin) {
            return Err(Error::TopeNotInFlag(origin.to_string()));
        }
        if p > m.rank() {
            return Err(Error::WrongDegree {
                expected: m.rank(),
                found: p,
            });
        }
        Ok(PrefixSpec { flag, origin, p })
    }

    pub fn steps(&self) -> Vec<usize> {
        (1..=self.p).collect()
    }

    /// `U_{F,v,p}` with the parity of each element's weight.
    pub fn affine_set(&self) -> Vec<(SignVector, bool)> {
        affine_set(&self.flag, &self.origin, &self.steps())
    }
}

/// `v + ⟨d_j : j ∈ steps⟩`, each tope with the parity of its weight; translation
/// by `d_j` flips the block `F_j ∖ F_{j−1}`.
pub fn affine_set(flag: &Flag, v: &SignVector, steps: &[usize]) -> Vec<(SignVector, bool)> {
    let k = steps.len();
    (0u64..1 << k)
        .map(|bits| {
            let flip: Mask = (0..k)
                .filter(|i| bits >> i & 1 == 1)
                .fold(0, |acc, i| acc | flag.block(steps[i]));
            (v.flip(flip), bits.count_ones() % 2 == 1)
        })
        .collect()
}

fn signed_chain(m: &OrientedMatroid, set: &[(SignVector, bool)]) -> IntVector {
    let mut chain = vec![BigInt::zero(); m.topes().len()];
    for (t, odd) in set {
        let i = m.tope_index(t).expect("affine set lies in T_F");
        let s = if *odd { -BigInt::one() } else { BigInt::one() };
        chain[i] += s;
    }
    chain
}

/// `γ_{F,v,p} = Σ_{u ∈ U_{F,v,p}} (−1)^{w(u)} T_u` in `Z[T(M)]`.
pub fn prefix_chain(m: &OrientedMatroid, spec: &PrefixSpec) -> IntVector {
    signed_chain(m, &spec.affine_set())
}

/// The affine coordinate chain of `v + ⟨d_i : i ∈ steps⟩` with signs relative to `v`.
pub fn affine_coordinate_chain(
    m: &OrientedMatroid,
    flag: &Flag,
    v: &SignVector,
    steps: &[usize],
) -> Result<IntVector> {
    if !tope_flag_set(m, flag).contains(v) {
        return Err(Error::TopeNotInFlag(v.to_string()));
    }
    Ok(signed_chain(m, &affine_set(flag, v, steps)))
}

/// All prefix data of degree `p`: every complete flag with every origin in `T_F`.
pub fn all_prefix_specs(m: &OrientedMatroid, p: usize) -> Vec<PrefixSpec> {
    let mut out = Vec::new();
    for flag in enumerate_flags(m, true) {
        for v in tope_flag_set(m, &flag) {
            out.push(PrefixSpec {
                flag: flag.clone(),
                origin: v,
                p,
            });
        }
    }
    out
}

/// Lattice spanned by all `p`-th prefix chains.
pub fn vg_lower_by_prefix(m: &OrientedMatroid, p: usize) -> LatticeZ {
    let gens: Vec<IntVector> = all_prefix_specs(m, p)
        .iter()
        .map(|s| prefix_chain(m, s))
        .collect();
    LatticeZ::from_generators(m.topes().len(), &gens)
}

pub fn chain_mod2(chain: &[BigInt]) -> BitVec {
    use num_integer::Integer;
    BitVec::from_bools(&chain.iter().map(|x| x.is_odd()).collect::<Vec<_>>())
}

/// Tope chain with the given topes (coefficient 1 each).
pub fn tope_chain(m: &OrientedMatroid, topes: &[(SignVector, i64)]) -> IntVector {
    let mut c = vec![BigInt::zero(); m.topes().len()];
    for (t, k) in topes {
        c[m.tope_index(t).expect("tope")] += *k;
    }
    c
}

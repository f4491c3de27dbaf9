//! Orlik–Solomon and Cordovil duals, NBC sets and the ε elements of prefix data.

pub mod circuits;
pub mod poly;
pub mod projective;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, IntVector, LatticeZ, SubspaceGF2};
use crate::om::sign::{mask_elements, Mask, Sign};
use crate::om::{tope_flag_set, Flag, OrientedMatroid, SignVector};

pub use circuits::{circuits, nbc_sets, signed_circuit, signed_circuits, ElementOrder};
pub use poly::{p_subsets, SquareFreePoly, WedgeP};
pub use projective::{projectivize, Projectivization};

/// Chains `F_1 < … < F_p` of flats with `rank F_i = i`.
pub fn rank_flags(m: &OrientedMatroid, p: usize) -> Vec<Vec<Mask>> {
    let mut chains: Vec<Vec<Mask>> = vec![Vec::new()];
    for r in 1..=p {
        let mut next = Vec::new();
        for c in &chains {
            let below = c.last().copied().unwrap_or(0);
            for f in m.flats_of_rank(r).filter(|f| below & !f == 0) {
                let mut c2 = c.clone();
                c2.push(f);
                next.push(c2);
            }
        }
        chains = next;
    }
    chains
}

fn os_generators(m: &OrientedMatroid, p: usize) -> Vec<WedgeP> {
    rank_flags(m, p)
        .iter()
        .map(|c| WedgeP::from_sets(m.ground_size(), c))
        .collect()
}

/// `OS_p` over Z inside `∧^p Z^E`, spanned by `e_{F_1} ∧ … ∧ e_{F_p}`.
pub fn os_dual_z(m: &OrientedMatroid, p: usize) -> LatticeZ {
    let subsets = p_subsets(m.ground_size(), p);
    let gens: Vec<IntVector> = os_generators(m, p)
        .iter()
        .map(|w| w.coordinates(&subsets))
        .collect();
    LatticeZ::from_generators(subsets.len(), &gens)
}

/// `OS_p` over Z/2.
pub fn os_dual_mod2(m: &OrientedMatroid, p: usize) -> SubspaceGF2 {
    let subsets = p_subsets(m.ground_size(), p);
    SubspaceGF2::from_generators(
        subsets.len(),
        os_generators(m, p).iter().map(|w| w.mod2(&subsets)),
    )
}

/// Degree-`p` part of the ideal generated by `∂C` over signed circuits `C`,
/// as rows in the `p`-subset coordinates.
pub fn cordovil_relations(m: &OrientedMatroid, p: usize) -> Result<Vec<IntVector>> {
    let n = m.ground_size();
    let subsets = p_subsets(n, p);
    let mut rows = Vec::new();
    for c in signed_circuits(m)? {
        let t = c.support().count_ones() as usize;
        if t == 0 || t - 1 > p {
            continue;
        }
        let mut dc = SquareFreePoly::zero();
        for i in mask_elements(c.support()) {
            let s = BigInt::from(c.get(i).as_i64());
            dc.add_term(c.support() & !(1 << i), s);
        }
        for mono in p_subsets(n, p - (t - 1)) {
            let r = SquareFreePoly::monomial(mono, BigInt::one()).mul(&dc);
            if !r.is_zero() {
                rows.push(r.coordinates(&subsets).expect("degree p"));
            }
        }
    }
    Ok(rows)
}

/// `A_p`: the annihilator of the degree-`p` relations under `⟨(x*)^S, x^T⟩ = δ_{S,T}`.
pub fn cordovil_dual(m: &OrientedMatroid, p: usize) -> Result<LatticeZ> {
    let dim = p_subsets(m.ground_size(), p).len();
    let rows = cordovil_relations(m, p)?;
    if rows.is_empty() {
        return Ok(LatticeZ::full(dim));
    }
    Ok(LatticeZ::kernel_of(&IntMatrix::from_rows(dim, &rows)))
}

/// `Π_{j ∈ steps} (Σ_{k ∈ F_j ∖ F_{j−1}} T_v(k) x_k)` for a flag and tope `T_v`.
pub fn affine_image(flag: &Flag, v: &SignVector, steps: &[usize]) -> SquareFreePoly {
    let mut out = SquareFreePoly::one();
    for &j in steps {
        let factor = SquareFreePoly::linear(mask_elements(flag.block(j)).map(|k| {
            let s = match v.get(k) {
                Sign::Plus => BigInt::one(),
                Sign::Minus => -BigInt::one(),
                Sign::Zero => BigInt::zero(),
            };
            (k, s)
        }));
        out = out.mul(&factor);
    }
    out
}

/// `ε_{F,v,p} = Π_{i=1}^p (Σ_{j ∈ F_i ∖ F_{i−1}} T_v(j) x_j)`.
pub fn epsilon(
    m: &OrientedMatroid,
    flag: &Flag,
    v: &SignVector,
    p: usize,
) -> Result<SquareFreePoly> {
    if !tope_flag_set(m, flag).contains(v) {
        return Err(Error::TopeNotInFlag(v.to_string()));
    }
    let steps: Vec<usize> = (1..=p).collect();
    Ok(affine_image(flag, v, &steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{builtin, CORPUS};
    use crate::linalg::int_vec;
    use crate::om::enumerate_flags;

    #[test]
    fn os_dual_of_u23() {
        let m = builtin("u23").unwrap().load().matroid;
        let l = os_dual_z(&m, 1);
        assert_eq!(l.rank(), 3);
        assert!(l.contains(&int_vec(&[1, 1, 1])).unwrap());
        assert_eq!(os_dual_z(&m, 0).rank(), 1);
        assert_eq!(os_dual_z(&m, 2).rank(), 2);
    }

    #[test]
    fn ranks_match_nbc_counts() {
        for e in CORPUS {
            let m = e.load().matroid;
            for p in 0..=m.rank() {
                let b = e.expected_betti[p];
                assert_eq!(os_dual_z(&m, p).rank(), b, "{} OS_{p}", e.name);
                assert_eq!(os_dual_mod2(&m, p).dim(), b, "{} OS_{p} mod 2", e.name);
                let a = cordovil_dual(&m, p).unwrap();
                assert_eq!(a.rank(), b, "{} A_{p}", e.name);
                assert!(a.is_saturated());
            }
        }
    }

    #[test]
    fn u23_cordovil_relations() {
        let m = builtin("u23").unwrap().load().matroid;
        // the single circuit has no degree-1 relations; degree 2 has x*_S for S ⊇ circuit minus one
        assert!(cordovil_relations(&m, 1).unwrap().is_empty());
        assert_eq!(cordovil_dual(&m, 1).unwrap().rank(), 3);
        assert_eq!(cordovil_relations(&m, 2).unwrap().len(), 1);
    }

    #[test]
    fn epsilon_examples() {
        let m = builtin("u23").unwrap().load().matroid;
        let f = Flag::new(&m, vec![0, 0b001, 0b111]).unwrap();
        let a = SignVector::parse("+++").unwrap();
        assert_eq!(epsilon(&m, &f, &a, 1).unwrap().to_string(), "x1");
        assert_eq!(epsilon(&m, &f, &a, 2).unwrap().to_string(), "x1x2 + x1x3");
        assert_eq!(epsilon(&m, &f, &a, 0).unwrap(), SquareFreePoly::one());
        let c = SignVector::parse("--+").unwrap();
        assert!(matches!(
            epsilon(&m, &f, &c, 1),
            Err(Error::TopeNotInFlag(_))
        ));
    }

    #[test]
    fn epsilon_lies_in_cordovil_dual() {
        for e in CORPUS {
            let m = e.load().matroid;
            for p in 0..=m.rank() {
                let a = cordovil_dual(&m, p).unwrap();
                let subsets = p_subsets(m.ground_size(), p);
                for f in enumerate_flags(&m, true) {
                    for v in tope_flag_set(&m, &f) {
                        let eps = epsilon(&m, &f, &v, p).unwrap();
                        assert!(a.contains(&eps.coordinates(&subsets).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebras::p_subsets;
use crate::linalg::{IntMatrix, IntVector, LatticeZ, SubspaceGF2};
use crate::om::sign::Mask;
use crate::om::OrientedMatroid;

/// `Σ_T γ(T) · Π_{e∈S} [T_e = +]`.
pub fn heaviside_eval(m: &OrientedMatroid, s: Mask, chain: &[BigInt]) -> BigInt {
    m.topes()
        .iter()
        .zip(chain)
        .filter(|(t, _)| t.plus() & s == s)
        .map(|(_, c)| c)
        .sum()
}

/// Square-free monomials of degree `< p`, by degree then lexicographically.
pub fn monomials_below(n: usize, p: usize) -> Vec<Mask> {
    (0..p.min(n + 1)).flat_map(|d| p_subsets(n, d)).collect()
}

/// Rows `h^S` for each monomial, columns indexed by topes.
pub fn evaluation_matrix(m: &OrientedMatroid, monomials: &[Mask]) -> IntMatrix {
    let rows: Vec<IntVector> = monomials
        .iter()
        .map(|&s| {
            m.topes()
                .iter()
                .map(|t| {
                    if t.plus() & s == s {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(m.topes().len(), &rows)
}

/// `P_p`: chains annihilated by every Heaviside monomial of degree `≤ p − 1`.
pub fn vg_lower_z(m: &OrientedMatroid, p: usize) -> LatticeZ {
    let n_topes = m.topes().len();
    if p == 0 {
        return LatticeZ::full(n_topes);
    }
    LatticeZ::kernel_of(&evaluation_matrix(m, &monomials_below(m.ground_size(), p)))
}

/// `P̄_p`, the reduction of `P_p` mod 2.
pub fn vg_lower_mod2(m: &OrientedMatroid, p: usize) -> SubspaceGF2 {
    vg_lower_z(m, p).mod2()
}

pub fn in_vg_lower(m: &OrientedMatroid, chain: &[BigInt], p: usize) -> bool {
    monomials_below(m.ground_size(), p)
        .into_iter()
        .all(|s| heaviside_eval(m, s, chain).is_zero())
}

/// Coefficient of `x^S` in `Σ_T γ(T) Π_{e : T_e ≠ T'_e} (1 + x_e)`.
fn asymptotic_coefficient(m: &OrientedMatroid, chain: &[BigInt], other: usize, s: Mask) -> BigInt {
    let t2 = m.topes()[other];
    m.topes()
        .iter()
        .zip(chain)
        .filter(|(t, _)| t.separation(&t2) & s == s)
        .map(|(_, c)| c)
        .sum()
}

/// No term of degree `< p` in any of the polynomials `B(γ, T')`.
pub fn asymptotic_member(m: &OrientedMatroid, chain: &[BigInt], p: usize) -> bool {
    let monomials = monomials_below(m.ground_size(), p);
    (0..m.topes().len()).all(|k| {
        monomials
            .iter()
            .all(|&s| asymptotic_coefficient(m, chain, k, s).is_zero())
    })
}

/// The lattice of all `γ` satisfying [`asymptotic_member`].
pub fn asymptotic_filtration(m: &OrientedMatroid, p: usize) -> LatticeZ {
    let topes = m.topes();
    if p == 0 {
        return LatticeZ::full(topes.len());
    }
    let monomials = monomials_below(m.ground_size(), p);
    let mut rows = Vec::new();
    for t2 in topes {
        for &s in &monomials {
            rows.push(
                topes
                    .iter()
                    .map(|t| {
                        if t.separation(t2) & s == s {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect(),
            );
        }
    }
    LatticeZ::kernel_of(&IntMatrix::from_rows(topes.len(), &rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{builtin, CORPUS};
    use crate::filtrations::prefix::tope_chain;
    use crate::linalg::smith_normal_form;
    use crate::om::SignVector;

    fn sv(s: &str) -> SignVector {
        SignVector::parse(s).unwrap()
    }

    #[test]
    fn evaluations() {
        let m = builtin("u23").unwrap().load().matroid;
        let a = tope_chain(&m, &[(sv("+++"), 1)]);
        assert_eq!(heaviside_eval(&m, 0b001, &a), BigInt::one());
        let ab = tope_chain(&m, &[(sv("+++"), 1), (sv("-++"), -1)]);
        assert_eq!(heaviside_eval(&m, 0, &ab), BigInt::zero());
        let g = tope_chain(
            &m,
            &[
                (sv("+++"), 1),
                (sv("-++"), -1),
                (sv("---"), 1),
                (sv("+--"), -1),
            ],
        );
        assert_eq!(heaviside_eval(&m, 0b011, &g), BigInt::one());
    }

    #[test]
    fn vg_ranks() {
        let m = builtin("u23").unwrap().load().matroid;
        let ranks: Vec<usize> = (0..=3).map(|p| vg_lower_z(&m, p).rank()).collect();
        assert_eq!(ranks, vec![6, 5, 2, 0]);
        let u11 = builtin("u11").unwrap().load().matroid;
        let ranks: Vec<usize> = (0..=2).map(|p| vg_lower_z(&u11, p).rank()).collect();
        assert_eq!(ranks, vec![2, 1, 0]);
    }

    #[test]
    fn first_step_is_augmentation_kernel() {
        for e in CORPUS {
            let m = e.load().matroid;
            let n = m.topes().len();
            let ones = IntMatrix::from_rows(n, &[vec![BigInt::one(); n]]);
            assert!(vg_lower_z(&m, 1)
                .equals(&LatticeZ::kernel_of(&ones))
                .unwrap());
        }
    }

    #[test]
    fn heaviside_polynomials_of_degree_at_most_rank_span_all_functions() {
        for e in CORPUS {
            let m = e.load().matroid;
            let ev = evaluation_matrix(&m, &monomials_below(m.ground_size(), m.rank() + 1));
            assert_eq!(smith_normal_form(&ev).rank(), m.topes().len(), "{}", e.name);
        }
    }

    #[test]
    fn asymptotic_examples() {
        let m = builtin("u23").unwrap().load().matroid;
        let a = tope_chain(&m, &[(sv("+++"), 1)]);
        assert!(!asymptotic_member(&m, &a, 1));
        let ab = tope_chain(&m, &[(sv("+++"), 1), (sv("-++"), -1)]);
        assert!(asymptotic_member(&m, &ab, 1));
        assert!(!asymptotic_member(&m, &ab, 2));
    }

    #[test]
    fn asymptotic_filtration_equals_vg_on_corpus() {
        for e in CORPUS {
            let m = e.load().matroid;
            for p in 0..=m.rank() + 1 {
                let vg = vg_lower_z(&m, p);
                assert!(
                    asymptotic_filtration(&m, p).equals(&vg).unwrap(),
                    "{} p={p}",
                    e.name
                );
                for b in vg.basis() {
                    assert!(asymptotic_member(&m, b, p));
                    assert!(in_vg_lower(&m, b, p));
                }
            }
        }
    }
}

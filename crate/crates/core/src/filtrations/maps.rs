use num_bigint::BigInt;

use crate::algebras::{p_subsets, SquareFreePoly};
use crate::error::{Error, Result};
use crate::linalg::{integer_kernel, IntMatrix, IntVector, LatticeZ};
use crate::om::OrientedMatroid;

use super::heaviside::{heaviside_eval, in_vg_lower, vg_lower_z};

/// `Σ_{|S|=p} h^S(γ) x^S` without the membership check.
pub fn tilde_a_unchecked(m: &OrientedMatroid, chain: &[BigInt], p: usize) -> SquareFreePoly {
    let mut out = SquareFreePoly::zero();
    for s in p_subsets(m.ground_size(), p) {
        out.add_term(s, heaviside_eval(m, s, chain));
    }
    out
}

/// `ã_p(γ)` for `γ ∈ P_p`.
pub fn tilde_a(m: &OrientedMatroid, chain: &[BigInt], p: usize) -> Result<SquareFreePoly> {
    if chain.len() != m.topes().len() {
        return Err(Error::DimensionMismatch {
            expected: m.topes().len(),
            found: chain.len(),
        });
    }
    if !in_vg_lower(m, chain, p) {
        return Err(Error::NotInFiltration { space: "P", p });
    }
    Ok(tilde_a_unchecked(m, chain, p))
}

/// `ã_p` restricted to `P_p`: its image and kernel as lattices.
#[derive(Clone, Debug)]
pub struct TildeA {
    pub p: usize,
    pub domain: LatticeZ,
    /// Rows are images of the domain basis in `p`-subset coordinates.
    pub matrix: IntMatrix,
}

impl TildeA {
    pub fn new(m: &OrientedMatroid, p: usize) -> Self {
        let domain = vg_lower_z(m, p);
        let subsets = p_subsets(m.ground_size(), p);
        let rows: Vec<IntVector> = domain
            .basis()
            .iter()
            .map(|b| {
                tilde_a_unchecked(m, b, p)
                    .coordinates(&subsets)
                    .expect("degree p")
            })
            .collect();
        TildeA {
            p,
            matrix: IntMatrix::from_rows(subsets.len(), &rows),
            domain,
        }
    }

    pub fn image(&self) -> LatticeZ {
        LatticeZ::from_generators(self.matrix.ncols(), &self.matrix.to_rows())
    }

    pub fn kernel(&self) -> LatticeZ {
        let n = self.domain.ambient_dim();
        if self.domain.rank() == 0 {
            return LatticeZ::zero(n);
        }
        let basis = IntMatrix::from_rows(n, self.domain.basis());
        let coeffs = integer_kernel(&self.matrix.transpose());
        let gens: Vec<IntVector> = coeffs.iter().map(|c| basis.vec_mul(c)).collect();
        LatticeZ::from_generators(n, &gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{affine_image, cordovil_dual, epsilon};
    use crate::corpus::{builtin, CORPUS};
    use crate::filtrations::prefix::{affine_coordinate_chain, all_prefix_specs, prefix_chain};
    use crate::om::{enumerate_flags, tope_flag_set};

    #[test]
    fn prefix_chains_map_to_epsilon() {
        for e in CORPUS {
            let m = e.load().matroid;
            for p in 0..=m.rank() {
                for spec in all_prefix_specs(&m, p) {
                    let g = prefix_chain(&m, &spec);
                    let eps = epsilon(&m, &spec.flag, &spec.origin, p).unwrap();
                    assert_eq!(tilde_a(&m, &g, p).unwrap(), eps, "{} {spec:?}", e.name);
                }
            }
        }
    }

    #[test]
    fn affine_chains_map_to_affine_images() {
        for e in CORPUS {
            let m = e.load().matroid;
            let r = m.rank();
            for flag in enumerate_flags(&m, true) {
                for v in tope_flag_set(&m, &flag) {
                    for p in 0..=r {
                        for steps in crate::om::arrangement::subsets_of_size(r, p) {
                            let steps: Vec<usize> = steps.iter().map(|i| i + 1).collect();
                            let g = affine_coordinate_chain(&m, &flag, &v, &steps).unwrap();
                            assert!(in_vg_lower(&m, &g, p));
                            assert_eq!(
                                tilde_a(&m, &g, p).unwrap(),
                                affine_image(&flag, &v, &steps)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn image_and_kernel() {
        for e in CORPUS {
            let m = e.load().matroid;
            for p in 0..=m.rank() {
                let t = TildeA::new(&m, p);
                assert!(
                    t.image().equals(&cordovil_dual(&m, p).unwrap()).unwrap(),
                    "{} p={p}",
                    e.name
                );
                assert!(
                    t.kernel().equals(&vg_lower_z(&m, p + 1)).unwrap(),
                    "{} p={p}",
                    e.name
                );
            }
        }
    }

    #[test]
    fn outside_the_filtration_is_rejected() {
        let m = builtin("u23").unwrap().load().matroid;
        let mut single = vec![BigInt::from(0); 6];
        single[0] = BigInt::from(1);
        assert!(tilde_a(&m, &single, 1).is_err());
        assert!(tilde_a(&m, &single, 0).is_ok());
    }
}

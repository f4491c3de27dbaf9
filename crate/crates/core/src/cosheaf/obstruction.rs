use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebras::{cordovil_dual, os_dual_z, p_subsets};
use crate::error::Result;
use crate::filtrations::{all_prefix_specs, chain_mod2, prefix_chain, QuillenMap};
use crate::linalg::{integer_kernel, solve_integer_system, IntMatrix, IntVector, LatticeZ};
use crate::om::{Flag, OrientedMatroid};

use super::stalks::Stalk;

/// Which degree-1 lattice the lifted maps must land in at each stalk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LiftTarget {
    OrlikSolomon,
    Cordovil,
}

/// Solvability of the system asking for one map `Φ : Z[T(M)] → Z^E` that, for each
/// given flag, sends `P_1(M_F)` into the target lattice of `M_F`, kills
/// `P_2(M_F)`, and agrees with `qbv_1` of `M_F` mod 2 on its prefix chains.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LiftingReport {
    pub target: LiftTarget,
    pub flags: Vec<String>,
    pub unknowns: usize,
    pub equations: usize,
    pub feasible: bool,
}

struct System {
    rows: Vec<IntVector>,
    rhs: Vec<BigInt>,
}

pub fn lifting_system(
    m: &OrientedMatroid,
    flags: &[Flag],
    target: LiftTarget,
) -> Result<LiftingReport> {
    let n = m.ground_size();
    let nt = m.topes().len();
    let subsets = p_subsets(n, 1);
    // Φ has nt·n entries, Φ[t][e] at t·n + e; parity slacks are appended as needed
    let mut sys = System {
        rows: Vec::new(),
        rhs: Vec::new(),
    };
    let mut slack_rows: Vec<usize> = Vec::new();
    let apply_row = |chain: &[BigInt], e: usize, width: usize| -> IntVector {
        let mut row = vec![BigInt::zero(); width];
        for (t, c) in chain.iter().enumerate() {
            row[t * n + e] = c.clone();
        }
        row
    };
    let phi = nt * n;
    for flag in flags {
        let stalk = Stalk::new(m, flag)?;
        let emb = &stalk.embedding;
        let lattice = match target {
            LiftTarget::OrlikSolomon => os_dual_z(&stalk.matroid, 1),
            LiftTarget::Cordovil => cordovil_dual(&stalk.matroid, 1)?,
        };
        debug_assert!(lattice.is_saturated());
        // w · Φ(γ) = 0 for every w orthogonal to the target lattice
        let annihilator = if lattice.rank() == 0 {
            IntMatrix::identity(n).to_rows()
        } else {
            integer_kernel(&IntMatrix::from_rows(n, lattice.basis()))
        };
        for g in stalk.vg_lower(1).basis() {
            let chain = emb.vec_mul(g);
            for w in &annihilator {
                let mut row = vec![BigInt::zero(); phi];
                for (e, we) in w.iter().enumerate() {
                    if !we.is_zero() {
                        for (a, b) in row.iter_mut().zip(apply_row(&chain, e, phi)) {
                            *a += we * b;
                        }
                    }
                }
                sys.rows.push(row);
                sys.rhs.push(BigInt::zero());
            }
        }
        for g in stalk.vg_lower(2).basis() {
            let chain = emb.vec_mul(g);
            for e in 0..n {
                sys.rows.push(apply_row(&chain, e, phi));
                sys.rhs.push(BigInt::zero());
            }
        }
        let qmap = QuillenMap::new(&stalk.matroid, 1);
        for spec in all_prefix_specs(&stalk.matroid, 1) {
            let local = prefix_chain(&stalk.matroid, &spec);
            let image = qmap.qbv(&chain_mod2(&local))?;
            let chain = emb.vec_mul(&local);
            for (k, &s) in subsets.iter().enumerate() {
                let e = s.trailing_zeros() as usize;
                slack_rows.push(sys.rows.len());
                sys.rows.push(apply_row(&chain, e, phi));
                sys.rhs.push(BigInt::from(image.get(k) as i64));
            }
        }
    }
    // Φ(γ)_e − 2 s = qbv(γ)_e with one integer slack per parity equation
    let width = phi + slack_rows.len();
    for row in sys.rows.iter_mut() {
        row.resize(width, BigInt::zero());
    }
    for (k, &r) in slack_rows.iter().enumerate() {
        sys.rows[r][phi + k] = BigInt::from(-2);
    }
    let a = IntMatrix::from_rows(width, &sys.rows);
    let feasible = solve_integer_system(&a, &sys.rhs).is_some();
    Ok(LiftingReport {
        target,
        flags: flags.iter().map(ToString::to_string).collect(),
        unknowns: width,
        equations: sys.rows.len(),
        feasible,
    })
}

/// The lattice `Φ` must respect when written in tope coordinates; exposed for tests.
pub fn target_lattice(m: &OrientedMatroid, flag: &Flag, target: LiftTarget) -> Result<LatticeZ> {
    let s = Stalk::new(m, flag)?;
    match target {
        LiftTarget::OrlikSolomon => Ok(os_dual_z(&s.matroid, 1)),
        LiftTarget::Cordovil => cordovil_dual(&s.matroid, 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;
    use crate::om::enumerate_flags;

    #[test]
    fn orlik_solomon_lift_is_impossible_on_u23() {
        let m = builtin("u23").unwrap().load().matroid;
        let flags = enumerate_flags(&m, true);
        assert_eq!(flags.len(), 3);
        let os = lifting_system(&m, &flags, LiftTarget::OrlikSolomon).unwrap();
        assert!(!os.feasible);
        let cord = lifting_system(&m, &flags, LiftTarget::Cordovil).unwrap();
        assert!(cord.feasible);
        // a single flag imposes no contradiction
        let one = lifting_system(&m, &flags[..1], LiftTarget::OrlikSolomon).unwrap();
        assert!(one.feasible);
    }

    #[test]
    fn stalk_targets_have_rank_two() {
        let m = builtin("u23").unwrap().load().matroid;
        for f in enumerate_flags(&m, true) {
            for t in [LiftTarget::OrlikSolomon, LiftTarget::Cordovil] {
                let l = target_lattice(&m, &f, t).unwrap();
                assert_eq!(l.rank(), 2);
                assert!(l.is_saturated());
            }
        }
    }
}

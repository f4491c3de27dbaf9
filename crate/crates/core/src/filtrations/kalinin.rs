use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{gf2_solve_project, BitVec, GF2Matrix, Gf2Solver, SubspaceGF2};
use crate::om::OrientedMatroid;
use crate::salvetti::{Cell, SalvettiComplex};

use super::prefix::{affine_set, chain_mod2, prefix_chain, PrefixSpec};

/// Chains `β_1, …, β_p` with `∂β_1 = γ` and `∂β_i = β_{i−1} + conj(β_{i−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KalininCertificate {
    pub gamma: BitVec,
    pub betas: Vec<BitVec>,
}

impl KalininCertificate {
    pub fn degree(&self) -> usize {
        self.betas.len()
    }

    pub fn verify(&self, coarse: &SalvettiComplex) -> bool {
        let mut prev = self.gamma.clone();
        for (k, beta) in self.betas.iter().enumerate() {
            let i = k + 1;
            if beta.len() != coarse.cells(i).len() || coarse.boundary(i, beta) != prev {
                return false;
            }
            prev = beta.clone();
            prev.xor_assign(&coarse.conjugate(i, beta));
        }
        true
    }

    /// `β_p + conj(β_p)`, or `γ` in degree 0.
    pub fn cycle(&self, coarse: &SalvettiComplex) -> BitVec {
        match self.betas.last() {
            None => self.gamma.clone(),
            Some(b) => {
                let mut c = b.clone();
                c.xor_assign(&coarse.conjugate(self.degree(), b));
                c
            }
        }
    }
}

/// Column offsets of `[γ | β_1 | … | β_p]`.
fn offsets(coarse: &SalvettiComplex, p: usize) -> Vec<usize> {
    let mut off = vec![0];
    for d in 0..=p {
        off.push(off[d] + coarse.cells(d).len());
    }
    off
}

/// The homogeneous system in `[γ | β_1 | … | β_p]`.
fn kalinin_system(coarse: &SalvettiComplex, p: usize) -> GF2Matrix {
    let off = offsets(coarse, p);
    let total = off[p + 1];
    let mut sys = GF2Matrix::zeros(0, total);
    for i in 1..=p {
        // rows indexed by (i−1)-cells: ∂β_i + (1 + conj)β_{i−1} (or + γ when i = 1)
        let n_rows = coarse.cells(i - 1).len();
        let mut rows = vec![BitVec::zeros(total); n_rows];
        for j in 0..coarse.cells(i).len() {
            for &f in coarse.faces(i, j) {
                rows[f].flip(off[i] + j);
            }
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row.flip(off[i - 1] + r);
            if i >= 2 {
                let c = coarse.conjugate(i - 1, &BitVec::from_ones(n_rows, [r]));
                let rc = c.first_one().expect("conjugation is a permutation");
                row.flip(off[i - 1] + rc);
            }
        }
        for row in rows {
            sys.push_row(row);
        }
    }
    sys
}

/// `K_p` as the γ-projection of the solution space of the Kalinin system.
pub fn kalinin_k(coarse: &SalvettiComplex, p: usize) -> SubspaceGF2 {
    let n0 = coarse.cells(0).len();
    if p == 0 {
        return SubspaceGF2::full(n0);
    }
    gf2_solve_project(&kalinin_system(coarse, p), 0..n0)
}

/// Solves for a certificate of `γ ∈ K_p`; the free variables are drawn from `rng`.
pub struct ViroSolver<'a> {
    coarse: &'a SalvettiComplex,
    p: usize,
    solver: Option<Gf2Solver>,
}

impl<'a> ViroSolver<'a> {
    pub fn new(coarse: &'a SalvettiComplex, p: usize) -> Result<Self> {
        if p > coarse.top_dim() {
            return Err(Error::WrongDegree {
                expected: coarse.top_dim(),
                found: p,
            });
        }
        let solver = (p > 0).then(|| {
            let sys = kalinin_system(coarse, p);
            let n0 = coarse.cells(0).len();
            let beta_cols = GF2Matrix::from_rows(
                sys.ncols() - n0,
                sys.rows()
                    .iter()
                    .map(|r| r.slice(n0..sys.ncols()))
                    .collect(),
            );
            Gf2Solver::new(&beta_cols)
        });
        Ok(ViroSolver { coarse, p, solver })
    }

    pub fn certificate<R: Rng + ?Sized>(
        &self,
        gamma: &BitVec,
        rng: &mut R,
    ) -> Result<KalininCertificate> {
        let n0 = self.coarse.cells(0).len();
        if gamma.len() != n0 {
            return Err(Error::DimensionMismatch {
                expected: n0,
                found: gamma.len(),
            });
        }
        let Some(solver) = &self.solver else {
            return Ok(KalininCertificate {
                gamma: gamma.clone(),
                betas: Vec::new(),
            });
        };
        let off = offsets(self.coarse, self.p);
        // only the first block of equations involves γ
        let rhs = gamma.concat(&BitVec::zeros(off[self.p] - n0));
        let x = solver
            .solve_random(&rhs, rng)
            .ok_or(Error::NotInFiltration {
                space: "K",
                p: self.p,
            })?;
        let betas = (1..=self.p)
            .map(|i| x.slice(off[i] - n0..off[i + 1] - n0))
            .collect();
        Ok(KalininCertificate {
            gamma: gamma.clone(),
            betas,
        })
    }

    /// `bv_p(γ)` as the cycle `β_p + conj(β_p)`.
    pub fn bv<R: Rng + ?Sized>(
        &self,
        gamma: &BitVec,
        rng: &mut R,
    ) -> Result<(BitVec, KalininCertificate)> {
        let cert = self.certificate(gamma, rng)?;
        Ok((cert.cycle(self.coarse), cert))
    }
}

/// `bv_p(γ)` with a certificate; fails when `γ ∉ K_p`.
pub fn viro_bv<R: Rng + ?Sized>(
    coarse: &SalvettiComplex,
    gamma: &BitVec,
    p: usize,
    rng: &mut R,
) -> Result<(BitVec, KalininCertificate)> {
    ViroSolver::new(coarse, p)?.bv(gamma, rng)
}

/// `Σ_{u ∈ U_{F,v,p}} (−1)^{w(u)} Z(T_v ∖ F_p, T_u)` as signed cells.
pub fn brick(spec: &PrefixSpec) -> Vec<(Cell, i64)> {
    let l = spec.origin.zero_out(spec.flag.flat(spec.p));
    let mut acc: BTreeMap<Cell, i64> = BTreeMap::new();
    for (u, odd) in spec.affine_set() {
        *acc.entry(Cell::new(l, u)).or_default() += if odd { -1 } else { 1 };
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

pub fn brick_mod2(coarse: &SalvettiComplex, spec: &PrefixSpec) -> BitVec {
    let cells: Vec<Cell> = brick(spec)
        .into_iter()
        .filter(|(_, c)| c % 2 != 0)
        .map(|(cell, _)| cell)
        .collect();
    coarse.chain(spec.p, &cells)
}

/// The explicit certificate of `γ_{F,v,p} ∈ K_p`:
/// `β_j = Σ_{w ∈ v + ⟨d_{j+1},…,d_p⟩} Σ_{u ∈ U_{F,w,j−1}} Z(T_w ∖ F_j, T_u)`.
pub fn prefix_certificate(
    m: &OrientedMatroid,
    coarse: &SalvettiComplex,
    spec: &PrefixSpec,
) -> KalininCertificate {
    let p = spec.p;
    let gamma = chain_mod2(&prefix_chain(m, spec));
    let mut betas = Vec::with_capacity(p);
    for j in 1..=p {
        let upper: Vec<usize> = (j + 1..=p).collect();
        let lower: Vec<usize> = (1..j).collect();
        let mut cells = Vec::new();
        for (w, _) in affine_set(&spec.flag, &spec.origin, &upper) {
            let l = w.zero_out(spec.flag.flat(j));
            for (u, _) in affine_set(&spec.flag, &w, &lower) {
                cells.push(Cell::new(l, u));
            }
        }
        betas.push(coarse.chain(j, &cells));
    }
    KalininCertificate { gamma, betas }
}

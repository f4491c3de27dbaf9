use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebras::{p_subsets, WedgeP};
use crate::error::{Error, Result};
use crate::linalg::{BitVec, GF2Matrix, Gf2Solver, IntVector, LatticeZ, SubspaceGF2};
use crate::om::sign::Mask;
use crate::om::{enumerate_flags, tope_flag_set, Flag, OrientedMatroid, SignVector};

use super::prefix::affine_set;

/// An affine coordinate subspace `v + ⟨d_i : i ∈ steps⟩` of some `T_F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineGenerator {
    pub flag: Flag,
    pub origin: SignVector,
    pub steps: Vec<usize>,
}

impl AffineGenerator {
    /// `γ_U mod 2`: the sum of the topes in `U`.
    pub fn chain(&self, m: &OrientedMatroid) -> BitVec {
        BitVec::from_ones(
            m.topes().len(),
            affine_set(&self.flag, &self.origin, &self.steps)
                .iter()
                .map(|(t, _)| m.tope_index(t).expect("tope of T_F")),
        )
    }

    /// Tangent vectors `d_i = e_{F_i ∖ F_{i−1}}`.
    pub fn tangent_blocks(&self) -> Vec<Mask> {
        self.steps.iter().map(|&i| self.flag.block(i)).collect()
    }
}

/// Every coset of every coordinate subspace of dimension `p`, over all complete flags.
pub fn affine_generators(m: &OrientedMatroid, p: usize) -> Vec<AffineGenerator> {
    let r = m.rank();
    let mut out = Vec::new();
    for flag in enumerate_flags(m, true) {
        let tf = tope_flag_set(m, &flag);
        for steps in crate::om::arrangement::subsets_of_size(r, p) {
            let steps: Vec<usize> = steps.iter().map(|i| i + 1).collect();
            let mut seen = BTreeSet::new();
            for v in &tf {
                // one representative per coset: its smallest tope
                let coset: BTreeSet<SignVector> = affine_set(&flag, v, &steps)
                    .into_iter()
                    .map(|(t, _)| t)
                    .collect();
                let rep = *coset.first().expect("nonempty coset");
                if seen.insert(rep) {
                    out.push(AffineGenerator {
                        flag: flag.clone(),
                        origin: rep,
                        steps: steps.clone(),
                    });
                }
            }
        }
    }
    out
}

/// `Q_p`, spanned by the mod-2 affine coordinate chains of dimension `p`.
pub fn quillen_q(m: &OrientedMatroid, p: usize) -> SubspaceGF2 {
    let n = m.topes().len();
    if p > m.rank() {
        return SubspaceGF2::zero(n);
    }
    SubspaceGF2::from_generators(n, affine_generators(m, p).iter().map(|g| g.chain(m)))
}

/// `Q_p` from every `p`-dimensional affine subspace of every `T_F`, coordinate or not.
pub fn quillen_q_exhaustive(m: &OrientedMatroid, p: usize) -> SubspaceGF2 {
    let n = m.topes().len();
    let r = m.rank();
    let mut gens = Vec::new();
    if p > r {
        return SubspaceGF2::zero(n);
    }
    // linear subspaces of (Z/2)^r of dimension p, as sets of coordinate vectors
    let mut subspaces: BTreeSet<Vec<u64>> = BTreeSet::new();
    let vectors: Vec<u64> = (1..1u64 << r).collect();
    let mut stack: Vec<Vec<u64>> = vec![vec![]];
    while let Some(basis) = stack.pop() {
        let span = span_of(&basis);
        if basis.len() == p {
            subspaces.insert(span);
            continue;
        }
        for &x in &vectors {
            if !span.contains(&x) {
                let mut b = basis.clone();
                b.push(x);
                stack.push(b);
            }
        }
    }
    for flag in enumerate_flags(m, true) {
        let tf = tope_flag_set(m, &flag);
        let blocks = flag.blocks();
        let translate = |t: &SignVector, a: u64| {
            let flip = (0..r)
                .filter(|i| a >> i & 1 == 1)
                .fold(0, |acc, i| acc | blocks[i]);
            t.flip(flip)
        };
        for sub in &subspaces {
            for v in &tf {
                gens.push(BitVec::from_ones(
                    n,
                    sub.iter()
                        .map(|&a| m.tope_index(&translate(v, a)).expect("tope of T_F")),
                ));
            }
        }
    }
    SubspaceGF2::from_generators(n, gens)
}

fn span_of(basis: &[u64]) -> Vec<u64> {
    let mut span = vec![0u64];
    for &b in basis {
        let shifted: Vec<u64> = span.iter().map(|x| x ^ b).collect();
        span.extend(shifted);
    }
    span.sort_unstable();
    span
}

/// Decomposes elements of `Q_p` into affine generators and maps them to `∧^p (Z/2)^E`.
pub struct QuillenMap {
    p: usize,
    subsets: Vec<Mask>,
    gens: Vec<AffineGenerator>,
    images: Vec<BitVec>,
    solver: Gf2Solver,
}

impl QuillenMap {
    pub fn new(m: &OrientedMatroid, p: usize) -> Self {
        let n = m.ground_size();
        let subsets = p_subsets(n, p);
        let gens = affine_generators(m, p);
        let images = gens
            .iter()
            .map(|g| WedgeP::from_sets(n, &g.tangent_blocks()).mod2(&subsets))
            .collect();
        let chains: Vec<BitVec> = gens.iter().map(|g| g.chain(m)).collect();
        // columns are generators
        let mut a = GF2Matrix::zeros(m.topes().len(), gens.len());
        for (j, c) in chains.iter().enumerate() {
            for i in c.iter_ones() {
                a.set(i, j, true);
            }
        }
        QuillenMap {
            p,
            subsets,
            gens,
            images,
            solver: Gf2Solver::new(&a),
        }
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    /// Coordinates of the target `∧^p`, as sorted `p`-subsets.
    pub fn subsets(&self) -> &[Mask] {
        &self.subsets
    }

    pub fn generators(&self) -> &[AffineGenerator] {
        &self.gens
    }

    fn apply(&self, x: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.subsets.len());
        for j in x.iter_ones() {
            out.xor_assign(&self.images[j]);
        }
        out
    }

    /// `qbv_p(γ)`; fails when `γ ∉ Q_p`.
    pub fn qbv(&self, gamma: &BitVec) -> Result<BitVec> {
        let x = self.solver.solve(gamma).ok_or(Error::NotInFiltration {
            space: "Q",
            p: self.p,
        })?;
        Ok(self.apply(&x))
    }

    /// `qbv_p(γ)` through a randomly chosen decomposition.
    pub fn qbv_random<R: rand::Rng + ?Sized>(&self, gamma: &BitVec, rng: &mut R) -> Result<BitVec> {
        let x = self
            .solver
            .solve_random(gamma, rng)
            .ok_or(Error::NotInFiltration {
                space: "Q",
                p: self.p,
            })?;
        Ok(self.apply(&x))
    }
}

pub fn qbv(m: &OrientedMatroid, gamma: &BitVec, p: usize) -> Result<BitVec> {
    QuillenMap::new(m, p).qbv(gamma)
}

/// The `p`-th power of the augmentation ideal of `Z[T_F]` for the first complete
/// flag of `M`, where `T_F` is a group under translation by the block flips.
pub fn quillen_z_power(m: &OrientedMatroid, p: usize) -> LatticeZ {
    let flag = enumerate_flags(m, true)
        .into_iter()
        .next()
        .expect("a complete flag");
    let tf = tope_flag_set(m, &flag);
    let r = m.rank();
    let n = 1usize << r;
    let origin = tf[0];
    let blocks = flag.blocks();
    let at = |a: usize| {
        let flip = (0..r)
            .filter(|i| a >> i & 1 == 1)
            .fold(0, |acc, i| acc | blocks[i]);
        origin.flip(flip)
    };
    debug_assert!((0..n).all(|a| tf.contains(&at(a))));
    // g − 1 for g ≠ 0, in group coordinates
    let basic: Vec<IntVector> = (1..n)
        .map(|g| {
            let mut v = vec![BigInt::zero(); n];
            v[g] += 1;
            v[0] -= 1;
            v
        })
        .collect();
    let mut power = LatticeZ::full(n);
    for _ in 0..p {
        let gens: Vec<IntVector> = power
            .basis()
            .iter()
            .flat_map(|x| basic.iter().map(move |y| group_product(x, y)))
            .collect();
        power = LatticeZ::from_generators(n, &gens);
    }
    power
}

fn group_product(x: &[BigInt], y: &[BigInt]) -> IntVector {
    let mut out = vec![BigInt::zero(); x.len()];
    for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out[a ^ b] += xa * yb;
        }
    }
    out
}

/// Rank and index data showing that the integral powers never stabilise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuillenZDemo {
    pub p: usize,
    pub rank: usize,
    /// Invariant factors of `I^{p+1}` inside `I^p`.
    pub next_index: Vec<BigInt>,
}

pub fn quillen_z_demo(m: &OrientedMatroid, p: usize) -> QuillenZDemo {
    let ip = quillen_z_power(m, p);
    let next = quillen_z_power(m, p + 1);
    let q = next
        .quotient_invariants(&ip)
        .expect("same ambient")
        .expect("I^{p+1} ⊆ I^p");
    QuillenZDemo {
        p,
        rank: ip.rank(),
        next_index: q.torsion,
    }
}

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::linalg::{invariant_factors, BitVec, SparseIntMatrix};
use crate::om::{OrientedMatroid, SignVector};

use super::coarse::{Cell, SalvettiComplex};

/// Rank and torsion coefficients of an integral homology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralHomology {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// The order complex of the Salvetti poset. Poset elements are the cells
/// `w(L, L∘T)`; `w(L,T) ≤ w(L',T')` iff `L' ≤ L` and `T = L∘T'`.
#[derive(Clone, Debug)]
pub struct FineSalvetti {
    elements: Vec<Cell>,
    element_index: HashMap<Cell, usize>,
    /// `simplices[p]`: vertex lists in increasing poset order, sorted.
    simplices: Vec<Vec<Vec<usize>>>,
    simplex_index: Vec<HashMap<Vec<usize>, usize>>,
}

fn poset_le(a: &Cell, b: &Cell) -> bool {
    b.covector().le(&a.covector()) && a.tope() == a.covector().compose_unchecked(&b.tope())
}

impl FineSalvetti {
    pub fn build(m: &OrientedMatroid) -> Self {
        let coarse = SalvettiComplex::build(m);
        Self::from_coarse(&coarse)
    }

    pub fn from_coarse(coarse: &SalvettiComplex) -> Self {
        let mut elements: Vec<Cell> = (0..=coarse.top_dim())
            .flat_map(|d| coarse.cells(d).iter().copied())
            .collect();
        elements.sort();
        let element_index: HashMap<Cell, usize> =
            elements.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let above: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| *b != a && poset_le(a, b))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut layer: Vec<Vec<usize>> = (0..elements.len()).map(|i| vec![i]).collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for s in &layer {
                let last = *s.last().expect("nonempty simplex");
                for &j in &above[last] {
                    let mut t = s.clone();
                    t.push(j);
                    next.push(t);
                }
            }
            layer.sort();
            simplices.push(layer);
            layer = next;
        }
        let simplex_index = simplices
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        FineSalvetti {
            elements,
            element_index,
            simplices,
            simplex_index,
        }
    }

    pub fn elements(&self) -> &[Cell] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Cell {
        self.elements[i]
    }

    pub fn top_dim(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    pub fn simplices(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map_or(&[], |s| s.as_slice())
    }

    pub fn simplex_counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn simplex_index(&self, p: usize, s: &[usize]) -> Option<usize> {
        self.simplex_index.get(p)?.get(s).copied()
    }

    /// Integral boundary `∂_p` with alternating signs on the poset vertex order.
    pub fn boundary_matrix(&self, p: usize) -> SparseIntMatrix {
        let rows = if p == 0 {
            0
        } else {
            self.simplices(p - 1).len()
        };
        let mut m = SparseIntMatrix::new(rows, self.simplices(p).len());
        if p == 0 {
            return m;
        }
        for (j, s) in self.simplices(p).iter().enumerate() {
            for k in 0..s.len() {
                let mut face = s.clone();
                face.remove(k);
                let i = self.simplex_index[p - 1][&face];
                let sign = if k % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                m.add(i, j, sign);
            }
        }
        m
    }

    /// Mod-2 boundary of a chain of `p`-simplices.
    pub fn boundary_mod2(&self, p: usize, chain: &BitVec) -> BitVec {
        if p == 0 {
            return BitVec::zeros(0);
        }
        let mut out = BitVec::zeros(self.simplices(p - 1).len());
        for j in chain.iter_ones() {
            let s = &self.simplices[p][j];
            for k in 0..s.len() {
                let mut face = s.clone();
                face.remove(k);
                out.flip(self.simplex_index[p - 1][&face]);
            }
        }
        out
    }

    /// `H_p(Sal; Z)` from the Smith forms of the neighbouring boundary maps.
    pub fn homology_z(&self, p: usize) -> IntegralHomology {
        let n = self.simplices(p).len();
        let rank_in = invariant_factors(&self.boundary_matrix(p)).len();
        let out = invariant_factors(&self.boundary_matrix(p + 1));
        IntegralHomology {
            rank: n - rank_in - out.len(),
            torsion: out.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| {
                if d % 2 == 0 {
                    s.len() as i64
                } else {
                    -(s.len() as i64)
                }
            })
            .sum()
    }

    /// Subdivision of a mod-2 cellular chain: each `Z(L,T)` of dimension `p` maps
    /// to the sum of the chains `w(L_0,L_0∘T) < … < w(L_p,L_p∘T)` with
    /// `L_0 > … > L_p = L` and `dim L_j = j`.
    pub fn coarse_to_fine(
        &self,
        m: &OrientedMatroid,
        coarse: &SalvettiComplex,
        p: usize,
        chain: &BitVec,
    ) -> BitVec {
        let mut out = BitVec::zeros(self.simplices(p).len());
        for cell in coarse.support(p, chain) {
            for s in self.subdivide(m, &cell, p) {
                out.flip(self.simplex_index[p][&s]);
            }
        }
        out
    }

    fn subdivide(&self, m: &OrientedMatroid, cell: &Cell, p: usize) -> Vec<Vec<usize>> {
        let t = cell.tope();
        // chains of covectors L_p = L < L_{p-1} < … < L_0 with decreasing dimension
        let mut chains: Vec<Vec<SignVector>> = vec![vec![cell.covector()]];
        for d in (0..p).rev() {
            let mut next = Vec::new();
            for c in &chains {
                let low = *c.last().expect("nonempty chain");
                for l in m.covectors_of_dim(d).filter(|l| low.lt(l)) {
                    let mut c2 = c.clone();
                    c2.push(*l);
                    next.push(c2);
                }
            }
            chains = next;
        }
        chains
            .into_iter()
            .map(|c| {
                c.iter()
                    .rev()
                    .map(|l| self.element_index[&Cell::new(*l, t)])
                    .collect()
            })
            .collect()
    }
}

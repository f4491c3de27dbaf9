use std::collections::HashMap;
use std::fmt;

use crate::linalg::{gf2_kernel, BitVec, GF2Matrix, SubspaceGF2};
use crate::om::{OrientedMatroid, SignVector};

/// The cell `Z(L, T)`, keyed by `L` and `L∘T` so that equal cells compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    covector: SignVector,
    tope: SignVector,
}

impl Cell {
    /// `Z(L, T)` for any tope `T`; the stored tope is `L∘T`.
    pub fn new(covector: SignVector, tope: SignVector) -> Self {
        Cell {
            covector,
            tope: covector.compose_unchecked(&tope),
        }
    }

    pub fn covector(&self) -> SignVector {
        self.covector
    }

    pub fn tope(&self) -> SignVector {
        self.tope
    }

    /// `Z(L, −T)`, written with the stored representative `L∘(−T)`.
    pub fn conjugate(&self) -> Cell {
        Cell::new(self.covector, self.tope.neg())
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z({},{})", self.covector, self.tope)
    }
}

/// The coarse Salvetti complex with its mod-2 cellular boundary and conjugation.
#[derive(Clone, Debug)]
pub struct SalvettiComplex {
    cells: Vec<Vec<Cell>>,
    index: HashMap<Cell, usize>,
    /// `faces[d][i]`: indices of the codimension-one faces of cell `i` of dimension `d`.
    faces: Vec<Vec<Vec<usize>>>,
    conj: Vec<Vec<usize>>,
}

impl SalvettiComplex {
    pub fn build(m: &OrientedMatroid) -> Self {
        let r = m.rank();
        let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); r + 1];
        for l in m.covectors() {
            let d = m.covector_dim(l);
            let mut tops: Vec<SignVector> = m.topes().iter().filter(|t| l.le(t)).copied().collect();
            tops.sort();
            cells[d].extend(tops.into_iter().map(|t| Cell::new(*l, t)));
        }
        for c in cells.iter_mut() {
            c.sort();
        }
        let mut index = HashMap::new();
        for dim_cells in &cells {
            for (i, c) in dim_cells.iter().enumerate() {
                index.insert(*c, i);
            }
        }
        let mut faces = vec![Vec::new(); r + 1];
        for d in 1..=r {
            faces[d] = cells[d]
                .iter()
                .map(|c| {
                    let mut f: Vec<usize> = m
                        .covectors_of_dim(d - 1)
                        .filter(|l2| c.covector.lt(l2))
                        .map(|l2| index[&Cell::new(*l2, c.tope)])
                        .collect();
                    f.sort_unstable();
                    f
                })
                .collect();
        }
        faces[0] = vec![Vec::new(); cells[0].len()];
        let conj = cells
            .iter()
            .map(|dc| dc.iter().map(|c| index[&c.conjugate()]).collect())
            .collect();
        SalvettiComplex {
            cells,
            index,
            faces,
            conj,
        }
    }

    pub fn top_dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, d: usize) -> &[Cell] {
        self.cells.get(d).map_or(&[], |c| c.as_slice())
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn cell_index(&self, c: &Cell) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn faces(&self, d: usize, i: usize) -> &[usize] {
        &self.faces[d][i]
    }

    /// Chain with the given cells (mod 2).
    pub fn chain(&self, d: usize, cells: &[Cell]) -> BitVec {
        let mut v = BitVec::zeros(self.cells(d).len());
        for c in cells {
            v.flip(self.index[c]);
        }
        v
    }

    pub fn support(&self, d: usize, chain: &BitVec) -> Vec<Cell> {
        chain.iter_ones().map(|i| self.cells[d][i]).collect()
    }

    /// `∂_d` as a matrix from dimension `d` to `d − 1`.
    pub fn boundary_matrix(&self, d: usize) -> GF2Matrix {
        let rows = if d == 0 { 0 } else { self.cells(d - 1).len() };
        let cols = self.cells(d).len();
        let mut m = GF2Matrix::zeros(rows, cols);
        if d == 0 || d > self.top_dim() {
            return m;
        }
        for (j, fs) in self.faces[d].iter().enumerate() {
            for &i in fs {
                m.flip(i, j);
            }
        }
        m
    }

    pub fn boundary(&self, d: usize, chain: &BitVec) -> BitVec {
        if d == 0 {
            return BitVec::zeros(0);
        }
        let mut out = BitVec::zeros(self.cells(d - 1).len());
        for j in chain.iter_ones() {
            for &i in &self.faces[d][j] {
                out.flip(i);
            }
        }
        out
    }

    pub fn conjugate(&self, d: usize, chain: &BitVec) -> BitVec {
        BitVec::from_ones(chain.len(), chain.iter_ones().map(|i| self.conj[d][i]))
    }

    /// `conj` as a permutation matrix on dimension `d`.
    pub fn conjugation_matrix(&self, d: usize) -> GF2Matrix {
        let n = self.cells(d).len();
        let mut m = GF2Matrix::zeros(n, n);
        for (j, &i) in self.conj[d].iter().enumerate() {
            m.flip(i, j);
        }
        m
    }

    pub fn fixed_cells(&self) -> Vec<Cell> {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(d, cs)| {
                cs.iter()
                    .enumerate()
                    .filter(move |(i, _)| self.conj[d][*i] == *i)
                    .map(|(_, c)| *c)
            })
            .collect()
    }

    pub fn boundaries(&self, d: usize) -> SubspaceGF2 {
        if d >= self.top_dim() {
            return SubspaceGF2::zero(self.cells(d).len());
        }
        self.boundary_matrix(d + 1).column_space()
    }

    pub fn cycles(&self, d: usize) -> SubspaceGF2 {
        gf2_kernel(&self.boundary_matrix(d))
    }

    pub fn betti_mod2(&self, d: usize) -> usize {
        self.cycles(d).dim() - self.boundaries(d).dim()
    }

    pub fn betti_numbers_mod2(&self) -> Vec<usize> {
        (0..=self.top_dim()).map(|d| self.betti_mod2(d)).collect()
    }

    /// Cycle representatives of a basis of `H_d(Sal; Z/2)`.
    pub fn homology_basis_mod2(&self, d: usize) -> Vec<BitVec> {
        let mut span = self.boundaries(d);
        let mut out = Vec::new();
        for z in self.cycles(d).basis() {
            if !span.contains(z) {
                out.push(z.clone());
                span = span.sum(&SubspaceGF2::from_generators(
                    span.ambient_dim(),
                    [z.clone()],
                ));
            }
        }
        out
    }

    pub fn is_boundary(&self, d: usize, chain: &BitVec) -> bool {
        self.boundaries(d).contains(chain)
    }

    /// Whether two cycles represent the same mod-2 homology class.
    pub fn homologous(&self, d: usize, a: &BitVec, b: &BitVec) -> bool {
        let mut diff = a.clone();
        diff.xor_assign(b);
        self.is_boundary(d, &diff)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, c)| {
                if d % 2 == 0 {
                    c.len() as i64
                } else {
                    -(c.len() as i64)
                }
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::Arrangement;

    fn sal(normals: &[&[i64]]) -> SalvettiComplex {
        SalvettiComplex::build(
            &Arrangement::from_integers(normals)
                .oriented_matroid()
                .unwrap(),
        )
    }

    #[test]
    fn cell_counts_and_homology() {
        let s = sal(&[&[1, 0], &[0, 1], &[-1, 1]]);
        assert_eq!(s.cell_counts(), vec![6, 12, 6]);
        assert_eq!(s.betti_numbers_mod2(), vec![1, 3, 2]);
        assert_eq!(s.fixed_cells().len(), 6);
        assert!(s.fixed_cells().iter().all(|c| c.covector() == c.tope()));
        let circle = sal(&[&[1]]);
        assert_eq!(circle.cell_counts(), vec![2, 2]);
        assert_eq!(circle.betti_numbers_mod2(), vec![1, 1]);
    }

    #[test]
    fn boundary_squares_to_zero_and_commutes_with_conjugation() {
        let s = sal(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        for d in 2..=s.top_dim() {
            let prod = s.boundary_matrix(d - 1).mul(&s.boundary_matrix(d));
            assert_eq!(prod.rank(), 0);
        }
        for d in 1..=s.top_dim() {
            let lhs = s.boundary_matrix(d).mul(&s.conjugation_matrix(d));
            let rhs = s.conjugation_matrix(d - 1).mul(&s.boundary_matrix(d));
            assert_eq!(lhs, rhs);
            let twice = s.conjugation_matrix(d).mul(&s.conjugation_matrix(d));
            assert_eq!(twice, GF2Matrix::identity(s.cells(d).len()));
        }
    }
}

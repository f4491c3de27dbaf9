//! Packed bit-row linear algebra over GF(2).
//!
//! Rows are stored 64 bits per word. Reduced row-echelon form is the canonical
//! representation of a subspace, so two [`SubspaceGF2`] values are equal exactly
//! when their derived `PartialEq` says so.

use std::fmt;
use std::ops::Range;

use rand::Rng;

/// A dense vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i);
            }
        }
        v
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn assign(&mut self, i: usize, bit: bool) {
        if bit {
            self.set(i)
        } else {
            self.clear(i)
        }
    }

    /// Addition in GF(2).
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones() & 1;
        }
        acc == 1
    }

    /// Copy of the coordinates in `range`.
    pub fn slice(&self, range: Range<usize>) -> BitVec {
        let mut out = BitVec::zeros(range.len());
        for (k, i) in range.enumerate() {
            if self.get(i) {
                out.set(k);
            }
        }
        out
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i);
        }
        for i in other.iter_ones() {
            out.set(self.len + i);
        }
        out
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A dense GF(2) matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GF2Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GF2Matrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
        }
        GF2Matrix { cols, rows }
    }

    /// Builds a matrix from 0/1 entries.
    pub fn from_u8(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                BitVec::from_bools(&r.iter().map(|&x| x & 1 == 1).collect::<Vec<_>>())
            })
            .collect();
        GF2Matrix { cols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut BitVec {
        &mut self.rows[i]
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        self.rows[i].assign(j, bit)
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.rows[i].flip(j)
    }

    /// `self · x`.
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols);
        let mut out = BitVec::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(x) {
                out.set(i);
            }
        }
        out
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut t = GF2Matrix::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter_ones() {
                t.rows[j].set(i);
            }
        }
        t
    }

    pub fn mul(&self, other: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols, other.nrows());
        let mut out = GF2Matrix::zeros(self.nrows(), other.ncols());
        for (i, r) in self.rows.iter().enumerate() {
            for k in r.iter_ones() {
                out.rows[i].xor_assign(&other.rows[k]);
            }
        }
        out
    }

    /// Reduced row-echelon form; returns the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<BitVec>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols);
        rows.truncate(pivots.len());
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Row space as a subspace of GF(2)^cols.
    pub fn row_space(&self) -> SubspaceGF2 {
        SubspaceGF2::from_generators(self.cols, self.rows.iter().cloned())
    }

    /// Column space as a subspace of GF(2)^rows.
    pub fn column_space(&self) -> SubspaceGF2 {
        self.transpose().row_space()
    }
}

/// Full Gauss-Jordan elimination; pivot rows are moved to the front.
fn rref_in_place(rows: &mut [BitVec], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of GF(2)^n held as a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceGF2 {
    ambient: usize,
    basis: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl SubspaceGF2 {
    pub fn zero(ambient: usize) -> Self {
        SubspaceGF2 {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_generators(
            ambient,
            (0..ambient).map(|i| BitVec::from_ones(ambient, [i])),
        )
    }

    pub fn from_generators(ambient: usize, gens: impl IntoIterator<Item = BitVec>) -> Self {
        let mut rows: Vec<BitVec> = gens
            .into_iter()
            .inspect(|g| assert_eq!(g.len(), ambient, "generator outside ambient space"))
            .collect();
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        SubspaceGF2 {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the echelon basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &SubspaceGF2) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &SubspaceGF2) -> SubspaceGF2 {
        assert_eq!(self.ambient, other.ambient);
        Self::from_generators(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        )
    }

    /// Coefficients expressing `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        let mut coords = BitVec::zeros(self.dim());
        let mut rest = v.clone();
        for (k, (row, &p)) in self.basis.iter().zip(&self.pivots).enumerate() {
            if rest.get(p) {
                rest.xor_assign(row);
                coords.set(k);
            }
        }
        rest.is_zero().then_some(coords)
    }

    pub fn as_matrix(&self) -> GF2Matrix {
        GF2Matrix::from_rows(self.ambient, self.basis.clone())
    }
}

/// `{x : m·x = 0}`.
pub fn gf2_kernel(m: &GF2Matrix) -> SubspaceGF2 {
    let n = m.ncols();
    let (rows, pivots) = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let gens = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut x = BitVec::zeros(n);
        x.set(f);
        for (row, &p) in rows.iter().zip(&pivots) {
            if row.get(f) {
                x.set(p);
            }
        }
        x
    });
    SubspaceGF2::from_generators(n, gens)
}

/// Projection of `{x : system·x = 0}` onto the coordinates in `keep`,
/// eliminating every other unknown.
pub fn gf2_solve_project(system: &GF2Matrix, keep: Range<usize>) -> SubspaceGF2 {
    let n = system.ncols();
    assert!(keep.end <= n, "projection block outside column range");
    let kept = keep.len();
    let eliminated: Vec<usize> = (0..n).filter(|c| !keep.contains(c)).collect();
    let n_elim = eliminated.len();
    // eliminated unknowns first, kept unknowns last
    let permuted: Vec<BitVec> = system
        .rows()
        .iter()
        .map(|r| {
            let mut out = BitVec::zeros(n);
            for (k, &c) in eliminated.iter().enumerate() {
                if r.get(c) {
                    out.set(k);
                }
            }
            for (k, c) in keep.clone().enumerate() {
                if r.get(c) {
                    out.set(n_elim + k);
                }
            }
            out
        })
        .collect();
    let (rows, pivots) = GF2Matrix::from_rows(n, permuted).rref();
    let constraints: Vec<BitVec> = rows
        .iter()
        .zip(&pivots)
        .filter(|(_, &p)| p >= n_elim)
        .map(|(r, _)| r.slice(n_elim..n))
        .collect();
    gf2_kernel(&GF2Matrix::from_rows(kept, constraints))
}

/// A reusable solver for `a·x = b` over GF(2).
#[derive(Clone, Debug)]
pub struct Gf2Solver {
    cols: usize,
    /// Reduced rows of `[a | I]`; the identity block records the row operations.
    reduced: Vec<BitVec>,
    pivots: Vec<usize>,
    rows: usize,
    kernel: SubspaceGF2,
}

impl Gf2Solver {
    pub fn new(a: &GF2Matrix) -> Self {
        let m = a.nrows();
        let n = a.ncols();
        let mut aug: Vec<BitVec> = a
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| r.concat(&BitVec::from_ones(m, [i])))
            .collect();
        let all = rref_in_place(&mut aug, n + m);
        let pivots: Vec<usize> = all.into_iter().filter(|&p| p < n).collect();
        // rows past the a-rank carry left-kernel combinations in the identity block
        Gf2Solver {
            cols: n,
            reduced: aug,
            pivots,
            rows: m,
            kernel: gf2_kernel(a),
        }
    }

    pub fn kernel(&self) -> &SubspaceGF2 {
        &self.kernel
    }

    /// A particular solution with all free variables zero, or `None` if inconsistent.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.rows);
        let n = self.cols;
        let rank = self.pivots.len();
        // transformed right-hand side: (row ops) · b
        let tb: Vec<bool> = self
            .reduced
            .iter()
            .map(|r| r.slice(n..n + self.rows).dot(b))
            .collect();
        if tb[rank..].iter().any(|&bit| bit) {
            return None;
        }
        let mut x = BitVec::zeros(n);
        for (k, &p) in self.pivots.iter().enumerate() {
            if tb[k] {
                x.set(p);
            }
        }
        Some(x)
    }

    /// A solution perturbed by a uniformly random kernel element.
    pub fn solve_random<R: Rng + ?Sized>(&self, b: &BitVec, rng: &mut R) -> Option<BitVec> {
        let mut x = self.solve(b)?;
        for k in self.kernel.basis() {
            if rng.gen::<bool>() {
                x.xor_assign(k);
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest, Strategy};

    fn brute_kernel(m: &GF2Matrix) -> Vec<BitVec> {
        let n = m.ncols();
        (0u32..1 << n)
            .map(|mask| BitVec::from_ones(n, (0..n).filter(|i| mask >> i & 1 == 1)))
            .filter(|x| m.mul_vec(x).is_zero())
            .collect()
    }

    #[test]
    fn kernel_of_single_relation() {
        let m = GF2Matrix::from_u8(&[&[1, 1], &[0, 0]]);
        let k = gf2_kernel(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&BitVec::from_bools(&[true, true])));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(gf2_kernel(&GF2Matrix::identity(3)).dim(), 0);
    }

    #[test]
    fn kernel_of_all_ones_row_is_even_weight() {
        let m = GF2Matrix::from_u8(&[&[1, 1, 1, 1]]);
        let k = gf2_kernel(&m);
        let even = brute_kernel(&m);
        assert_eq!(even.len(), 8);
        assert!(even.iter().all(|v| v.count_ones() % 2 == 0));
        assert_eq!(k.dim(), 3);
        assert!(even.iter().all(|v| k.contains(v)));
    }

    #[test]
    fn projection_examples() {
        // x + y = 0, keep x
        let p = gf2_solve_project(&GF2Matrix::from_u8(&[&[1, 1]]), 0..1);
        assert_eq!(p.dim(), 1);
        // x = 0, keep x
        let p = gf2_solve_project(&GF2Matrix::from_u8(&[&[1]]), 0..1);
        assert_eq!(p.dim(), 0);
        // x+y+z = 0, y+z = 0, keep x
        let p = gf2_solve_project(&GF2Matrix::from_u8(&[&[1, 1, 1], &[0, 1, 1]]), 0..1);
        assert_eq!(p.dim(), 0);
    }

    #[test]
    fn solver_detects_inconsistency() {
        let a = GF2Matrix::from_u8(&[&[1, 0], &[1, 0]]);
        let s = Gf2Solver::new(&a);
        assert!(s.solve(&BitVec::from_bools(&[true, false])).is_none());
        let x = s.solve(&BitVec::from_bools(&[true, true])).unwrap();
        assert_eq!(a.mul_vec(&x), BitVec::from_bools(&[true, true]));
    }

    fn arb_matrix() -> impl Strategy<Value = GF2Matrix> {
        (1usize..7, 1usize..9).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r).prop_map(
                move |rows| {
                    GF2Matrix::from_rows(c, rows.iter().map(|r| BitVec::from_bools(r)).collect())
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = gf2_kernel(&m);
            prop_assert_eq!(k.dim() + m.rank(), m.ncols());
            prop_assert_eq!(1usize << k.dim(), brute_kernel(&m).len());
            for b in k.basis() {
                prop_assert!(m.mul_vec(b).is_zero());
            }
        }

        #[test]
        fn projection_matches_enumeration(m in arb_matrix(), split in 0usize..8) {
            let n = m.ncols();
            let keep = 0..split.min(n);
            let p = gf2_solve_project(&m, keep.clone());
            let sols = brute_kernel(&m);
            let projected = SubspaceGF2::from_generators(keep.len(), sols.iter().map(|x| x.slice(keep.clone())));
            prop_assert_eq!(p, projected);
        }

        #[test]
        fn solver_round_trip(m in arb_matrix(), seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let x0 = BitVec::from_bools(&(0..m.ncols()).map(|_| rng.gen::<bool>()).collect::<Vec<_>>());
            let b = m.mul_vec(&x0);
            let s = Gf2Solver::new(&m);
            let x = s.solve_random(&b, &mut rng).unwrap();
            prop_assert_eq!(m.mul_vec(&x), b);
        }
    }
}

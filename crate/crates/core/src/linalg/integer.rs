//! Arbitrary-precision integer matrices, Smith and Hermite normal forms, and
//! saturated-lattice bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type IntVector = Vec<BigInt>;

pub fn int_vec(xs: &[i64]) -> IntVector {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[IntVector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
            data.extend(r.iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<IntVector> = rows.iter().map(|r| int_vec(r)).collect();
        Self::from_rows(cols, &rows)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> IntVector {
        self.row(i).to_vec()
    }

    pub fn to_rows(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> IntVector {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Row vector times matrix: `x · self`.
    pub fn vec_mul(&self, x: &[BigInt]) -> IntVector {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += xi * a;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k · row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                self.data[dst * self.cols + j] += k * s;
            }
        }
    }

    /// col[dst] += k · col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.data[i * self.cols + src].clone();
            if !s.is_zero() {
                self.data[i * self.cols + dst] += k * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of a Smith normal form computation: `left · m · right = diag(diagonal, 0…)`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero invariant factors, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The full rectangular diagonal matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.nrows(), self.right.ncols());
        for (k, x) in self.diagonal.iter().enumerate() {
            d[(k, k)] = x.clone();
        }
        d
    }

    /// Confirms `left · m · right` equals the diagonal form.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        self.left.mul(m).mul(&self.right) == self.diagonal_matrix()
            && self.diagonal.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.nrows() {
        for j in t..a.ncols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= v.abs() => {}
                _ => {
                    if v.abs().is_one() {
                        return Some((i, j));
                    }
                    best = Some((i, j));
                }
            }
        }
    }
    best
}

/// Smith normal form with unimodular transforms, pivoting on the entry of
/// least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(r);
    let mut right = IntMatrix::identity(c);
    let mut t = 0;
    'outer: while t < r.min(c) {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                let nq = -q;
                a.add_row(i, t, &nq);
                left.add_row(i, t, &nq);
                if !a[(i, t)].is_zero() {
                    a.swap_rows(i, t);
                    left.swap_rows(i, t);
                    changed = true;
                }
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                let nq = -q;
                a.add_col(j, t, &nq);
                right.add_col(j, t, &nq);
                if !a[(t, j)].is_zero() {
                    a.swap_cols(j, t);
                    right.swap_cols(j, t);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let pivot = a[(t, t)].clone();
        for i in t + 1..r {
            for j in t + 1..c {
                if !a[(i, j)].is_multiple_of(&pivot) {
                    a.add_row(t, i, &BigInt::one());
                    left.add_row(t, i, &BigInt::one());
                    continue 'outer;
                }
            }
        }
        if pivot.is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }
    let diagonal = (0..t).map(|k| a[(k, k)].clone()).collect();
    SmithForm {
        diagonal,
        left,
        right,
    }
}

/// Row-style echelon reduction on the first `reduce_cols` columns with
/// gcd-based row operations; returns the number of pivot rows. When `hermite`
/// is set, entries above each pivot are reduced into `[0, pivot)`.
fn echelon_rows(rows: &mut [IntVector], reduce_cols: usize, hermite: bool) -> usize {
    let mut r = 0;
    for c in 0..reduce_cols {
        if r == rows.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| rows[i][c].abs() < rows[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[r], &q);
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        if hermite {
            for i in 0..r {
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(r);
                sub_multiple(&mut head[i], &tail[0], &q);
            }
        }
        r += 1;
    }
    r
}

/// dst -= q · src
fn sub_multiple(dst: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// Hermite normal form of the row lattice; zero rows are dropped.
pub fn hermite_normal_form(rows: &[IntVector], cols: usize) -> Vec<IntVector> {
    let mut rows: Vec<IntVector> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    for r in &rows {
        assert_eq!(r.len(), cols);
    }
    let k = echelon_rows(&mut rows, cols, true);
    rows.truncate(k);
    rows
}

/// A saturated basis of `{x ∈ Z^n : m·x = 0}`, returned as rows.
pub fn integer_kernel(m: &IntMatrix) -> Vec<IntVector> {
    let (r, n) = (m.nrows(), m.ncols());
    // row i of [mᵀ | I]; unimodular row reduction keeps the identity block a Z-basis
    let mut rows: Vec<IntVector> = (0..n)
        .map(|i| {
            let mut row: IntVector = (0..r).map(|k| m[(k, i)].clone()).collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let rank = echelon_rows(&mut rows, r, false);
    rows[rank..].iter().map(|row| row[r..].to_vec()).collect()
}

/// A finitely generated subgroup of Z^n, stored by its Hermite normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeZ {
    ambient: usize,
    basis: Vec<IntVector>,
}

impl LatticeZ {
    pub fn zero(ambient: usize) -> Self {
        LatticeZ {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows: Vec<IntVector> = IntMatrix::identity(ambient).to_rows();
        LatticeZ {
            ambient,
            basis: rows,
        }
    }

    pub fn from_generators(ambient: usize, gens: &[IntVector]) -> Self {
        LatticeZ {
            ambient,
            basis: hermite_normal_form(gens, ambient),
        }
    }

    /// Kernel lattice of an integer matrix (always saturated).
    pub fn kernel_of(m: &IntMatrix) -> Self {
        Self::from_generators(m.ncols(), &integer_kernel(m))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    fn pivot(row: &[BigInt]) -> usize {
        row.iter().position(|x| !x.is_zero()).expect("zero HNF row")
    }

    /// Integer coordinates of `v` with respect to the HNF basis.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<IntVector>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = Self::pivot(row);
            let (q, rem) = rest[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return Ok(None);
            }
            sub_multiple(&mut rest, row, &q);
            coords.push(q);
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_sublattice_of(&self, other: &LatticeZ) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as subgroups; identical HNF is equivalent to mutual containment.
    pub fn equals(&self, other: &LatticeZ) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(self.basis == other.basis)
    }

    pub fn sum(&self, other: &LatticeZ) -> LatticeZ {
        let gens: Vec<IntVector> = self.basis.iter().chain(&other.basis).cloned().collect();
        LatticeZ::from_generators(self.ambient, &gens)
    }

    pub fn intersection(&self, other: &LatticeZ) -> LatticeZ {
        assert_eq!(self.ambient, other.ambient);
        if self.basis.is_empty() || other.basis.is_empty() {
            return LatticeZ::zero(self.ambient);
        }
        // (a, b) with a·B1 = b·B2
        let k1 = self.basis.len();
        let stacked: Vec<IntVector> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|r| r.iter().map(|x| -x).collect()))
            .collect();
        let m = IntMatrix::from_rows(self.ambient, &stacked).transpose();
        let ker = integer_kernel(&m);
        let b1 = IntMatrix::from_rows(self.ambient, &self.basis);
        let gens: Vec<IntVector> = ker.iter().map(|c| b1.vec_mul(&c[..k1])).collect();
        LatticeZ::from_generators(self.ambient, &gens)
    }

    /// True when Z^n / self is torsion free.
    pub fn is_saturated(&self) -> bool {
        if self.basis.is_empty() {
            return true;
        }
        let sf = smith_normal_form(&IntMatrix::from_rows(self.ambient, &self.basis));
        sf.diagonal.iter().all(One::is_one)
    }

    /// Reduction mod 2 as a GF(2) subspace.
    pub fn mod2(&self) -> super::gf2::SubspaceGF2 {
        use super::gf2::{BitVec, SubspaceGF2};
        SubspaceGF2::from_generators(
            self.ambient,
            self.basis
                .iter()
                .map(|r| BitVec::from_bools(&r.iter().map(|x| x.is_odd()).collect::<Vec<_>>())),
        )
    }

    /// Image of the lattice under `x ↦ x · m` (rows as vectors).
    pub fn image(&self, m: &IntMatrix) -> LatticeZ {
        let gens: Vec<IntVector> = self.basis.iter().map(|b| m.vec_mul(b)).collect();
        LatticeZ::from_generators(m.ncols(), &gens)
    }

    /// Invariant factors of `self` inside `sup` (structure of `sup / self`).
    /// Returns `None` when `self` is not contained in `sup`.
    pub fn quotient_invariants(&self, sup: &LatticeZ) -> Result<Option<QuotientStructure>> {
        let mut coords = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            match sup.coordinates(b)? {
                Some(c) => coords.push(c),
                None => return Ok(None),
            }
        }
        let n = sup.rank();
        let diagonal = if coords.is_empty() {
            Vec::new()
        } else {
            smith_normal_form(&IntMatrix::from_rows(n, &coords)).diagonal
        };
        let torsion: Vec<BigInt> = diagonal.iter().filter(|d| !d.is_one()).cloned().collect();
        Ok(Some(QuotientStructure {
            free_rank: n - diagonal.len(),
            torsion,
        }))
    }
}

/// `Z^free_rank ⊕ ⨁ Z/t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl QuotientStructure {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Integer solution of `a·x = b`, if one exists.
pub fn solve_integer_system(a: &IntMatrix, b: &[BigInt]) -> Option<IntVector> {
    assert_eq!(a.nrows(), b.len());
    let sf = smith_normal_form(a);
    let ub = sf.left.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.ncols()];
    for (k, d) in sf.diagonal.iter().enumerate() {
        let (q, rem) = ub[k].div_rem(d);
        if !rem.is_zero() {
            return None;
        }
        y[k] = q;
    }
    if ub[sf.rank()..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(sf.right.mul_vec(&y))
}

/// Sparse integer matrix used for large boundary maps.
#[derive(Clone, Debug, Default)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: usize,
    /// (row, col) → nonzero entry
    pub entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, i: usize, j: usize, v: BigInt) {
        let e = self.entries.entry((i, j)).or_insert_with(BigInt::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for ((i, j), v) in &self.entries {
            m[(*i, *j)] = v.clone();
        }
        m
    }
}

/// Nonzero invariant factors of a sparse matrix: unit pivots are eliminated
/// sparsely first and the remainder goes through the dense Smith form.
pub fn invariant_factors(m: &SparseIntMatrix) -> Vec<BigInt> {
    use std::collections::{BTreeSet, HashMap};
    let mut rows: HashMap<usize, BTreeMap<usize, BigInt>> = HashMap::new();
    let mut col_rows: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for ((i, j), v) in &m.entries {
        rows.entry(*i).or_default().insert(*j, v.clone());
        col_rows.entry(*j).or_default().insert(*i);
    }
    let mut units = 0usize;
    loop {
        // one sweep over rows, shortest first; each takes its unit entry in the sparsest column
        let mut progress = false;
        let mut row_ids: Vec<usize> = rows.keys().copied().collect();
        row_ids.sort_unstable_by_key(|r| (rows[r].len(), *r));
        for pr in row_ids {
            let Some(row) = rows.get(&pr) else { continue };
            let pick = row
                .iter()
                .filter(|(_, v)| v.abs().is_one())
                .min_by_key(|(c, _)| (col_rows[*c].len(), **c))
                .map(|(c, _)| *c);
            let Some(pc) = pick else { continue };
            let pivot_row = rows.remove(&pr).expect("pivot row");
            for c in pivot_row.keys() {
                col_rows.get_mut(c).expect("column index").remove(&pr);
            }
            let pv = pivot_row[&pc].clone();
            let others: Vec<usize> = col_rows[&pc].iter().copied().collect();
            for r in others {
                let row = rows.get_mut(&r).expect("row");
                let factor = &row[&pc] * &pv; // pv = ±1, so a/pv = a·pv
                for (c, v) in &pivot_row {
                    let e = row.entry(*c).or_insert_with(BigInt::zero);
                    let was_zero = e.is_zero();
                    *e -= &factor * v;
                    if e.is_zero() {
                        row.remove(c);
                        col_rows.get_mut(c).expect("column").remove(&r);
                    } else if was_zero {
                        col_rows.entry(*c).or_default().insert(r);
                    }
                }
                if row.is_empty() {
                    rows.remove(&r);
                }
            }
            col_rows.remove(&pc);
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let mut out = vec![BigInt::one(); units];
    if !rows.is_empty() {
        let mut row_ids: Vec<usize> = rows.keys().copied().collect();
        row_ids.sort_unstable();
        let mut col_ids: Vec<usize> = col_rows
            .iter()
            .filter(|(_, rs)| !rs.is_empty())
            .map(|(c, _)| *c)
            .collect();
        col_ids.sort_unstable();
        let col_pos: HashMap<usize, usize> =
            col_ids.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        let mut dense = IntMatrix::zeros(row_ids.len(), col_ids.len());
        for (k, r) in row_ids.iter().enumerate() {
            for (c, v) in &rows[r] {
                dense[(k, col_pos[c])] = v.clone();
            }
        }
        out.extend(smith_normal_form(&dense).diagonal);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        int_vec(xs)
    }

    #[test]
    fn snf_of_two_by_two() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let sf = smith_normal_form(&m);
        assert_eq!(sf.diagonal, big(&[2, 4]));
        assert!(sf.verify(&m));
        // gcd of entries = 2, |det| = 8
        assert_eq!(sf.diagonal[0].clone() * &sf.diagonal[1], BigInt::from(8));
    }

    #[test]
    fn snf_trivial_cases() {
        let sf = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!(sf.diagonal, big(&[1, 1]));
        let sf = smith_normal_form(&IntMatrix::zeros(2, 2));
        assert!(sf.diagonal.is_empty());
    }

    #[test]
    fn lattice_examples() {
        let l = LatticeZ::from_generators(2, &[big(&[2, 0]), big(&[0, 1])]);
        assert!(!l.contains(&big(&[1, 0])).unwrap());
        let l = LatticeZ::from_generators(2, &[big(&[1, 1])]);
        assert!(l.contains(&big(&[2, 2])).unwrap());
        let a = LatticeZ::from_generators(2, &[big(&[2, 0]), big(&[0, 2])]);
        let b = LatticeZ::from_generators(2, &[big(&[2, 2]), big(&[0, 2])]);
        assert!(a.equals(&b).unwrap());
        assert_eq!(a.basis(), &[big(&[2, 0]), big(&[0, 2])]);
    }

    #[test]
    fn membership_dimension_mismatch() {
        let l = LatticeZ::full(2);
        assert!(matches!(
            l.contains(&big(&[1, 2, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(l.equals(&LatticeZ::full(3)).is_err());
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y = 0 → kernel generated by (2, -1)
        let m = IntMatrix::from_i64(&[&[2, 4]]);
        let k = LatticeZ::kernel_of(&m);
        assert_eq!(k.rank(), 1);
        assert!(k.contains(&big(&[2, -1])).unwrap());
        assert!(k.is_saturated());
    }

    #[test]
    fn intersection_of_lattices() {
        let a = LatticeZ::from_generators(2, &[big(&[2, 0]), big(&[0, 1])]);
        let b = LatticeZ::from_generators(2, &[big(&[1, 0]), big(&[0, 3])]);
        let c = a.intersection(&b);
        assert!(c
            .equals(&LatticeZ::from_generators(2, &[big(&[2, 0]), big(&[0, 3])]))
            .unwrap());
    }

    #[test]
    fn integer_system_parity_obstruction() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(solve_integer_system(&a, &big(&[1, 0])).is_none());
        let x = solve_integer_system(&a, &big(&[4, 3])).unwrap();
        assert_eq!(a.mul_vec(&x), big(&[4, 3]));
    }

    #[test]
    fn quotient_structure() {
        let sup = LatticeZ::full(2);
        let sub = LatticeZ::from_generators(2, &[big(&[2, 0])]);
        let q = sub.quotient_invariants(&sup).unwrap().unwrap();
        assert_eq!(q.free_rank, 1);
        assert_eq!(q.torsion, big(&[2]));
    }

    fn arb_int_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..7, r * c).prop_map(move |xs| {
                let rows: Vec<IntVector> = xs.chunks(c).map(big).collect();
                IntMatrix::from_rows(c, &rows)
            })
        })
    }

    fn gcd_of_minors(m: &IntMatrix, k: usize) -> BigInt {
        // brute-force oracle over all k×k minors
        fn det(m: &[Vec<BigInt>]) -> BigInt {
            let n = m.len();
            if n == 0 {
                return BigInt::one();
            }
            let mut acc = BigInt::zero();
            for j in 0..n {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    acc += term
                } else {
                    acc -= term
                }
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
                .collect()
        }
        let mut g = BigInt::zero();
        for rs in subsets(m.nrows(), k) {
            for cs in subsets(m.ncols(), k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[(i, j)].clone()).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        g
    }

    proptest! {
        #[test]
        fn snf_transforms_multiply_back(m in arb_int_matrix()) {
            let sf = smith_normal_form(&m);
            prop_assert!(sf.verify(&m));
            // determinantal divisors d1⋯dk = gcd of k×k minors
            let mut prod = BigInt::one();
            for (k, d) in sf.diagonal.iter().enumerate() {
                prod *= d;
                prop_assert_eq!(&prod, &gcd_of_minors(&m, k + 1));
            }
        }

        #[test]
        fn sparse_factors_match_dense(m in arb_int_matrix()) {
            let mut s = SparseIntMatrix::new(m.nrows(), m.ncols());
            for i in 0..m.nrows() {
                for j in 0..m.ncols() {
                    s.add(i, j, m[(i, j)].clone());
                }
            }
            let mut dense = smith_normal_form(&m).diagonal;
            dense.sort();
            prop_assert_eq!(invariant_factors(&s), dense);
        }

        #[test]
        fn hnf_is_idempotent_and_equality_is_symmetric(m in arb_int_matrix()) {
            let rows = m.to_rows();
            let l = LatticeZ::from_generators(m.ncols(), &rows);
            let again = LatticeZ::from_generators(m.ncols(), l.basis());
            prop_assert!(l.equals(&again).unwrap());
            prop_assert!(again.equals(&l).unwrap());
            for r in &rows {
                prop_assert!(l.contains(r).unwrap());
            }
        }

        #[test]
        fn kernel_vectors_vanish(m in arb_int_matrix()) {
            let k = integer_kernel(&m);
            let sf = smith_normal_form(&m);
            prop_assert_eq!(k.len(), m.ncols() - sf.rank());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            prop_assert!(LatticeZ::from_generators(m.ncols(), &k).is_saturated());
        }
    }
}

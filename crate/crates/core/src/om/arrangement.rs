use std::collections::{BTreeSet, VecDeque};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::{dot, nullspace, rref};

use super::matroid::OrientedMatroid;
use super::sign::{Mask, SignVector};

/// A central arrangement of hyperplanes given by rational normal vectors in `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    normals: Vec<Vec<BigRational>>,
}

impl Arrangement {
    pub fn new(dim: usize, normals: Vec<Vec<BigRational>>) -> Result<Self> {
        for (i, v) in normals.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if v.iter().all(Zero::is_zero) {
                return Err(Error::Degenerate(i + 1));
            }
        }
        if normals.len() > 64 {
            return Err(Error::TooLarge(normals.len()));
        }
        Ok(Arrangement { dim, normals })
    }

    /// Convenience constructor for integer normals; panics on degenerate input.
    pub fn from_integers(normals: &[&[i64]]) -> Self {
        let dim = normals.first().map_or(0, |v| v.len());
        let normals = normals
            .iter()
            .map(|v| {
                v.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        Arrangement::new(dim, normals).expect("valid integer arrangement")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<BigRational>] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    /// Rank of the span of the normals.
    pub fn rank(&self) -> usize {
        rref(&self.normals, self.dim).1.len()
    }

    pub fn sign_vector_of(&self, x: &[BigRational]) -> SignVector {
        let mut plus: Mask = 0;
        let mut minus: Mask = 0;
        for (i, v) in self.normals.iter().enumerate() {
            let s = dot(v, x);
            if s.is_positive() {
                plus |= 1 << i;
            } else if s.is_negative() {
                minus |= 1 << i;
            }
        }
        SignVector::new(self.normals.len(), plus, minus)
    }

    /// Cocircuits: for each hyperplane of the vector matroid, a vector in the
    /// span of the normals orthogonal to that hyperplane's elements, and its negation.
    pub fn cocircuits(&self) -> BTreeSet<SignVector> {
        let n = self.normals.len();
        let (basis, _) = rref(&self.normals, self.dim);
        let r = basis.len();
        let mut out = BTreeSet::new();
        if r == 0 {
            return out;
        }
        // Gram entries g[i][j] = <v_i, b_j>
        let gram: Vec<Vec<BigRational>> = self
            .normals
            .iter()
            .map(|v| basis.iter().map(|b| dot(v, b)).collect())
            .collect();
        for subset in subsets_of_size(n, r - 1) {
            let rows: Vec<Vec<BigRational>> = subset.iter().map(|&i| gram[i].clone()).collect();
            let ns = nullspace(&rows, r);
            if ns.len() != 1 {
                continue;
            }
            let mut x = vec![BigRational::zero(); self.dim];
            for (c, b) in ns[0].iter().zip(&basis) {
                for (xk, bk) in x.iter_mut().zip(b) {
                    *xk += c * bk;
                }
            }
            let sv = self.sign_vector_of(&x);
            out.insert(sv);
            out.insert(sv.neg());
        }
        out
    }

    /// The oriented matroid of covectors (face sign vectors) of the arrangement.
    pub fn oriented_matroid(&self) -> Result<OrientedMatroid> {
        let n = self.normals.len();
        let cocircuits: Vec<SignVector> = self.cocircuits().into_iter().collect();
        let covectors = compose_closure(n, &cocircuits);
        OrientedMatroid::from_covectors(n, covectors)
    }
}

/// `{0}` together with all compositions of the given sign vectors, by a
/// breadth-first worklist in canonical order.
pub fn compose_closure(n: usize, generators: &[SignVector]) -> BTreeSet<SignVector> {
    let zero = SignVector::zero(n);
    let mut seen: BTreeSet<SignVector> = BTreeSet::from([zero]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for c in generators {
            let y = x.compose_unchecked(c);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::matroid::check_covector_axioms;

    #[test]
    fn uniform_rank_two_on_three() {
        for normals in [
            [&[1i64, 0][..], &[0, 1], &[1, 1]],
            [&[1, 0], &[0, 1], &[-1, 1]],
        ] {
            let m = Arrangement::from_integers(&normals)
                .oriented_matroid()
                .unwrap();
            assert_eq!(m.covectors().len(), 13);
            assert_eq!(m.topes().len(), 6);
            assert_eq!(m.rank(), 2);
            assert_eq!(m.flats(), &[0, 0b001, 0b010, 0b100, 0b111]);
            assert!(check_covector_axioms(m.covectors()).pass());
        }
    }

    #[test]
    fn small_cases() {
        let m = Arrangement::from_integers(&[&[1, 0], &[0, 1]])
            .oriented_matroid()
            .unwrap();
        assert_eq!((m.covectors().len(), m.topes().len()), (9, 4));
        assert_eq!(m.flats(), &[0, 0b01, 0b10, 0b11]);
        let m = Arrangement::from_integers(&[&[1]])
            .oriented_matroid()
            .unwrap();
        assert_eq!(m.covectors().len(), 3);
    }

    #[test]
    fn zero_normal_is_degenerate() {
        let normals = vec![vec![BigRational::zero(), BigRational::zero()]];
        assert!(matches!(
            Arrangement::new(2, normals),
            Err(Error::Degenerate(1))
        ));
    }

    #[test]
    fn origin_has_full_dimension() {
        let m = Arrangement::from_integers(&[&[1, 0], &[0, 1], &[-1, 1]])
            .oriented_matroid()
            .unwrap();
        assert_eq!(m.covector_dim(&SignVector::zero(3)), 2);
    }
}

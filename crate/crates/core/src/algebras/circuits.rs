use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::nullspace;
use crate::om::sign::{mask_elements, Mask};
use crate::om::{Arrangement, OrientedMatroid, SignVector};

/// A total order on the ground set; NBC sets depend on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementOrder {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl ElementOrder {
    pub fn identity(n: usize) -> Self {
        ElementOrder {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    /// `order[k]` is the element in position `k` (zero-based elements).
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (k, &e) in order.iter().enumerate() {
            if e >= n || position[e] != usize::MAX {
                return Err(Error::Ordering(format!("not a permutation of 1..{n}")));
            }
            position[e] = k;
        }
        Ok(ElementOrder { order, position })
    }

    /// Parses a comma-separated list of one-based element labels, e.g. `3,1,2`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let order = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&e| e >= 1)
                    .map(|e| e - 1)
                    .ok_or_else(|| Error::Ordering(format!("invalid element {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if order.len() != n {
            return Err(Error::Ordering(format!(
                "expected {n} elements, got {}",
                order.len()
            )));
        }
        Self::new(order)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }

    pub fn minimum(&self) -> Option<usize> {
        self.order.first().copied()
    }

    pub fn min_of(&self, s: Mask) -> Option<usize> {
        mask_elements(s).min_by_key(|&e| self.position[e])
    }

    /// Elements of `s`, largest first.
    pub fn descending(&self, s: Mask) -> Vec<usize> {
        let mut v: Vec<usize> = mask_elements(s).collect();
        v.sort_by_key(|&e| std::cmp::Reverse(self.position[e]));
        v
    }
}

/// Minimal dependent sets: `rank(C) = |C| − 1 = rank(C ∖ i)` for all `i ∈ C`.
pub fn circuits(m: &OrientedMatroid) -> Vec<Mask> {
    let n = m.ground_size();
    let mut out = Vec::new();
    for size in 1..=(m.rank() + 1).min(n) {
        for s in super::poly::p_subsets(n, size) {
            let k = size - 1;
            if m.rank_of(s) == k && mask_elements(s).all(|i| m.rank_of(s & !(1 << i)) == k) {
                out.push(s);
            }
        }
    }
    out
}

/// Orthogonality of sign vectors: disjoint supports, or the products
/// `X_e Y_e` take both signs on the common support.
pub fn orthogonal(x: &SignVector, y: &SignVector) -> bool {
    let same = (x.plus() & y.plus()) | (x.minus() & y.minus());
    let opposite = x.separation(y);
    (same == 0 && opposite == 0) || (same != 0 && opposite != 0)
}

/// The signed circuit on `c` with a `+` at its least index, found as the sign
/// vector supported on `c` orthogonal to every covector.
pub fn signed_circuit(m: &OrientedMatroid, c: Mask) -> Result<SignVector> {
    let n = m.ground_size();
    let elems: Vec<usize> = mask_elements(c).collect();
    let first = elems[0];
    let rest = &elems[1..];
    let mut found = Vec::new();
    for bits in 0u64..(1 << rest.len()) {
        let minus = rest
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .fold(0, |acc, (_, &e)| acc | 1 << e);
        let x = SignVector::new(n, c & !minus, minus);
        debug_assert!(x.plus() >> first & 1 == 1);
        if m.covectors().iter().all(|y| orthogonal(&x, y)) {
            found.push(x);
        }
    }
    match found.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::Axiom(format!(
            "expected one signed circuit on {}, found {}",
            crate::om::sign::mask_label(c),
            found.len()
        ))),
    }
}

pub fn signed_circuits(m: &OrientedMatroid) -> Result<Vec<SignVector>> {
    circuits(m)
        .into_iter()
        .map(|c| signed_circuit(m, c))
        .collect()
}

/// Signed circuit of a realized circuit from the linear dependency of its normals.
pub fn realized_signed_circuit(a: &Arrangement, c: Mask) -> Option<SignVector> {
    let elems: Vec<usize> = mask_elements(c).collect();
    // columns are the normals in c
    let rows: Vec<Vec<_>> = (0..a.dim())
        .map(|k| elems.iter().map(|&e| a.normals()[e][k].clone()).collect())
        .collect();
    let ns = nullspace(&rows, elems.len());
    if ns.len() != 1 || ns[0].iter().any(Zero::is_zero) {
        return None;
    }
    let lam = &ns[0];
    let flip = lam[0].is_negative();
    let mut plus = 0;
    let mut minus = 0;
    for (l, &e) in lam.iter().zip(&elems) {
        if l.is_positive() != flip {
            plus |= 1 << e;
        } else {
            minus |= 1 << e;
        }
    }
    Some(SignVector::new(a.len(), plus, minus))
}

/// Size-`p` independent sets containing no broken circuit (a circuit minus its minimum).
pub fn nbc_sets(m: &OrientedMatroid, order: &ElementOrder, p: usize) -> Vec<Mask> {
    let broken: Vec<Mask> = circuits(m)
        .into_iter()
        .map(|c| c & !(1 << order.min_of(c).expect("nonempty circuit")))
        .collect();
    super::poly::p_subsets(m.ground_size(), p)
        .into_iter()
        .filter(|&s| m.rank_of(s) == p && broken.iter().all(|b| b & !s != 0))
        .collect()
}

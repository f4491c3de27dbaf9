use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::linalg::{BitVec, IntVector};
use crate::om::sign::{mask_elements, Mask};

/// All `p`-subsets of `{0..n}` as masks, in lexicographic order of their sorted elements.
pub fn p_subsets(n: usize, p: usize) -> Vec<Mask> {
    crate::om::arrangement::subsets_of_size(n, p)
        .into_iter()
        .map(|s| s.iter().fold(0, |m, e| m | 1 << e))
        .collect()
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, i);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Element of `Z[x_i : i ∈ E]/(x_i²)`, stored as monomial mask → coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SquareFreePoly {
    terms: BTreeMap<Mask, BigInt>,
}

impl SquareFreePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(s: Mask, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(s, c);
        p
    }

    /// `Σ_j c_j x_j`.
    pub fn linear(coeffs: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (j, c) in coeffs {
            p.add_term(1 << j, c);
        }
        p
    }

    pub fn add_term(&mut self, s: Mask, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(s).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            out.add_term(*s, c * k);
        }
        out
    }

    /// Product in the square-free ring: overlapping monomials vanish.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                if s & t == 0 {
                    out.add_term(s | t, a * b);
                }
            }
        }
        out
    }

    pub fn coefficient(&self, s: Mask) -> BigInt {
        self.terms.get(&s).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &BigInt)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coordinates against the given monomial list; `None` if a term falls outside it.
    pub fn coordinates(&self, monomials: &[Mask]) -> Option<IntVector> {
        let pos: BTreeMap<Mask, usize> =
            monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut v = vec![BigInt::zero(); monomials.len()];
        for (s, c) in &self.terms {
            v[*pos.get(s)?] = c.clone();
        }
        Some(v)
    }

    pub fn from_coordinates(monomials: &[Mask], v: &[BigInt]) -> Self {
        let mut p = Self::zero();
        for (s, c) in monomials.iter().zip(v) {
            p.add_term(*s, c.clone());
        }
        p
    }

    pub fn mod2(&self, monomials: &[Mask]) -> BitVec {
        let pos: BTreeMap<Mask, usize> =
            monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        BitVec::from_ones(
            monomials.len(),
            self.terms
                .iter()
                .filter(|(_, c)| c.is_odd())
                .map(|(s, _)| pos[s]),
        )
    }
}

impl fmt::Display for SquareFreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (s, c) in &self.terms {
            let mono: String = mask_elements(*s).map(|e| format!("x{}", e + 1)).collect();
            let mag = if c.clone() < BigInt::zero() {
                -c.clone()
            } else {
                c.clone()
            };
            let sign = if *c < BigInt::zero() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag}{mono}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SquareFreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquareFreePoly({self})")
    }
}

/// Element of `∧^p Z^E` in the chart of sorted `p`-subsets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WedgeP {
    p: usize,
    coeffs: BTreeMap<Mask, BigInt>,
}

impl WedgeP {
    pub fn zero(p: usize) -> Self {
        WedgeP {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    /// `v_1 ∧ … ∧ v_p`; the coefficient on `S` is the minor of the columns in `S`.
    pub fn from_vectors(n: usize, vectors: &[IntVector]) -> Self {
        let p = vectors.len();
        let mut coeffs = BTreeMap::new();
        for s in p_subsets(n, p) {
            let cols: Vec<usize> = mask_elements(s).collect();
            let minor: Vec<Vec<BigInt>> = vectors
                .iter()
                .map(|v| cols.iter().map(|&c| v[c].clone()).collect())
                .collect();
            let d = determinant(minor);
            if !d.is_zero() {
                coeffs.insert(s, d);
            }
        }
        WedgeP { p, coeffs }
    }

    /// `e_{A_1} ∧ … ∧ e_{A_p}` with `e_A = Σ_{i∈A} e_i`.
    pub fn from_sets(n: usize, sets: &[Mask]) -> Self {
        let vectors: Vec<IntVector> = sets
            .iter()
            .map(|&a| {
                (0..n)
                    .map(|i| {
                        if a >> i & 1 == 1 {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_vectors(n, &vectors)
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn coefficient(&self, s: Mask) -> BigInt {
        self.coeffs.get(&s).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &WedgeP) -> WedgeP {
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            let e = out.coeffs.entry(*s).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                out.coeffs.remove(s);
            }
        }
        out
    }

    pub fn coordinates(&self, subsets: &[Mask]) -> IntVector {
        subsets.iter().map(|s| self.coefficient(*s)).collect()
    }

    pub fn mod2(&self, subsets: &[Mask]) -> BitVec {
        BitVec::from_bools(
            &subsets
                .iter()
                .map(|s| self.coefficient(*s).is_odd())
                .collect::<Vec<_>>(),
        )
    }
}

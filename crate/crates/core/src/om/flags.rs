use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

use super::matroid::OrientedMatroid;
use super::sign::{mask_label, Mask, SignVector};

/// A chain of flats `∅ = F_0 ⊊ F_1 ⊊ … ⊊ F_k = E`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    flats: Vec<Mask>,
}

impl Flag {
    /// Validates that the chain starts at `∅`, ends at `E`, is strict and
    /// consists of flats of `m`.
    pub fn new(m: &OrientedMatroid, flats: Vec<Mask>) -> Result<Self> {
        if flats.first() != Some(&0) || flats.last() != Some(&m.ground_mask()) {
            return Err(Error::NotAFlag(
                "must start at the empty set and end at E".into(),
            ));
        }
        for w in flats.windows(2) {
            if w[0] & !w[1] != 0 || w[0] == w[1] {
                return Err(Error::NotAFlag(format!(
                    "{} is not strictly contained in {}",
                    mask_label(w[0]),
                    mask_label(w[1])
                )));
            }
        }
        if let Some(f) = flats.iter().find(|f| !m.is_flat(**f)) {
            return Err(Error::NotAFlag(format!("{} is not a flat", mask_label(*f))));
        }
        Ok(Flag { flats })
    }

    /// The flag `∅ < E`.
    pub fn trivial(m: &OrientedMatroid) -> Self {
        if m.ground_mask() == 0 {
            return Flag { flats: vec![0] };
        }
        Flag {
            flats: vec![0, m.ground_mask()],
        }
    }

    /// `F_0, …, F_k` including both ends.
    pub fn flats(&self) -> &[Mask] {
        &self.flats
    }

    /// `F_i` (with `F_0 = ∅`).
    pub fn flat(&self, i: usize) -> Mask {
        self.flats[i]
    }

    /// Number of steps `k`.
    pub fn length(&self) -> usize {
        self.flats.len() - 1
    }

    /// The interior flats `F_1, …, F_{k−1}`.
    pub fn interior(&self) -> &[Mask] {
        &self.flats[1..self.flats.len().saturating_sub(1).max(1)]
    }

    /// `B_i = F_i ∖ F_{i−1}` for `1 ≤ i ≤ k`.
    pub fn block(&self, i: usize) -> Mask {
        self.flats[i] & !self.flats[i - 1]
    }

    pub fn blocks(&self) -> Vec<Mask> {
        (1..self.flats.len()).map(|i| self.block(i)).collect()
    }

    pub fn is_complete(&self, m: &OrientedMatroid) -> bool {
        self.length() == m.rank()
            && self
                .flats
                .iter()
                .enumerate()
                .all(|(i, f)| m.flat_rank(*f) == Some(i))
    }

    /// Whether every flat of `self` occurs in `other`.
    pub fn is_subflag_of(&self, other: &Flag) -> bool {
        self.flats.iter().all(|f| other.flats.contains(f))
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .flats
            .iter()
            .map(|x| {
                if *x == 0 {
                    "∅".to_string()
                } else {
                    mask_label(*x)
                }
            })
            .collect();
        f.write_str(&parts.join(" < "))
    }
}

impl fmt::Debug for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Flag({self})")
    }
}

/// Complete flags (maximal chains of the flat lattice) when `complete`,
/// otherwise all chains `∅ < F_1 < … < F_k < E` of proper flats, trivial flag included.
pub fn enumerate_flags(m: &OrientedMatroid, complete: bool) -> Vec<Flag> {
    let e = m.ground_mask();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Mask>> = vec![vec![0]];
    while let Some(chain) = stack.pop() {
        let top = *chain.last().expect("nonempty chain");
        if top == e {
            out.push(Flag { flats: chain });
            continue;
        }
        let r = m.flat_rank(top).expect("flat");
        for &g in m.flats() {
            if g == top || top & !g != 0 {
                continue;
            }
            if complete && m.flat_rank(g) != Some(r + 1) {
                continue;
            }
            let mut next = chain.clone();
            next.push(g);
            stack.push(next);
        }
    }
    out.sort();
    out
}

/// Covectors of the block `F_i ∖ F_{i−1}`: restrictions of covectors vanishing on `F_{i−1}`.
fn block_covectors(m: &OrientedMatroid, flag: &Flag, i: usize) -> BTreeSet<SignVector> {
    m.minor_covectors(flag.flat(i - 1), flag.block(i))
}

/// The initial oriented matroid `M_F`: the direct sum over blocks of `(M|F_i)/F_{i−1}`.
pub fn initial_matroid(m: &OrientedMatroid, flag: &Flag) -> Result<OrientedMatroid> {
    Flag::new(m, flag.flats.clone())?;
    let n = m.ground_size();
    let mut acc: Vec<SignVector> = vec![SignVector::zero(n)];
    for i in 1..=flag.length() {
        let parts = block_covectors(m, flag, i);
        acc = acc
            .iter()
            .flat_map(|x| parts.iter().map(move |y| x.compose_unchecked(y)))
            .collect();
    }
    Ok(OrientedMatroid::from_covectors_unchecked(n, acc))
}

/// `T_F = {T : T ∖ F_i is a covector for all i}`.
pub fn tope_flag_set(m: &OrientedMatroid, flag: &Flag) -> Vec<SignVector> {
    m.topes()
        .iter()
        .filter(|t| flag.flats.iter().all(|f| m.is_covector(&t.zero_out(*f))))
        .copied()
        .collect()
}

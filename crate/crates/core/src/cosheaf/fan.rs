use serde::Serialize;

use crate::error::{Error, Result};
use crate::om::sign::{mask_label, Mask};
use crate::om::{enumerate_flags, Flag, OrientedMatroid};

/// The cone of the matroid fan spanned by `e_{F_1}, …, e_{F_k}` and `±e_E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanCone {
    pub flag: Flag,
    /// `e_{F_i}` for the interior flats, then `e_E`; `−e_E` is implied.
    pub generators: Vec<Mask>,
}

impl FanCone {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn label(&self) -> String {
        self.flag.to_string()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeSummary {
    pub flag: String,
    pub generators: Vec<String>,
    pub dim: usize,
}

impl From<&FanCone> for ConeSummary {
    fn from(c: &FanCone) -> Self {
        ConeSummary {
            flag: c.label(),
            generators: c
                .generators
                .iter()
                .map(|g| format!("e{}", mask_label(*g)))
                .collect(),
            dim: c.dim(),
        }
    }
}

/// One cone per flag of proper flats, the trivial flag giving the lineality line.
pub fn fan_cones(m: &OrientedMatroid) -> Vec<FanCone> {
    enumerate_flags(m, false)
        .into_iter()
        .map(|flag| {
            let mut generators = flag.interior().to_vec();
            generators.retain(|&f| f != 0 && f != m.ground_mask());
            generators.push(m.ground_mask());
            FanCone { flag, generators }
        })
        .collect()
}

/// Lifts a complete flag `G` of `M_F` to a complete flag of `M` with the same
/// difference sets: block by block, `F_{i−1} ∪ (G_j ∩ (F_i ∖ F_{i−1}))`.
pub fn flag_lift(m: &OrientedMatroid, m_f: &OrientedMatroid, f: &Flag, g: &Flag) -> Result<Flag> {
    if !g.is_complete(m_f) {
        return Err(Error::NotAFlag(format!(
            "{g} is not a complete flag of the initial matroid"
        )));
    }
    let mut flats = vec![0];
    for i in 1..=f.length() {
        let block = f.block(i);
        let base = f.flat(i - 1);
        let mut last = 0;
        for &gj in g.flats() {
            let part = gj & block;
            if part != last {
                flats.push(base | part);
                last = part;
            }
        }
    }
    let lifted = Flag::new(m, flats)?;
    if !lifted.is_complete(m) {
        return Err(Error::NotAFlag(format!("lift {lifted} is not complete")));
    }
    Ok(lifted)
}

/// Difference sets `G_i ∖ G_{i−1}`, sorted.
pub fn difference_sets(g: &Flag) -> Vec<Mask> {
    let mut d = g.blocks();
    d.sort_unstable();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{builtin, CORPUS};
    use crate::om::initial_matroid;

    #[test]
    fn cone_counts() {
        let m = builtin("u23").unwrap().load().matroid;
        let cones = fan_cones(&m);
        assert_eq!(cones.len(), 4);
        assert_eq!(cones.iter().filter(|c| c.dim() == 2).count(), 3);
        let u11 = builtin("u11").unwrap().load().matroid;
        assert_eq!(fan_cones(&u11).len(), 1);
    }

    #[test]
    fn cone_count_matches_chains_of_proper_flats() {
        for e in CORPUS {
            let m = e.load().matroid;
            let proper: Vec<Mask> = m
                .flats()
                .iter()
                .copied()
                .filter(|&f| f != 0 && f != m.ground_mask())
                .collect();
            // chains of proper flats, counted by subsets that are totally ordered
            let mut count = 0;
            for bits in 0u64..1 << proper.len() {
                let chosen: Vec<Mask> = (0..proper.len())
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| proper[i])
                    .collect();
                let chain = chosen
                    .iter()
                    .all(|a| chosen.iter().all(|b| a & !b == 0 || b & !a == 0));
                if chain {
                    count += 1;
                }
            }
            assert_eq!(fan_cones(&m).len(), count, "{}", e.name);
        }
    }

    #[test]
    fn lifting_examples() {
        let m = builtin("u23").unwrap().load().matroid;
        let trivial = Flag::trivial(&m);
        for g in enumerate_flags(&m, true) {
            assert_eq!(flag_lift(&m, &m, &trivial, &g).unwrap(), g);
        }
        let f = Flag::new(&m, vec![0, 0b001, 0b111]).unwrap();
        let m_f = initial_matroid(&m, &f).unwrap();
        let g = Flag::new(&m_f, vec![0, 0b001, 0b111]).unwrap();
        assert_eq!(flag_lift(&m, &m_f, &f, &g).unwrap(), f);
        assert!(flag_lift(&m, &m_f, &f, &Flag::trivial(&m_f)).is_err());
    }

    #[test]
    fn lifts_preserve_difference_sets() {
        for e in CORPUS {
            let m = e.load().matroid;
            for f in enumerate_flags(&m, false) {
                let m_f = initial_matroid(&m, &f).unwrap();
                for g in enumerate_flags(&m_f, true) {
                    let lifted = flag_lift(&m, &m_f, &f, &g).unwrap();
                    assert_eq!(
                        difference_sets(&lifted),
                        difference_sets(&g),
                        "{} {f} {g}",
                        e.name
                    );
                }
            }
        }
    }
}

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};

use super::sign::{full_mask, Mask, SignVector};

/// Which covector axiom failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Length,
    ContainsZero,
    Negation,
    Composition,
    Elimination,
}

/// Outcome of [`check_covector_axioms`], with the offending sign vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub violation: Option<(Axiom, Vec<SignVector>)>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.violation.is_none()
    }

    pub fn describe(&self) -> String {
        match &self.violation {
            None => "all covector axioms hold".to_string(),
            Some((axiom, w)) => {
                let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                format!("{axiom:?} fails at [{}]", w.join(", "))
            }
        }
    }
}

fn violation(axiom: Axiom, witness: Vec<SignVector>) -> AxiomReport {
    AxiomReport {
        violation: Some((axiom, witness)),
    }
}

/// Checks the covector axioms: zero, symmetry, composition and (exhaustively) elimination.
pub fn check_covector_axioms(set: &[SignVector]) -> AxiomReport {
    let Some(first) = set.first() else {
        return violation(Axiom::ContainsZero, vec![]);
    };
    let n = first.len();
    if let Some(bad) = set.iter().find(|x| x.len() != n) {
        return violation(Axiom::Length, vec![*first, *bad]);
    }
    let members: HashSet<SignVector> = set.iter().copied().collect();
    if !members.contains(&SignVector::zero(n)) {
        return violation(Axiom::ContainsZero, vec![]);
    }
    let mut sorted: Vec<SignVector> = members.iter().copied().collect();
    sorted.sort();
    for x in &sorted {
        if !members.contains(&x.neg()) {
            return violation(Axiom::Negation, vec![*x]);
        }
    }
    for x in &sorted {
        for y in &sorted {
            if !members.contains(&x.compose_unchecked(y)) {
                return violation(Axiom::Composition, vec![*x, *y]);
            }
        }
    }
    for (i, x) in sorted.iter().enumerate() {
        for y in &sorted[i + 1..] {
            let sep = x.separation(y);
            if sep == 0 {
                continue;
            }
            let xy = x.compose_unchecked(y);
            let fixed = !sep & full_mask(n);
            for e in (0..n).filter(|e| sep >> e & 1 == 1) {
                let found = sorted.iter().any(|z| {
                    z.support() >> e & 1 == 0
                        && z.plus() & fixed == xy.plus() & fixed
                        && z.minus() & fixed == xy.minus() & fixed
                });
                if !found {
                    return violation(Axiom::Elimination, vec![*x, *y]);
                }
            }
        }
    }
    AxiomReport { violation: None }
}

/// An oriented matroid on `{0, …, n−1}` given by its complete covector set.
#[derive(Clone, Debug)]
pub struct OrientedMatroid {
    n: usize,
    covectors: Vec<SignVector>,
    index: HashSet<SignVector>,
    topes: Vec<SignVector>,
    tope_index: HashMap<SignVector, usize>,
    /// Flats sorted by (rank, mask).
    flats: Vec<Mask>,
    flat_rank: HashMap<Mask, usize>,
    rank: usize,
}

impl OrientedMatroid {
    /// Validates the axioms and looplessness before building.
    pub fn from_covectors(
        n: usize,
        covectors: impl IntoIterator<Item = SignVector>,
    ) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let set: BTreeSet<SignVector> = covectors.into_iter().collect();
        let list: Vec<SignVector> = set.into_iter().collect();
        if let Some(bad) = list.iter().find(|x| x.len() != n) {
            return Err(Error::LengthMismatch(n, bad.len()));
        }
        let report = check_covector_axioms(&list);
        if !report.pass() {
            return Err(Error::Axiom(report.describe()));
        }
        let om = Self::from_covectors_unchecked(n, list);
        let support = om.covectors.iter().fold(0, |m, x| m | x.support());
        if support != full_mask(n) {
            let e = (0..n).find(|e| support >> e & 1 == 0).unwrap_or(0);
            return Err(Error::Axiom(format!("element {} is a loop", e + 1)));
        }
        Ok(om)
    }

    /// Builds without validation; callers guarantee a loopless covector set.
    pub(crate) fn from_covectors_unchecked(
        n: usize,
        covectors: impl IntoIterator<Item = SignVector>,
    ) -> Self {
        let set: BTreeSet<SignVector> = covectors.into_iter().collect();
        let covectors: Vec<SignVector> = set.into_iter().collect();
        let index: HashSet<SignVector> = covectors.iter().copied().collect();
        let topes: Vec<SignVector> = covectors
            .iter()
            .filter(|x| x.is_tope_shaped())
            .copied()
            .collect();
        let tope_index = topes.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let flat_set: BTreeSet<Mask> = covectors.iter().map(|x| x.zero_set()).collect();
        let mut by_size: Vec<Mask> = flat_set.into_iter().collect();
        by_size.sort_by_key(|m| (m.count_ones(), *m));
        let mut flat_rank: HashMap<Mask, usize> = HashMap::new();
        for &f in &by_size {
            let r = by_size
                .iter()
                .filter(|&&g| g != f && g & !f == 0)
                .map(|g| flat_rank.get(g).map_or(0, |r| r + 1))
                .max()
                .unwrap_or(0);
            flat_rank.insert(f, r);
        }
        let mut flats = by_size;
        flats.sort_by_key(|m| (flat_rank[m], *m));
        let rank = flat_rank.get(&full_mask(n)).copied().unwrap_or(0);
        OrientedMatroid {
            n,
            covectors,
            index,
            topes,
            tope_index,
            flats,
            flat_rank,
            rank,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground_mask(&self) -> Mask {
        full_mask(self.n)
    }

    pub fn covectors(&self) -> &[SignVector] {
        &self.covectors
    }

    pub fn is_covector(&self, x: &SignVector) -> bool {
        self.index.contains(x)
    }

    pub fn topes(&self) -> &[SignVector] {
        &self.topes
    }

    pub fn tope_index(&self, t: &SignVector) -> Option<usize> {
        self.tope_index.get(t).copied()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn flats(&self) -> &[Mask] {
        &self.flats
    }

    pub fn is_flat(&self, f: Mask) -> bool {
        self.flat_rank.contains_key(&f)
    }

    pub fn flat_rank(&self, f: Mask) -> Option<usize> {
        self.flat_rank.get(&f).copied()
    }

    pub fn flats_of_rank(&self, r: usize) -> impl Iterator<Item = Mask> + '_ {
        self.flats
            .iter()
            .copied()
            .filter(move |f| self.flat_rank[f] == r)
    }

    /// Smallest flat containing `s`.
    pub fn closure(&self, s: Mask) -> Mask {
        self.flats
            .iter()
            .filter(|&&f| s & !f == 0)
            .fold(self.ground_mask(), |acc, f| acc & f)
    }

    /// Rank of an arbitrary subset, via its closure.
    pub fn rank_of(&self, s: Mask) -> usize {
        self.flat_rank[&self.closure(s)]
    }

    /// `dim L = rank(E ∖ supp L)`.
    pub fn covector_dim(&self, l: &SignVector) -> usize {
        self.flat_rank[&l.zero_set()]
    }

    /// Covectors grouped by dimension.
    pub fn covectors_of_dim(&self, d: usize) -> impl Iterator<Item = &SignVector> + '_ {
        self.covectors
            .iter()
            .filter(move |l| self.covector_dim(l) == d)
    }

    /// Covectors vanishing on `a`, restricted to `b` (positions kept).
    pub fn minor_covectors(&self, contract: Mask, keep: Mask) -> BTreeSet<SignVector> {
        self.covectors
            .iter()
            .filter(|l| l.support() & contract == 0)
            .map(|l| l.restrict(keep))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn svs(list: &[&str]) -> Vec<SignVector> {
        list.iter().map(|s| SignVector::parse(s).unwrap()).collect()
    }

    #[test]
    fn missing_negation_is_reported() {
        let r = check_covector_axioms(&svs(&["00", "++"]));
        assert_eq!(r.violation.unwrap().0, Axiom::Negation);
    }

    #[test]
    fn missing_composition_is_reported() {
        let r = check_covector_axioms(&svs(&["00", "+0", "-0", "0+", "0-"]));
        let (axiom, w) = r.violation.unwrap();
        assert_eq!(axiom, Axiom::Composition);
        assert!(!w[0].compose(&w[1]).unwrap().is_zero());
    }

    #[test]
    fn missing_elimination_is_reported() {
        // closed under negation and composition, but ++ and +- cannot be eliminated at 2
        let r = check_covector_axioms(&svs(&["00", "++", "--", "+-", "-+"]));
        let (axiom, w) = r.violation.unwrap();
        assert_eq!(axiom, Axiom::Elimination);
        assert_eq!(w.len(), 2);
        let ok = svs(&["00", "++", "--", "+-", "-+", "+0", "-0", "0+", "0-"]);
        assert!(check_covector_axioms(&ok).pass());
    }

    #[test]
    fn loops_are_rejected() {
        let err = OrientedMatroid::from_covectors(2, svs(&["00", "+0", "-0"])).unwrap_err();
        assert!(matches!(err, Error::Axiom(_)));
    }

    #[test]
    fn rank_one_matroid() {
        let m = OrientedMatroid::from_covectors(1, svs(&["0", "+", "-"])).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.topes().len(), 2);
        assert_eq!(m.flats(), &[0, 1]);
    }
}

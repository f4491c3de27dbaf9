use serde::Serialize;

use crate::error::Result;
use crate::om::OrientedMatroid;

use super::fan::{fan_cones, ConeSummary};
use super::stalks::{functorial, stalk_topes_match, verify_naturality, verify_ses, Stalk};

/// Exactness at every cone and commutation along every face relation of the fan.
#[derive(Clone, Debug, Serialize)]
pub struct CosheafReport {
    pub degrees: Vec<usize>,
    pub cones: Vec<ConeSummary>,
    /// `(flag, p, pass)` for the stalk sequences.
    pub sequences: Vec<(String, usize, bool)>,
    /// `(fine flag, coarse flag, p, pass)` for the naturality squares.
    pub squares: Vec<(String, String, usize, bool)>,
    pub compositions: usize,
    pub failures: Vec<String>,
}

impl CosheafReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_cosheaf(m: &OrientedMatroid, degrees: &[usize]) -> Result<CosheafReport> {
    let cones = fan_cones(m);
    let stalks: Vec<Stalk> = cones
        .iter()
        .map(|c| Stalk::new(m, &c.flag))
        .collect::<Result<_>>()?;
    let mut rep = CosheafReport {
        degrees: degrees.to_vec(),
        cones: cones.iter().map(ConeSummary::from).collect(),
        sequences: Vec::new(),
        squares: Vec::new(),
        compositions: 0,
        failures: Vec::new(),
    };
    for s in &stalks {
        if !stalk_topes_match(m, s) {
            rep.failures.push(format!(
                "{}: stalk topes differ from the flag tope set",
                s.flag
            ));
        }
        for &p in degrees {
            let r = verify_ses(s, p)?;
            if !r.pass() {
                rep.failures
                    .push(format!("sequence at {} p={p}: {r:?}", s.flag));
            }
            rep.sequences.push((s.flag.to_string(), p, r.pass()));
        }
    }
    for fine in &stalks {
        for coarse in stalks.iter().filter(|c| c.flag.is_subflag_of(&fine.flag)) {
            for &p in degrees {
                let r = verify_naturality(coarse, fine, p)?;
                if !r.pass() {
                    rep.failures.push(format!(
                        "square {} → {} p={p}: {r:?}",
                        fine.flag, coarse.flag
                    ));
                }
                rep.squares
                    .push((fine.flag.to_string(), coarse.flag.to_string(), p, r.pass()));
            }
            for outer in stalks.iter().filter(|o| o.flag.is_subflag_of(&coarse.flag)) {
                rep.compositions += 1;
                if !functorial(outer, coarse, fine)? {
                    rep.failures.push(format!(
                        "composition {} → {} → {}",
                        fine.flag, coarse.flag, outer.flag
                    ));
                }
            }
        }
    }
    Ok(rep)
}

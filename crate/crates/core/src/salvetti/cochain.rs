use crate::error::{Error, Result};
use crate::linalg::BitVec;
use crate::om::Sign;

use super::fine::FineSalvetti;

/// Evaluates the cochain `c^S` on a mod-2 chain of fine `p`-simplices, where
/// `s = (i_1, …, i_p)` lists `S` in decreasing order of the chosen ground-set ordering.
///
/// A simplex `w(L_0,T_0) < … < w(L_p,T_p)` counts when `(L_s)_{i_t} = +` for
/// `s < t`, and `(L_s)_{i_t} = 0`, `(T_s)_{i_t} = +` for `1 ≤ t ≤ s`.
pub fn bz_cochain_eval(fine: &FineSalvetti, s: &[usize], p: usize, chain: &BitVec) -> Result<bool> {
    if s.len() != p {
        return Err(Error::WrongDegree {
            expected: p,
            found: s.len(),
        });
    }
    let mut acc = false;
    for j in chain.iter_ones() {
        if simplex_counts(fine, s, &fine.simplices(p)[j]) {
            acc = !acc;
        }
    }
    Ok(acc)
}

fn simplex_counts(fine: &FineSalvetti, s: &[usize], vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(level, &v)| {
        let cell = fine.element(v);
        s.iter().enumerate().all(|(t0, &e)| {
            let t = t0 + 1;
            if level < t {
                cell.covector().get(e) == Sign::Plus
            } else {
                cell.covector().get(e) == Sign::Zero && cell.tope().get(e) == Sign::Plus
            }
        })
    })
}

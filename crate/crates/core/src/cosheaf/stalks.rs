use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebras::{cordovil_dual, p_subsets};
use crate::error::{Error, Result};
use crate::filtrations::{tilde_a_unchecked, vg_lower_z, TildeA};
use crate::linalg::{IntMatrix, IntVector, LatticeZ};
use crate::om::{initial_matroid, tope_flag_set, Flag, OrientedMatroid};

/// The stalk data at the cone of a flag: `M_F` and the inclusion of its topes
/// into the topes of `M`.
#[derive(Clone, Debug)]
pub struct Stalk {
    pub flag: Flag,
    pub matroid: OrientedMatroid,
    /// Rows are topes of `M_F`, columns topes of `M`.
    pub embedding: IntMatrix,
}

impl Stalk {
    pub fn new(m: &OrientedMatroid, flag: &Flag) -> Result<Self> {
        let m_f = initial_matroid(m, flag)?;
        let embedding = inclusion_matrix(&m_f, m)?;
        Ok(Stalk {
            flag: flag.clone(),
            matroid: m_f,
            embedding,
        })
    }

    /// `P_p(M_F)` in the coordinates of `Z[T(M_F)]`.
    pub fn vg_lower(&self, p: usize) -> LatticeZ {
        vg_lower_z(&self.matroid, p)
    }

    pub fn cordovil(&self, p: usize) -> Result<LatticeZ> {
        cordovil_dual(&self.matroid, p)
    }
}

/// 0/1 matrix of the inclusion `T(small) ⊆ T(big)`.
fn inclusion_matrix(small: &OrientedMatroid, big: &OrientedMatroid) -> Result<IntMatrix> {
    let rows: Vec<IntVector> = small
        .topes()
        .iter()
        .map(|t| {
            let j = big
                .tope_index(t)
                .ok_or_else(|| Error::TopeNotInFlag(t.to_string()))?;
            let mut row = vec![BigInt::zero(); big.topes().len()];
            row[j] = BigInt::one();
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(IntMatrix::from_rows(big.topes().len(), &rows))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosheafKind {
    Sign,
    VgLower(usize),
    Cordovil(usize),
}

/// The cosheaf map from the stalk at `F` to the stalk at a subflag `F'`,
/// as a matrix acting on row vectors.
pub fn cosheaf_map(coarse: &Stalk, fine: &Stalk, kind: CosheafKind) -> Result<IntMatrix> {
    if !coarse.flag.is_subflag_of(&fine.flag) {
        return Err(Error::NotAFlag(format!(
            "{} is not a subflag of {}",
            coarse.flag, fine.flag
        )));
    }
    match kind {
        CosheafKind::Sign => inclusion_matrix(&fine.matroid, &coarse.matroid),
        CosheafKind::VgLower(p) => {
            let m = inclusion_matrix(&fine.matroid, &coarse.matroid)?;
            if !fine
                .vg_lower(p)
                .image(&m)
                .is_sublattice_of(&coarse.vg_lower(p))?
            {
                return Err(Error::NotInFiltration { space: "P", p });
            }
            Ok(m)
        }
        CosheafKind::Cordovil(p) => {
            let n = p_subsets(coarse.matroid.ground_size(), p).len();
            let id = IntMatrix::identity(n);
            if !fine.cordovil(p)?.is_sublattice_of(&coarse.cordovil(p)?)? {
                return Err(Error::NotInFiltration { space: "A", p });
            }
            Ok(id)
        }
    }
}

/// Exactness of `0 → P_{p+1}(M_F) → P_p(M_F) → A_p(M_F) → 0`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SesReport {
    pub flag: String,
    pub p: usize,
    pub rank_p: usize,
    pub rank_next: usize,
    pub rank_a: usize,
    pub injective: bool,
    pub surjective: bool,
    pub kernel_exact: bool,
}

impl SesReport {
    pub fn pass(&self) -> bool {
        self.injective && self.surjective && self.kernel_exact
    }
}

pub fn verify_ses(stalk: &Stalk, p: usize) -> Result<SesReport> {
    let t = TildeA::new(&stalk.matroid, p);
    let next = stalk.vg_lower(p + 1);
    let a = stalk.cordovil(p)?;
    let image = t.image();
    let surjective = match image.quotient_invariants(&a)? {
        Some(q) => q.is_trivial(),
        None => false,
    };
    Ok(SesReport {
        flag: stalk.flag.to_string(),
        p,
        rank_p: t.domain.rank(),
        rank_next: next.rank(),
        rank_a: a.rank(),
        injective: next.is_sublattice_of(&t.domain)?,
        surjective,
        kernel_exact: t.kernel().equals(&next)?,
    })
}

/// Commutation of the squares between the sequences at `F` and at a subflag `F'`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NaturalityReport {
    pub fine: String,
    pub coarse: String,
    pub p: usize,
    /// `ι(P_{p+1}(M_F)) ⊆ P_{p+1}(M_{F'})` and the same for `P_p`.
    pub vg_squares: bool,
    /// `ι^A ∘ ã_p(M_F) = ã_p(M_{F'}) ∘ ι` on a basis of `P_p(M_F)`.
    pub cordovil_square: bool,
}

impl NaturalityReport {
    pub fn pass(&self) -> bool {
        self.vg_squares && self.cordovil_square
    }
}

pub fn verify_naturality(coarse: &Stalk, fine: &Stalk, p: usize) -> Result<NaturalityReport> {
    let vg_squares = cosheaf_map(coarse, fine, CosheafKind::VgLower(p)).is_ok()
        && cosheaf_map(coarse, fine, CosheafKind::VgLower(p + 1)).is_ok();
    cosheaf_map(coarse, fine, CosheafKind::Cordovil(p))?;
    let iota = cosheaf_map(coarse, fine, CosheafKind::Sign)?;
    let cordovil_square = fine.vg_lower(p).basis().iter().all(|g| {
        let pushed = iota.vec_mul(g);
        tilde_a_unchecked(&fine.matroid, g, p) == tilde_a_unchecked(&coarse.matroid, &pushed, p)
    });
    Ok(NaturalityReport {
        fine: fine.flag.to_string(),
        coarse: coarse.flag.to_string(),
        p,
        vg_squares,
        cordovil_square,
    })
}

/// Composition `F'' ⊆ F' ⊆ F` of sign-cosheaf maps agrees with the direct map.
pub fn functorial(outer: &Stalk, middle: &Stalk, inner: &Stalk) -> Result<bool> {
    let a = cosheaf_map(middle, inner, CosheafKind::Sign)?;
    let b = cosheaf_map(outer, middle, CosheafKind::Sign)?;
    let direct = cosheaf_map(outer, inner, CosheafKind::Sign)?;
    Ok(a.mul(&b) == direct)
}

/// `T(M_F) = T_F` as sets of sign vectors.
pub fn stalk_topes_match(m: &OrientedMatroid, stalk: &Stalk) -> bool {
    let mut a = tope_flag_set(m, &stalk.flag);
    let mut b = stalk.matroid.topes().to_vec();
    a.sort();
    b.sort();
    a == b
}

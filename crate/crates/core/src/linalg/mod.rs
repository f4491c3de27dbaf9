pub mod gf2;
pub mod integer;
pub mod rational;

pub use gf2::{gf2_kernel, gf2_solve_project, BitVec, GF2Matrix, Gf2Solver, SubspaceGF2};
pub use integer::{
    hermite_normal_form, int_vec, integer_kernel, invariant_factors, smith_normal_form,
    solve_integer_system, IntMatrix, IntVector, LatticeZ, QuotientStructure, SmithForm,
    SparseIntMatrix,
};

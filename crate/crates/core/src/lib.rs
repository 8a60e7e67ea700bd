//! Exact-arithmetic construction of spin representations and of the
//! invariant-spinor spaces of candidate holonomy algebras.
//!
//! Everything is computed over the Gaussian rationals; there is no floating
//! point anywhere, so every reported dimension is a proof-grade integer and
//! every output is byte-for-byte reproducible.

pub mod catalog;
pub mod clifford;
pub mod error;
pub mod forms;
pub mod invariant;
pub mod matrix;
pub mod scalar;
pub mod selfcheck;
pub mod so;
pub mod table;

pub use catalog::{
    embed_complex_unitary, embed_symplectic, embed_unitary, realify_complex_so, resolve,
    resolve_with_forms, HolonomyFamily, HolonomySpec,
};
pub use clifford::{
    build_rep, clifford_multiply, hermitian_form, spinc_scalar_action, CliffordRep, Signature,
    SpinorVector,
};
pub use error::{Error, Result};
pub use forms::{exterior_action, stabilizer_of_form, ExteriorForm, FormTable};
pub use invariant::{
    decompose_element, decompose_so, invariant_space, spin_transfer, spinc_operator,
    BivectorDecomposition, InvariantSpace,
};
pub use matrix::{canonical_row_span, commutator, kronecker, stack_rows, ExactMatrix};
pub use scalar::{rat, GaussianRational, Rational};
pub use selfcheck::{run_selfcheck, run_selfcheck_with_forms, SelfCheckReport, SuiteResult};
pub use so::{metric_matrix, so_basis, so_element_e, SOElement, SpinCGenerator};
pub use table::{
    ensure_within_cap, invariants_for, invariants_for_with_forms, su_fixed_vectors_check, table1,
    table1_with_forms, InvariantSpaceResult, Table1Report, Table1Row, MAX_AMBIENT_DIMENSION,
};

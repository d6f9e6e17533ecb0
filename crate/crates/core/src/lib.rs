//! Exact-arithmetic calculus of hyperelliptic Johnson homomorphisms.
//!
//! The crate builds, over exact rationals, the symplectic space `H` of a
//! genus-`g` surface, the free Lie algebra on its letters with the ideal
//! generated by the symplectic form element `theta`, and the weight -2
//! derivation space of the quotient. On top it evaluates the twist values
//! of the hyperelliptic Johnson homomorphisms on symmetric separating
//! curve descriptors, the Collino monodromy, and the rank of the span of
//! Weierstrass and Collino classes at generator level.
//!
//! Everything is computed exactly: scalars are reduced big rationals, all
//! identities are checked on the nose, and the verification suite in
//! [`verify`] emits machine-readable pass/fail records for each one.

pub mod derivations;
pub mod error;
pub mod free_lie;
pub mod linalg;
pub mod monodromy;
pub mod rep;
pub mod span;
pub mod symplectic;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{rat, rat_int, Rational, SparseMatrix};
pub use symplectic::{
    f2_class_space, f2_pairing, pairing, perm_to_sp_f2, project_hat_theta, project_mod_theta,
    sym_product, theta, theta_subset, wedge_to_tensor, BiVector, F2ClassSpace, F2Matrix,
    F2SubsetClass, Genus, HVector, Letter, SymSqBiVector, Tensor, VClass,
};
pub use free_lie::{
    bracket, ideal_component, lie_to_tensor, lyndon_basis, p_dim, reduce_mod_ideal, theta_lie,
    witt_dim, IdealComponent, LieElement, LyndonWord, PElement,
};
pub use derivations::{
    annihilation_residue, der2_basis, derivation_kernel, j_theta, p_h, p_lambda2, phi, pi_hat,
    pi_lambda2, pi_phi_closed_form, v_prime_residual, Der2Element, DerivationCandidate,
    DerivationKernel,
};
pub use monodromy::{
    key_lemma_check, pi_e, pi_z, tau_hyp, tau_tilde, verify_theorem_a, zeta_derivation,
    KeyLemmaReport, MonodromyValue, TheoremAReport, TwistDescriptor, WeierstrassConfig,
};
pub use span::{
    augmented_family, canonical_family, class_matrix, collino_rank, remark_check,
    row_spaces_equal, span_report, weierstrass_rank, ClassMatrix, FamilyKind, SpanReport,
    TwistFamily,
};
pub use rep::{
    check_der_decomposition, check_p_decomposition, check_rep_ring_dims, weyl_dim, Partition,
};
pub use verify::{run_all, CheckRecord, CheckStatus, VerifyConfig};

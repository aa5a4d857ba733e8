//! The maximal atypical block Γ of Gl(2|2) and the fusion rule for its
//! simple objects.
//!
//! Simples are written `[a,b] = Ber^b S^{a-b}` with `a ≥ b`. The submodules
//! cover K₀ arithmetic ([`k0`]), mixed tensors and projective covers
//! ([`projective`]), the homomorphism `d` and superdimensions ([`ds`]),
//! composition factors and Loewy layers of `S^i ⊗ S^j` ([`fusion`]) and the
//! typical summands ([`typical`]).

pub mod ds;
pub mod fusion;
pub mod k0;
pub mod projective;
pub mod typical;

pub use ds::{d_fuse_expected, d_hom, d_simple, sdim};
pub use fusion::{
    closed_to_k0, decompose, k0_fuse_closed, k0_fuse_recursive, socle, socle_bound, w_consistent, w_invariant,
    TensorDecomposition,
};
pub use k0::{K0Gamma, LaurentB, LoewyPresentation, SimpleGamma};
pub use projective::{ext1, k0_al, k0_as, k0_p, loewy_as, loewy_p, p_identity_check, r_to_p};
pub use typical::{typical_summands, typical_summands_via_pi, typical_weight_of, TypicalWeight};

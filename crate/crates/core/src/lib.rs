//! Cuspidal braid factorizations of the full twist `Δ²` in the braid group.
//!
//! The crate is `no_std` and needs only `alloc`. It covers:
//!
//! * [`braid`], [`garside`]: braid words and the word problem via Garside
//!   normal form;
//! * [`perm`], [`free`]: symmetric-group and free-group plumbing, including
//!   the Artin action of braids on free words;
//! * [`factorization`]: factorizations `Δ² = ∏ Q_i^-1 X_1^{ρ_i} Q_i` with
//!   `ρ_i ∈ {1, 2, 3}`, their verification and curve invariants;
//! * [`hurwitz`]: Hurwitz moves, simultaneous conjugation, invariants of the
//!   factorization type and a budgeted equivalence search;
//! * [`vankampen`]: presentations of the complement group and their
//!   abelianization;
//! * [`chisini`]: monodromy representations into `S_N` with transposition
//!   images, the uniqueness threshold, and covering invariants.
#![no_std]

extern crate alloc;

pub mod braid;
pub mod chisini;
pub mod factorization;
pub mod free;
pub mod garside;
pub mod hurwitz;
pub mod perm;
pub mod vankampen;

pub use braid::{full_twist, half_twist, BraidError, BraidWord};
pub use factorization::{
    CurveInvariants, CuspidalFactor, CuspidalFactorization, FactorizationError,
};
pub use free::{artin_action, FreeWord};
pub use garside::NormalForm;
pub use perm::Permutation;

//! Exact computer algebra for affine commutative-by-finite Hopf algebras.
//!
//! The crate builds the classical example families as cleft crossed products
//! `A #_σ H̄`, computes cores and Hopf orbits of maximal ideals of the
//! commutative part, certifies Frobenius / T-simplicity / semisimplicity of
//! orbit quotients, and checks simple-module dimension bounds and the
//! structure chain `C ⊆ B ⊆ A ⊆ D ⊆ H` on desk-scale instances. All
//! arithmetic is exact: arbitrary-precision rationals or prime fields,
//! extended by roots of unity.

pub mod scalar;
pub mod linalg;
pub mod polyring;
pub mod groebner;
pub mod solve;
pub mod fdalg;
pub mod fdhopf;
pub mod action;
pub mod cbf;
pub mod par;
pub mod verify;

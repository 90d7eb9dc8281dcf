//! Invariants and classification of oriented 2-plat 2-knots F(p, q) and
//! their two-bridge 1-knot companions K(p, q).
//!
//! The pipeline: a coprime pair (p, q) with p > 0 odd determines the
//! sign sequence εᵢ = (−1)^⌊iq/p⌋, which determines both a ribbon type
//! R(ε₁, …, ε_{p−1}) and the Alexander polynomial
//! Δ(t) ≐ 1 + Σ (−1)ⁱ t^{d(i)} with d(i) = ε₁ + ⋯ + εᵢ. From Δ come the
//! determinant |Δ(−1)| = p, the coefficient norm a = Σ|aₖ| = p, and
//! τ = Σ k|aₖ| mod a ≡ (2q)⁻¹ (mod p); τ ≠ 0 certifies the knot is
//! neither invertible nor spun. Two forms are equivalent iff p = p′ and
//! q ≡ q′ (mod p).
//!
//! Modules:
//! - [`laurent`]: sparse integer Laurent polynomials, the ≐ relation,
//!   and table normalization (Δ(1) = 1, Δ′(1) = 0).
//! - [`contfrac`]: reciprocal-first continued fractions and canonical
//!   expansions.
//! - [`platknot`]: normal forms, ε-sequences, ribbon types, and both
//!   Alexander computations.
//! - [`invariants`]: determinant, a, τ (coefficient and closed form),
//!   and the obstruction predicates.
//! - [`twobridge`]: two-bridge knots K(p, q), their groups, Alexander
//!   polynomials, and Schubert's classification.
//! - [`classify`]: the equivalence decision procedure for 2-plat
//!   2-knots.

pub mod classify;
pub mod contfrac;
mod error;
pub mod invariants;
pub mod laurent;
pub mod platknot;
pub mod twobridge;

pub use classify::{canonical_class_rep, plat_equivalent};
pub use contfrac::{canonical_expand, ContFrac, Rational};
pub use error::Error;
pub use invariants::{
    a_and_tau, determinant, invertibility_obstructed, mod_inverse, spun_separation,
    tau_closed_form, TauResult,
};
pub use laurent::LaurentPoly;
pub use platknot::{
    alexander_closed, alexander_from_ribbon_type, canonical_even_rep, epsilon_seq, mirror,
    ribbon_type, EpsilonSeq, PlatNormalForm, RibbonType,
};
pub use twobridge::{
    bridge_alexander, knot_group, schubert_equivalent, BridgeNormalForm, Gen, GroupPresentation,
};

//! Equivalence of oriented 2-plat 2-knots.
//!
//! F(p, q) ≅ F(p′, q′) iff p = p′ and q ≡ q′ (mod p). The arithmetic
//! rule is the production path; the Alexander-polynomial comparison
//! stays in the test suite as an independent completeness check.

use crate::error::Error;
use crate::platknot::{canonical_even_rep, validate, PlatNormalForm};

/// Whether F(p, q) and F(p′, q′) are equivalent as oriented 2-knots.
pub fn plat_equivalent(p: i64, q: i64, p2: i64, q2: i64) -> Result<bool, Error> {
    validate(p, q)?;
    validate(p2, q2)?;
    Ok(p == p2 && (q as i128 - q2 as i128).rem_euclid(p as i128) == 0)
}

/// The unique representative (p, qₑ) of the equivalence class of
/// F(p, q), with qₑ the canonical even residue in [0, 2p). Two forms are
/// equivalent iff their representatives are identical.
pub fn canonical_class_rep(p: i64, q: i64) -> Result<PlatNormalForm, Error> {
    validate(p, q)?;
    PlatNormalForm::new(p, canonical_even_rep(p, q))
}

//! Numerical invariants read off the Alexander polynomial: the
//! determinant |Δ(−1)|, the coefficient norm a = Σ|aₖ|, and
//! τ = Σ k·|aₖ| mod a.
//!
//! For F(p, q) these satisfy det = a = p and τ ≡ (2q)⁻¹ (mod p). Both a
//! and τ are ≐-invariants: scaling by −1 changes neither sum, and
//! shifting by tⁿ adds n·a ≡ 0 to the weighted sum. A reciprocal
//! polynomial forces τ = 0, so τ ≠ 0 certifies both that the knot is
//! not invertible and that it is not a spun 2-knot.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::platknot;

/// a and τ of a polynomial, with τ reduced into [0, a).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauResult {
    pub a: BigUint,
    pub tau: BigUint,
}

/// |f(−1)|. Unchanged under ≐ since |±(−1)ⁿ| = 1; the polynomial is
/// shifted to non-negative exponents first so plain evaluation applies.
pub fn determinant(f: &LaurentPoly) -> BigUint {
    let lift = -f.min_exp().unwrap_or(0).min(0);
    let value = f
        .shift_scale(lift, 1)
        .eval_int(-1)
        .expect("no negative exponents after lifting");
    value.magnitude().clone()
}

/// a = Σ|aₖ| and τ = Σ k·|aₖ| mod a. Rejects the zero polynomial
/// (a would be 0, and no knot has Δ = 0).
pub fn a_and_tau(f: &LaurentPoly) -> Result<TauResult, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a: BigInt = f.terms().map(|(_, c)| c.abs()).sum();
    let weighted: BigInt = f.terms().map(|(k, c)| c.abs() * k).sum();
    let tau = weighted.mod_floor(&a);
    Ok(TauResult {
        a: a.to_biguint().expect("a > 0"),
        tau: tau.to_biguint().expect("mod_floor lands in [0, a)"),
    })
}

/// τ(F(p, q)) = (2q)⁻¹ mod p, computed without touching coefficients.
/// Requires even q; p = 1 returns 0 (the trivial knot, where ℤ/1ℤ
/// collapses everything).
pub fn tau_closed_form(p: i64, q: i64) -> Result<i64, Error> {
    platknot::validate(p, q)?;
    if q % 2 != 0 {
        return Err(Error::OddQ { q });
    }
    if p == 1 {
        return Ok(0);
    }
    let two_q = ((2 * q as i128).rem_euclid(p as i128)) as i64;
    mod_inverse(two_q, p)
}

/// The inverse of x modulo m (m ≥ 1), in [0, m), via the extended
/// Euclidean algorithm. m = 1 returns 0.
pub fn mod_inverse(x: i64, m: i64) -> Result<i64, Error> {
    assert!(m >= 1, "modulus must be positive, got {m}");
    if m == 1 {
        return Ok(0);
    }
    let (mut r0, mut r1) = (x.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible { x, m });
    }
    Ok(s0.rem_euclid(m))
}

/// True iff τ ≠ 0. An invertible knot has τ = 0, so true certifies the
/// knot carrying this polynomial is not invertible.
pub fn invertibility_obstructed(f: &LaurentPoly) -> Result<bool, Error> {
    Ok(!a_and_tau(f)?.tau.is_zero())
}

/// True iff τ ≠ 0. A spun 2-knot has reciprocal Δ, hence τ = 0, so true
/// certifies this polynomial does not belong to a spun 2-knot.
pub fn spun_separation(f: &LaurentPoly) -> Result<bool, Error> {
    Ok(!a_and_tau(f)?.tau.is_zero())
}

//! Normal forms F(p, q) of oriented 2-plat 2-knots.
//!
//! A 2-plat 2-knot is presented by a coprime pair (p, q) with p > 0 odd;
//! p = 1 gives the trivial knot. The sign data εᵢ = (−1)^⌊iq/p⌋ (for even
//! q) drives everything downstream: the ribbon type R(ε₁, …, ε_{p−1})
//! and the Alexander polynomial
//!
//! Δ(t) ≐ 1 + Σ_{i=1}^{p−1} (−1)ⁱ t^{d(i)},   d(i) = ε₁ + ⋯ + εᵢ.
//!
//! F(p, q) only depends on q mod p, and every class contains a unique
//! even representative in [0, 2p); reductions here always use it.

use std::fmt;

use num_integer::Integer;

use crate::error::Error;
use crate::laurent::LaurentPoly;

/// A validated 2-plat normal form: p > 0 odd, gcd(p, q) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlatNormalForm {
    p: i64,
    q: i64,
}

impl PlatNormalForm {
    pub fn new(p: i64, q: i64) -> Result<Self, Error> {
        validate(p, q)?;
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// F(1, q) is the trivial 2-knot.
    pub fn is_trivial(&self) -> bool {
        self.p == 1
    }
}

impl fmt::Display for PlatNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({}, {})", self.p, self.q)
    }
}

/// Checks p > 0, p odd, gcd(p, q) = 1.
pub(crate) fn validate(p: i64, q: i64) -> Result<(), Error> {
    if p <= 0 {
        return Err(Error::NonPositiveP { p });
    }
    if p % 2 == 0 {
        return Err(Error::EvenP { p });
    }
    let g = p.gcd(&q);
    if g != 1 {
        return Err(Error::NotCoprime { p, q, gcd: g });
    }
    Ok(())
}

/// The unique even qₑ with 0 ≤ qₑ < 2p and qₑ ≡ q (mod p).
///
/// Exists and is unique because p is odd: of the two residues r and
/// r + p in [0, 2p), exactly one is even.
pub fn canonical_even_rep(p: i64, q: i64) -> i64 {
    assert!(p > 0 && p % 2 == 1, "p must be positive odd, got {p}");
    let r = q.rem_euclid(p);
    if r % 2 == 0 {
        r
    } else {
        r + p
    }
}

/// The sign sequence (ε₁, …, ε_{p−1}) with εᵢ = (−1)^⌊iq/p⌋.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonSeq {
    signs: Vec<i8>,
}

impl EpsilonSeq {
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// εᵢ = (−1)^⌊iq/p⌋ with mathematical floor, so negative q is handled
/// correctly (⌊−1/3⌋ = −1, not 0).
pub(crate) fn epsilon(p: i64, q: i64, i: i64) -> i64 {
    let n = (i as i128 * q as i128).div_euclid(p as i128);
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Computes the ε-sequence of F(p, q). Requires even q (the sign formula
/// is only a knot invariant for even q); negative even q is accepted.
pub fn epsilon_seq(p: i64, q: i64) -> Result<EpsilonSeq, Error> {
    validate(p, q)?;
    if q % 2 != 0 {
        return Err(Error::OddQ { q });
    }
    let signs = (1..p).map(|i| epsilon(p, q, i) as i8).collect();
    Ok(EpsilonSeq { signs })
}

/// A ribbon type R(p₁, q₁, …, p_n, q_n): the signed intersection data of
/// a ribbon 2-knot of 1-fusion. Entries come in pairs; the trivial knot
/// has no pairs and prints as R(0, 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonType {
    entries: Vec<i64>,
}

impl RibbonType {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(
            entries.len().is_multiple_of(2),
            "ribbon type entries come in (pᵢ, qᵢ) pairs, got length {}",
            entries.len()
        );
        Self { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

impl fmt::Display for RibbonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "R(0, 0)");
        }
        let cells: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "R({})", cells.join(", "))
    }
}

/// The ribbon type R(ε₁, …, ε_{p−1}) of F(p, q), computed from the
/// canonical even representative of q. Any coprime q is accepted.
pub fn ribbon_type(p: i64, q: i64) -> Result<RibbonType, Error> {
    validate(p, q)?;
    let qe = canonical_even_rep(p, q);
    let eps = epsilon_seq(p, qe)?;
    Ok(RibbonType::new(
        eps.signs().iter().map(|&s| s as i64).collect(),
    ))
}

/// 1 + Σ_{i=1}^{p−1} (−1)ⁱ t^{d(i)} for the given (p, q), no reduction.
pub(crate) fn alexander_sum(p: i64, q: i64) -> LaurentPoly {
    let mut d = 0i64;
    let walk = (1..p).map(|i| {
        d += epsilon(p, q, i);
        (d, if i % 2 == 0 { 1i64 } else { -1i64 })
    });
    LaurentPoly::from_terms(std::iter::once((0i64, 1i64)).chain(walk))
}

/// The Alexander polynomial of F(p, q) in its raw (un-normalized) form
/// 1 + Σ (−1)ⁱ t^{d(i)}, with q reduced to the canonical even
/// representative first. Callers wanting the table form normalize it.
pub fn alexander_closed(p: i64, q: i64) -> Result<LaurentPoly, Error> {
    validate(p, q)?;
    Ok(alexander_sum(p, canonical_even_rep(p, q)))
}

/// The Alexander polynomial determined by a ribbon type:
///
/// Δ(t) ≐ 1 + Σ_{i=1}^n (−t^{a(i)} + t^{b(i)}),
/// a(i) = pᵢ + Σ_{k<i} (p_k + q_k),   b(i) = Σ_{k≤i} (p_k + q_k).
pub fn alexander_from_ribbon_type(rt: &RibbonType) -> LaurentPoly {
    let mut run = 0i64;
    let mut terms = vec![(0i64, 1i64)];
    for pair in rt.entries().chunks(2) {
        let a = run + pair[0];
        let b = a + pair[1];
        terms.push((a, -1));
        terms.push((b, 1));
        run = b;
    }
    LaurentPoly::from_terms(terms)
}

/// The mirror image: F(p, −q).
pub fn mirror(k: &PlatNormalForm) -> PlatNormalForm {
    PlatNormalForm { p: k.p, q: -k.q }
}

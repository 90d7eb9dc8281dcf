//! Two-bridge 1-knots K(p, q): the classical companions of the 2-plat
//! 2-knots, used here both on their own and as oracles (their Alexander
//! polynomials are reciprocal, so their τ vanishes).
//!
//! K(p, q) takes coprime p, q with p > 0 odd and 0 < |q| < p. Schubert's
//! theorem classifies them: K(p, q) ≅ K(p′, q′) iff p = p′ and
//! q′ ≡ q^{±1} (mod p). The group and polynomial formulas below need q
//! odd on top of that, and reject even q.

use std::fmt;

use crate::error::Error;
use crate::invariants::mod_inverse;
use crate::laurent::LaurentPoly;
use crate::platknot::{alexander_sum, epsilon};

/// A validated two-bridge normal form: p > 0 odd, 0 < |q| < p, coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BridgeNormalForm {
    p: i64,
    q: i64,
}

impl BridgeNormalForm {
    pub fn new(p: i64, q: i64) -> Result<Self, Error> {
        crate::platknot::validate(p, q)?;
        if q == 0 || q.abs() >= p {
            return Err(Error::QOutOfRange { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl fmt::Display for BridgeNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({}, {})", self.p, self.q)
    }
}

/// One of the two meridian generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    X,
    Y,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::X => write!(f, "x"),
            Gen::Y => write!(f, "y"),
        }
    }
}

/// The knot group ⟨x, y | y = w x w⁻¹⟩ of K(p, q), where w is the
/// alternating word x^{ε₁} y^{ε₂} x^{ε₃} ⋯ of length p − 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    word: Vec<(Gen, i8)>,
}

impl GroupPresentation {
    /// The letters of w as (generator, ±1) pairs.
    pub fn word(&self) -> &[(Gen, i8)] {
        &self.word
    }

    /// The exponent sequence (ε₁, …, ε_{p−1}).
    pub fn epsilons(&self) -> Vec<i64> {
        self.word.iter().map(|&(_, e)| e as i64).collect()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self
            .word
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    g.to_string()
                } else {
                    format!("{g}^{{-1}}")
                }
            })
            .collect();
        write!(f, "⟨x, y | y = w x w^{{-1}}⟩,  w = {}", letters.join(" "))
    }
}

/// The Alexander polynomial of K(p, q), in raw form
/// 1 + Σ_{k=1}^{p−1} (−1)ᵏ t^{d(k)} with εᵢ = (−1)^⌊iq/p⌋.
///
/// Both p and q must be odd here; p = 1 is the trivial knot with Δ = 1.
pub fn bridge_alexander(p: i64, q: i64) -> Result<LaurentPoly, Error> {
    if p == 1 {
        crate::platknot::validate(p, q)?;
        return Ok(LaurentPoly::one());
    }
    let form = BridgeNormalForm::new(p, q)?;
    if q % 2 == 0 {
        return Err(Error::EvenQ { q });
    }
    Ok(alexander_sum(form.p, form.q))
}

/// The knot group of K(p, q). Requires odd q.
pub fn knot_group(p: i64, q: i64) -> Result<GroupPresentation, Error> {
    let form = BridgeNormalForm::new(p, q)?;
    if q % 2 == 0 {
        return Err(Error::EvenQ { q });
    }
    let word = (1..form.p)
        .map(|i| {
            let g = if i % 2 == 1 { Gen::X } else { Gen::Y };
            (g, epsilon(form.p, form.q, i) as i8)
        })
        .collect();
    Ok(GroupPresentation { word })
}

/// Schubert's criterion: K(p, q) ≅ K(p′, q′) iff p = p′ and
/// q′ ≡ q^{±1} (mod p).
pub fn schubert_equivalent(p: i64, q: i64, p2: i64, q2: i64) -> Result<bool, Error> {
    let a = BridgeNormalForm::new(p, q)?;
    let b = BridgeNormalForm::new(p2, q2)?;
    if a.p != b.p {
        return Ok(false);
    }
    let r = a.q.rem_euclid(a.p);
    let r2 = b.q.rem_euclid(a.p);
    let inv = mod_inverse(a.q, a.p).expect("q is coprime to p");
    Ok(r2 == r || r2 == inv)
}

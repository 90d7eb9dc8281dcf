//! Sparse Laurent polynomials over ℤ.
//!
//! Alexander polynomials are only defined up to a unit ±tⁿ; we write
//! f ≐ g when f = ±tⁿ·g. This module provides exact integer Laurent
//! arithmetic, the ≐ test, and the normalized representative used in
//! knot tables: the unique g ≐ f with g(1) = 1 and g′(1) = 0.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// An integer Laurent polynomial Σ aₖ tᵏ, k ∈ ℤ, stored sparsely.
///
/// No zero coefficient is ever stored and the zero polynomial is the
/// empty map, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// tᵏ.
    pub fn monomial(k: i64) -> Self {
        Self::from_terms([(k, 1)])
    }

    /// Builds a polynomial from (exponent, coefficient) pairs.
    /// Duplicate exponents are summed and zero coefficients dropped.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (k, c) in pairs {
            let c = c.into();
            if c.is_zero() {
                continue;
            }
            let total = {
                let entry = terms.entry(k).or_default();
                *entry += c;
                entry.is_zero()
            };
            if total {
                terms.remove(&k);
            }
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// The coefficient of tᵏ (zero if absent).
    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Lowest exponent with non-zero coefficient; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent with non-zero coefficient; `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Evaluates at an integer point.
    ///
    /// Rejects x = 0, and rejects |x| ≠ 1 when a negative exponent is
    /// present (the result would not be an integer).
    pub fn eval_int(&self, x: i64) -> Result<BigInt, Error> {
        if x == 0 {
            return Err(Error::EvalAtZero);
        }
        if x == 1 || x == -1 {
            let mut acc = BigInt::zero();
            for (&k, c) in &self.terms {
                // x^k for |x| = 1 only depends on the parity of k.
                if x == 1 || k.rem_euclid(2) == 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
            return Ok(acc);
        }
        if self.min_exp().is_some_and(|k| k < 0) {
            return Err(Error::NegativeExponent { x });
        }
        let base = BigInt::from(x);
        let mut acc = BigInt::zero();
        for (&k, c) in &self.terms {
            acc += c * num_traits::pow(base.clone(), k as usize);
        }
        Ok(acc)
    }

    /// s·tⁿ·f for s = ±1: the generators of the ≐ relation.
    pub fn shift_scale(&self, n: i64, s: i64) -> Self {
        assert!(s == 1 || s == -1, "sign must be +1 or -1, got {s}");
        let terms = self
            .terms
            .iter()
            .map(|(&k, c)| (k + n, if s == 1 { c.clone() } else { -c }))
            .collect();
        Self { terms }
    }

    /// Whether g = ±tⁿ·f for some n. Two zero polynomials are ≐.
    pub fn doteq(&self, other: &Self) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return true,
            (true, false) | (false, true) => return false,
            (false, false) => {}
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        // Aligning the lowest exponents fixes n; only the sign is left.
        let n = self.min_exp().unwrap() - other.min_exp().unwrap();
        let aligned = other.shift_scale(n, 1);
        aligned == *self || aligned.shift_scale(0, -1) == *self
    }

    /// f(t⁻¹): every exponent negated.
    pub fn invert_var(&self) -> Self {
        let terms = self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect();
        Self { terms }
    }

    /// Whether f(t) ≐ f(t⁻¹).
    pub fn is_reciprocal(&self) -> bool {
        self.doteq(&self.invert_var())
    }

    /// Whether both extreme coefficients are ±1. Rejects the zero polynomial.
    pub fn is_monic(&self) -> Result<bool, Error> {
        let (Some(lo), Some(hi)) = (self.terms.first_key_value(), self.terms.last_key_value())
        else {
            return Err(Error::ZeroPolynomial);
        };
        Ok(lo.1.magnitude().is_one() && hi.1.magnitude().is_one())
    }

    /// Σ aₖ, i.e. f(1).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Σ k·aₖ, i.e. f′(1).
    pub fn derivative_at_one(&self) -> BigInt {
        self.terms.iter().map(|(&k, c)| c * k).sum()
    }

    /// The unique g ≐ f with g(1) = 1 and g′(1) = 0.
    ///
    /// Negating fixes the sign of f(1); shifting by n adds n·g(1) = n to
    /// g′(1), so n = −g′(1) finishes the job. Requires f(1) = ±1, which
    /// holds for every knot Alexander polynomial.
    pub fn normalize(&self) -> Result<Self, Error> {
        let v = self.eval_at_one();
        let g = if v == BigInt::one() {
            self.clone()
        } else if v == -BigInt::one() {
            self.shift_scale(0, -1)
        } else {
            return Err(Error::NotUnitAtOne { value: v });
        };
        let n = (-g.derivative_at_one())
            .to_i64()
            .expect("normalization shift fits in i64");
        Ok(g.shift_scale(n, 1))
    }
}

/// Tuple notation used in knot tables: coefficients from min(0, lowest
/// exponent) through max(0, highest), with the constant term bracketed.
/// Examples: 2t − t² is "([0], 2, -1)"; −t⁻² + 4t⁻¹ − 4 + 2t is
/// "(-1, 4, [-4], 2)"; the zero polynomial is "([0])".
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.min_exp().unwrap_or(0).min(0);
        let hi = self.max_exp().unwrap_or(0).max(0);
        let cells: Vec<String> = (lo..=hi)
            .map(|k| {
                let c = self.coeff(k);
                if k == 0 {
                    format!("[{c}]")
                } else {
                    c.to_string()
                }
            })
            .collect();
        write!(f, "({})", cells.join(", "))
    }
}

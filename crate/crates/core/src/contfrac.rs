//! Continued fractions in the reciprocal-first convention:
//!
//! [c₁] = 1/c₁,   [c₁, c₂, …, c_m] = 1/(c₁ + [c₂, …, c_m]),
//!
//! over rationals extended by the formal value ∞ = 1/0 with the rules
//! 1/0 = ∞, c + ∞ = ∞, 1/∞ = 0. Every integer sequence evaluates.
//!
//! A continued fraction is canonical when its length m is odd and
//! either it is [0, 1, -1] (the expansion of 0/1), or all entries are
//! non-zero and share a sign, or c₁ = 0 and the remaining entries are
//! non-zero and share a sign. Every extended rational has exactly one
//! canonical expansion; `canonical_expand` computes it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A reduced rational q/p with p ≥ 0, where 1/0 stands for the formal ∞.
///
/// The sign lives in the numerator; gcd(q, p) = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Reduces num/den. A zero denominator yields ∞ (den = 0 forces num = 1);
    /// 0/0 is not a value and panics.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let (mut num, mut den) = (num.into(), den.into());
        assert!(
            !num.is_zero() || !den.is_zero(),
            "0/0 is neither a rational nor ∞"
        );
        if den.is_zero() {
            return Self {
                num: BigInt::one(),
                den,
            };
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        Self {
            num: num / &g,
            den: den / g,
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    /// The formal value ∞ = 1/0.
    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// 1/r, with 1/0 = ∞ and 1/∞ = 0.
    pub fn recip(&self) -> Self {
        if self.num.is_zero() {
            return Self::infinity();
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// c + r for an integer c, with c + ∞ = ∞.
    pub fn add_int(&self, c: &BigInt) -> Self {
        if self.is_infinite() {
            return Self::infinity();
        }
        Self {
            num: &self.num + c * &self.den,
            den: self.den.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses "q/p" or a bare integer "q".
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseRational {
            input: s.to_string(),
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        if num.is_zero() && den.is_zero() {
            return Err(bad());
        }
        Ok(Self::new(num, den))
    }
}

/// A continued fraction [c₁, …, c_m], m ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContFrac {
    entries: Vec<BigInt>,
}

impl ContFrac {
    pub fn new<T: Into<BigInt>>(entries: Vec<T>) -> Self {
        let entries: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        assert!(
            !entries.is_empty(),
            "a continued fraction needs at least one entry"
        );
        Self { entries }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // m ≥ 1 by construction
    }

    /// Exact value under the reciprocal-first recursion; total thanks to
    /// the formal ∞.
    pub fn eval(&self) -> Rational {
        let mut acc = Rational::from_integer(0);
        for c in self.entries.iter().rev() {
            acc = acc.add_int(c).recip();
        }
        acc
    }

    /// [c_m, …, c₁]. Reversal preserves the denominator of the value.
    pub fn reverse(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self { entries }
    }

    /// [0, k, c₁, …, c_m]; evaluates to k + [c₁, …, c_m].
    pub fn prepend_zero_k(&self, k: impl Into<BigInt>) -> Self {
        let mut entries = vec![BigInt::zero(), k.into()];
        entries.extend(self.entries.iter().cloned());
        Self { entries }
    }

    /// Entrywise negation; negates the value.
    pub fn negated(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|c| -c).collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        if self.entries.len().is_multiple_of(2) {
            return false;
        }
        let zero_one_minus = self.entries.len() == 3
            && self.entries[0].is_zero()
            && self.entries[1].is_one()
            && self.entries[2] == BigInt::from(-1);
        if zero_one_minus {
            return true;
        }
        let tail = if self.entries[0].is_zero() {
            &self.entries[1..]
        } else {
            &self.entries[..]
        };
        tail.iter().all(|c| c.is_positive()) || tail.iter().all(|c| c.is_negative())
    }
}

impl fmt::Display for ContFrac {
    /// Comma-separated entries, e.g. "1,1,3".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", cells.join(","))
    }
}

impl FromStr for ContFrac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseContFrac {
            input: s.to_string(),
        };
        let entries = s
            .split(',')
            .map(|c| BigInt::from_str(c.trim()).map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if entries.is_empty() {
            return Err(bad());
        }
        Ok(Self { entries })
    }
}

/// The unique canonical expansion of an extended rational.
///
/// ∞ → [0] and 0 → [0, 1, -1] are the two special values. For 0 < q < p
/// the Euclidean quotients of p/q give an all-positive expansion whose
/// length is fixed up to odd via [.., c] = [.., c − 1, 1]; values above 1
/// prepend a 0 (one more reciprocal) to the even-length expansion of the
/// reciprocal value; negative values negate every entry.
pub fn canonical_expand(r: &Rational) -> ContFrac {
    if r.is_infinite() {
        return ContFrac::new(vec![0]);
    }
    if r.num().is_zero() {
        return ContFrac::new(vec![0, 1, -1]);
    }
    if r.num().is_negative() {
        return canonical_expand(&r.neg()).negated();
    }
    let (q, p) = (r.num(), r.den());
    match q.cmp(p) {
        std::cmp::Ordering::Equal => ContFrac::new(vec![1]), // q = p = 1
        std::cmp::Ordering::Less => ContFrac {
            entries: euclid_entries(p, q, true),
        },
        std::cmp::Ordering::Greater => {
            let mut entries = vec![BigInt::zero()];
            entries.extend(euclid_entries(q, p, false));
            ContFrac { entries }
        }
    }
}

/// Euclidean quotients of a/b for coprime a > b ≥ 1, adjusted to the
/// requested length parity. The plain quotient list [c₁, …] evaluates to
/// b/a under the reciprocal-first convention, and its last quotient is
/// always ≥ 2, so the parity fix never produces a zero entry.
fn euclid_entries(a: &BigInt, b: &BigInt, want_odd: bool) -> Vec<BigInt> {
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut out = Vec::new();
    while !b.is_zero() {
        let (q, r) = a.div_rem(&b);
        out.push(q);
        a = b;
        b = r;
    }
    if (out.len() % 2 == 1) != want_odd {
        let last = out.last_mut().expect("at least one quotient");
        *last -= 1;
        out.push(BigInt::one());
    }
    out
}

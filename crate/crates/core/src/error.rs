use num_bigint::BigInt;
use thiserror::Error;

/// Everything that can be rejected by a precondition in this crate.
///
/// Messages name the violated precondition so the CLI can surface them
/// verbatim as diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be positive, got p = {p}")]
    NonPositiveP { p: i64 },

    #[error("p must be odd, got p = {p} (an even p closes up to a sphere and a Klein bottle, not a knot)")]
    EvenP { p: i64 },

    #[error("p and q must be coprime, got gcd({p}, {q}) = {gcd}")]
    NotCoprime { p: i64, q: i64, gcd: i64 },

    #[error("q must be even here, got q = {q}")]
    OddQ { q: i64 },

    #[error("q must be odd here, got q = {q}")]
    EvenQ { q: i64 },

    #[error("q must satisfy 0 < |q| < p, got q = {q} with p = {p}")]
    QOutOfRange { p: i64, q: i64 },

    #[error("the zero polynomial is not admissible here")]
    ZeroPolynomial,

    #[error("cannot evaluate a Laurent polynomial at x = 0")]
    EvalAtZero,

    #[error("cannot evaluate at x = {x}: terms with negative exponents need |x| = 1")]
    NegativeExponent { x: i64 },

    #[error("f(1) = {value}, but normalization needs f(1) = ±1")]
    NotUnitAtOne { value: BigInt },

    #[error("{x} has no inverse modulo {m}")]
    NotInvertible { x: i64, m: i64 },

    #[error("cannot parse {input:?} as a rational q/p")]
    ParseRational { input: String },

    #[error("cannot parse {input:?} as a continued fraction (comma-separated integers)")]
    ParseContFrac { input: String },
}

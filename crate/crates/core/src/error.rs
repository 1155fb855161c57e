use alloc::string::String;

use crate::reps::{HalfInt, Signature};

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("integral diverges: sinh^{alpha} cosh^-{beta} needs alpha > -1 and beta - alpha > 0")]
    Divergent { alpha: f64, beta: f64 },

    #[error("quadrature did not reach tolerance {tol:e} after {evaluations} evaluations (error estimate {estimate:e})")]
    NonConvergence {
        tol: f64,
        estimate: f64,
        evaluations: usize,
    },

    /// Violates the parity clause of property RB.
    #[error("parity violation (RB parity clause): {value} is not in Z + {shift} on {sig}")]
    Parity {
        sig: Signature,
        value: HalfInt,
        shift: HalfInt,
    },

    /// Violates the good-range clause of property RB.
    #[error("good-range violation (RB range clause): {value} < {bound} on {sig}")]
    GoodRange {
        sig: Signature,
        value: HalfInt,
        bound: HalfInt,
    },

    #[error("signature {p},{q} violates p >= 3 and q >= 3 (use a relaxed signature)")]
    SignatureAssumption { p: u32, q: u32 },

    #[error("invalid signature {p},{q}")]
    InvalidSignature { p: u32, q: u32 },

    #[error("signature or level mismatch: {0}")]
    Mismatch(&'static str),

    #[error("interlacing tie: a = b = {0}")]
    Tie(HalfInt),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(&'static str),

    #[error("weight length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight is not weakly decreasing")]
    NotDominant,

    #[error("weight is not integral")]
    NotIntegral,

    #[error("out of range: {0}")]
    Range(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;

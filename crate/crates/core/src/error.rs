use thiserror::Error;

use crate::detectors::Property;

#[derive(Debug, Error)]
pub enum Error {
    #[error("segment of length {length} is too long for the torus lift (must be < 1/4)")]
    TorusRadiusTooLarge { length: f64 },

    #[error("point ({x}, {y}) is not a canonical representative in [0,1)^2")]
    NonCanonicalPoint { x: f64, y: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("clique size k = {k} is outside the supported range 2..=7")]
    KTooLarge { k: usize },

    #[error("invalid k = {k}: {reason}")]
    InvalidK { k: usize, reason: String },

    #[error("radius {r} exceeds 1/(2*sqrt(k)) = {max} for the grid witness")]
    RadiusTooLargeForGrid { r: f64, max: f64 },

    #[error("{0} is not a monotone property")]
    NonMonotoneProperty(Property),

    #[error(
        "initial bracket [{r_lo}, {r_hi}] does not straddle p = {target} \
         (p_hat = {p_lo} at r_lo, {p_hi} at r_hi)"
    )]
    BracketNotFound {
        r_lo: f64,
        r_hi: f64,
        p_lo: f64,
        p_hi: f64,
        target: f64,
    },

    #[error("exponent fit needs at least 3 points with distinct n, got {got}")]
    InsufficientPoints { got: usize },

    #[error("unknown rate {rate:.3} at r = {r} exceeds the 10% limit")]
    UnknownRateExceeded { r: f64, rate: f64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

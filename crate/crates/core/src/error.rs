use thiserror::Error;

use crate::families::TnClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial must be monic (leading coefficient {0})")]
    NotMonic(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix has a negative entry at ({row}, {col}); use the characteristic polynomial route")]
    NegativeEntry { row: usize, col: usize },

    #[error("matrix is reducible")]
    Reducible,

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("no real root above {0}")]
    NoRootAbove(String),

    #[error("root finder did not converge after {iterations} iterations at {precision} bits")]
    NoConvergence { iterations: usize, precision: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{family}({m},{n}) is {tn}, not pseudo-Anosov")]
    NotPseudoAnosov {
        family: &'static str,
        m: u32,
        n: u32,
        tn: TnClass,
    },

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("invalid tolerance {0}")]
    Tolerance(f64),
}

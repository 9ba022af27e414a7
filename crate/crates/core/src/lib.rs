//! Exact and certified dilatations for the braid families `beta(m,n)` and
//! `sigma(m,n)`: integer polynomials and matrices, Sturm-certified real roots,
//! Mahler measures, and horseshoe orbit codes.

pub mod error;
pub mod families;
pub mod horseshoe;
mod json;
pub mod linalg;
pub mod poly;
pub mod spectral;

pub use error::{Error, Result};
pub use families::{DilatationResult, Family, FamilyParams, Provenance, SingularityData, TnClass};
pub use linalg::IntMatrix;
pub use poly::{IntPolynomial, SalemBoydSpec, Sign, Symmetry};
pub use spectral::{MahlerMeasure, RootEnclosure, UnitCircleCensus};

//! Exact computation of global minimal polynomials of generalized Verma
//! modules, Levi branching, characteristic polynomials and gap certificates.

pub mod error;
pub mod exactalg;
pub mod linalg;
pub mod rootsys;
pub mod weights;
pub mod branching;
pub mod params;
pub mod minpoly;
pub mod latex;
pub mod goldens;
pub mod gap;
pub mod cli;

pub use error::{Error, Result};

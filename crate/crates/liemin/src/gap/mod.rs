//! Extremal low weights, gap functions and certification of the gap
//! `J_Θ(λ) = I_{π,Θ}(λ) + J(λ_Θ)`.

pub mod chain;
pub mod exist;
pub mod function;
pub mod gln;
pub mod recursion;

pub use chain::{extremal_low_weights, extremal_weights_by_scan, ExtremalChain};
pub use exist::{gapexist_check, prop_every_certify, GapExistence, TypeVerdict};
pub use function::{
    gap_certify, gap_function, gap_functions, nonvanishing_criteria, AlphaGap, Candidate, Criterion, GapCertificate,
    GapFunction, Verdict,
};
pub use gln::gln_linkage_check;
pub use recursion::{closed_form_residuals, Recursion};

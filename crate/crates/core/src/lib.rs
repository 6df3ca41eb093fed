//! Exact polynomial and Poisson-bracket machinery for multidegrees of tame
//! automorphisms of `C^3`, with a mechanical check of the argument that
//! `(4,5,6)` is not such a multidegree.
//!
//! Modules, bottom up:
//!
//! * [`poly`]: sparse multivariate polynomials over `Q`.
//! * [`poisson`]: the formal Poisson bracket and its degree.
//! * [`h_reduction`]: solving `[H, P] = 0` for squarefree homogeneous `H`.
//! * [`degree_estimates`]: the Shestakov–Umirbaev bound and elementary-reduction case analysis.
//! * [`mdeg_criteria`]: known realizability criteria as a rule list.
//! * [`lemma_verifier`]: identity catalog, forced-form scenarios and contradiction checks.

pub mod degree_estimates;
pub mod h_reduction;
pub mod lemma_verifier;
pub mod mdeg_criteria;
pub mod poisson;
pub mod poly;

pub use poly::{Degree, Polynomial, Rational};

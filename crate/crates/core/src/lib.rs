//! Exact piecewise-linear degree theory and fixed-point certification.
//!
//! Complexes, maps and all predicates work over exact rationals, so every
//! degree, containment test and fixed point reported here is exact.

pub mod cli;
pub mod degree;
pub mod fixpoint;
pub mod geom;
pub mod hypotheses;
pub mod linalg;
pub mod lp;
pub mod plmap;
pub mod rational;
pub mod scenarios;

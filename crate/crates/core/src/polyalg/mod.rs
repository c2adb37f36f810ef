//! Exact arithmetic kernel: rationals, small number fields, sparse
//! multivariate and dense univariate polynomials, rational functions,
//! resultants and discriminants.

pub mod multi;
pub mod numfield;
pub mod ratfn;
pub mod ring;
pub mod uni;

//! Exact computer algebra for a two-parameter family of cubic threefolds
//! with dihedral symmetry of order ten, and for the tower of curves that
//! computes the isogeny factors of their intermediate Jacobians.
//!
//! Everything is exact: arithmetic runs over big rationals, over small
//! number fields (fifth roots of unity, `sqrt(5)`, `i`, and the tower
//! generated by all of them), and over sparse polynomial rings with such
//! coefficients. Floating point appears in exactly one place, the numeric
//! root-difference oracle that cross-checks the Igusa invariants.
//!
//! The crate is organized around the objects it builds:
//!
//! * [`polyalg`] — the arithmetic kernel: number fields, sparse
//!   multivariate and dense univariate polynomials, rational functions,
//!   resultants and discriminants (subresultant PRS with a Sylvester
//!   determinant cross-check).
//! * [`groebner`] — Buchberger Gröbner bases over the rationals, normal
//!   forms, ideal membership, elimination, projective emptiness.
//! * [`threefold`] — the cubic threefold family, its discriminants, the
//!   normalization of a seven-coefficient member into the two-parameter
//!   standard form, and the dihedral symmetry generators.
//! * [`prymcurves`] — the degeneration quintic, its double cover data, the
//!   degree-five and degree-two quotient curves, the bigonal genus-2 curve,
//!   the Galois-case elliptic curves, and the isogeny decomposition report.
//! * [`igusa`] — exact Igusa–Clebsch invariants of binary quintics/sextics,
//!   absolute invariants, the numeric oracle, and the Humbert quartic
//!   evaluator.
//! * [`verifysuite`] — the executable ledger of closed-form claims, run as
//!   exact symbolic identities or at seeded rational specializations.

pub mod groebner;
pub mod igusa;
pub mod polyalg;
pub mod prymcurves;
pub mod threefold;
pub mod verifysuite;

pub use polyalg::multi::{Mono, MultiPoly, VarSet};
pub use polyalg::numfield::{FieldId, NfElem};
pub use polyalg::ratfn::RatFn;
pub use polyalg::ring::{Field, Ring};
pub use polyalg::uni::UniPoly;

/// Exact rational scalar used throughout the crate.
pub type Rat = num::BigRational;
/// Sparse polynomial over the rationals.
pub type QPoly = MultiPoly<Rat>;
/// Dense univariate polynomial over the rationals.
pub type QUni = UniPoly<Rat>;
/// Univariate polynomial whose coefficients are polynomials in the family
/// parameters, i.e. an element of `Q[a,b][x]`.
pub type ParamUni = UniPoly<MultiPoly<Rat>>;
/// Univariate polynomial over a number field.
pub type NfUni = UniPoly<NfElem>;
/// Rational function with `Q`-polynomial numerator and denominator.
pub type QRatFn = RatFn<Rat>;

/// Errors reported by the exact kernel and the curve constructors.
#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum Error {
    #[error("undefined resultant: both inputs are zero")]
    UndefinedResultant,
    #[error("discriminant of a constant polynomial is undefined")]
    ConstantDiscriminant,
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    InexactDivision,
    #[error("incompatible variable sets: {0} vs {1}")]
    IncompatibleVars(String, String),
    #[error("incompatible number fields: {0} vs {1}")]
    IncompatibleFields(&'static str, &'static str),
    #[error("substitution binds {0} to a rational function with identically zero denominator")]
    ZeroDenominator(String),
    #[error("non-homogeneous generator passed to a projective test")]
    NonHomogeneous,
    #[error("polynomial degree {0} out of the supported range {1}..={2}")]
    DegreeOutOfRange(usize, usize, usize),
    #[error("singular sextic: I10 = 0")]
    SingularSextic,
    #[error("Galois case: b = 8, use the b8 elliptic models")]
    GaloisB8,
    #[error("singular member: the factor {0} vanishes")]
    SingularFactor(&'static str),
    #[error("Humbert constraint violated: {0}")]
    HumbertConstraint(&'static str),
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
    #[error("numeric root finding failed: {0}")]
    RootFinding(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for an integer as a [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for `p/q` as a [`Rat`]. Panics if `q == 0`.
pub fn ratq(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(p.into(), q.into())
}

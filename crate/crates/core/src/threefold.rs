//! The cubic threefold family.
//!
//! A member is cut out in projective four-space by the seven-coefficient
//! cubic
//!
//! ```text
//! F = a1*x0^3 + a2*x0*x1*x4 + a3*x0*x2*x3 + a4*x1^2*x3
//!       + a5*x1*x2^2 + a6*x2*x4^2 + a7*x3^2*x4
//! ```
//!
//! carrying the order-five symmetry `x_k -> zeta^k x_k`. Smoothness is a
//! single polynomial condition `D != 0`, and away from two degenerate loci
//! every member normalizes into the two-parameter standard form
//!
//! ```text
//! F_{a,b} = x*u^2 + 2*y*u*v + z*v^2 + 2*z^2*u + 2*x^2*v + a*y^3 + b*x*y*z
//! ```
//!
//! on which the dihedral group of order ten acts by explicit matrices.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::groebner::{self, Ideal, Order};
use crate::polyalg::multi::{MultiPoly, VarSet};
use crate::polyalg::numfield::NfElem;
use crate::polyalg::ring::Ring;
use crate::{QPoly, Rat};

/// Coefficients `(a1..a7)` of a family member.
#[derive(Clone, Debug, PartialEq)]
pub struct SevenTuple(pub [Rat; 7]);

impl SevenTuple {
    pub fn from_ints(v: [i64; 7]) -> Self {
        SevenTuple(v.map(|n| Rat::from_integer(n.into())))
    }

    fn a(&self, i: usize) -> &Rat {
        &self.0[i - 1]
    }
}

/// Parameters `(a, b)` of the standard form.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardParams {
    pub a: Rat,
    pub b: Rat,
}

impl StandardParams {
    pub fn new(a: Rat, b: Rat) -> Self {
        StandardParams { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(Rat::from_integer(a.into()), Rat::from_integer(b.into()))
    }

    /// The two lines fixed by the whole dihedral action, each given by the
    /// three coordinates that vanish on it.
    pub fn invariant_lines(&self) -> [[&'static str; 3]; 2] {
        [["x", "y", "z"], ["u", "v", "y"]]
    }
}

/// The ten monomial coefficients of the degree-eleven invariant, generic
/// over the scalar so the same expression evaluates rationally and
/// symbolically.
pub fn delta7_in<K: Ring>(a: &[K; 7]) -> K {
    let m = |ints: [usize; 7]| -> K {
        let mut t = K::one();
        for (i, &e) in ints.iter().enumerate() {
            for _ in 0..e {
                t = t * a[i].clone();
            }
        }
        t
    };
    let term = |c: i64, e: [usize; 7]| -> K { K::from_int(c) * m(e) };
    term(1, [0, 4, 5, 1, 0, 1, 0])
        + term(8, [1, 2, 4, 2, 0, 2, 0])
        + term(16, [2, 0, 3, 3, 0, 3, 0])
        + term(1, [0, 5, 4, 0, 1, 0, 1])
        + term(15, [1, 3, 3, 1, 1, 1, 1])
        + term(12, [2, 1, 2, 2, 1, 2, 1])
        + term(8, [1, 4, 2, 0, 2, 0, 2])
        + term(12, [2, 2, 1, 1, 2, 1, 2])
        + term(27, [3, 0, 0, 2, 2, 2, 2])
        + term(16, [2, 3, 0, 0, 3, 0, 3])
}

/// `D = a1 a4 a5 a6 a7 * delta`.
pub fn big_d7_in<K: Ring>(a: &[K; 7]) -> K {
    let pre = a[0].clone() * a[3].clone() * a[4].clone() * a[5].clone() * a[6].clone();
    pre * delta7_in(a)
}

pub fn delta7(t: &SevenTuple) -> Rat {
    delta7_in(&t.0)
}

pub fn big_d7(t: &SevenTuple) -> Rat {
    big_d7_in(&t.0)
}

/// The ten-term quintic invariant of the standard form.
pub fn delta2_in<K: Ring>(a: &K, b: &K) -> K {
    let p = |c: i64, ea: u32, eb: u32| -> K {
        let mut t = K::from_int(c);
        for _ in 0..ea {
            t = t * a.clone();
        }
        for _ in 0..eb {
            t = t * b.clone();
        }
        t
    };
    p(512, 2, 0)
        + p(27, 3, 0)
        + p(48, 2, 1)
        + p(128, 1, 2)
        + p(6, 2, 2)
        + p(30, 1, 3)
        + p(1, 2, 3)
        + p(8, 0, 4)
        + p(2, 1, 4)
        + p(1, 0, 5)
}

pub fn big_d2_in<K: Ring>(a: &K, b: &K) -> K {
    a.clone() * delta2_in(a, b)
}

pub fn delta2(p: &StandardParams) -> Rat {
    delta2_in(&p.a, &p.b)
}

pub fn big_d2(p: &StandardParams) -> Rat {
    big_d2_in(&p.a, &p.b)
}

/// Variable set of the ambient projective space of the seven-coefficient
/// model.
pub fn f7_vars() -> VarSet {
    VarSet::new(["x0", "x1", "x2", "x3", "x4"])
}

/// The seven monomials, in model order.
const F7_EXPONENTS: [[u32; 5]; 7] = [
    [3, 0, 0, 0, 0],
    [1, 1, 0, 0, 1],
    [1, 0, 1, 1, 0],
    [0, 2, 0, 1, 0],
    [0, 1, 2, 0, 0],
    [0, 0, 1, 0, 2],
    [0, 0, 0, 2, 1],
];

/// `F` for explicit rational coefficients, over `x0..x4`.
pub fn build_f7(t: &SevenTuple) -> QPoly {
    let vs = f7_vars();
    QPoly::from_terms(
        &vs,
        F7_EXPONENTS
            .iter()
            .zip(&t.0)
            .map(|(e, c)| (crate::Mono(e.to_vec()), c.clone())),
    )
}

/// `F` with the seven coefficients left symbolic, over `x0..x4, a1..a7`.
pub fn build_f7_symbolic() -> QPoly {
    let names = ["x0", "x1", "x2", "x3", "x4", "a1", "a2", "a3", "a4", "a5", "a6", "a7"];
    let vs = VarSet::new(names);
    QPoly::from_terms(
        &vs,
        F7_EXPONENTS.iter().enumerate().map(|(k, e)| {
            let mut exp = e.to_vec();
            exp.extend(std::iter::repeat(0).take(7));
            exp[5 + k] = 1;
            (crate::Mono(exp), Rat::one())
        }),
    )
}

/// Generators of the Jacobian ideal of `F` at explicit coefficients.
pub fn jacobian_ideal(t: &SevenTuple) -> Ideal {
    let vs = f7_vars();
    let f = build_f7(t);
    let gens = vs.names().iter().map(|n| f.derivative(n)).collect();
    Ideal::new(&vs, gens, Order::Grevlex)
}

pub fn is_smooth7(t: &SevenTuple) -> bool {
    !big_d7(t).is_zero()
}

/// Cross-validate the discriminant criterion by the Gröbner route.
pub fn smoothness_cross_check(t: &SevenTuple) -> crate::Result<bool> {
    groebner::is_empty_projective(&jacobian_ideal(t))
}

/// Coordinate points that witness a singularity when the matching
/// coefficient vanishes: coefficient index paired with the axis point.
pub const SINGULAR_WITNESSES: [(usize, &str, [i64; 5]); 5] = [
    (1, "P1", [1, 0, 0, 0, 0]),
    (4, "P4", [0, 1, 0, 0, 0]),
    (5, "P5", [0, 0, 1, 0, 0]),
    (6, "P6", [0, 0, 0, 0, 1]),
    (7, "P7", [0, 0, 0, 1, 0]),
];

/// Structured reason a member is singular.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum SingularWitness {
    /// An axis coordinate point at which all five partials vanish.
    Point { name: String, coords: [i64; 5] },
    /// All of `a1,a4,a5,a6,a7` are nonzero but the degree-eleven invariant
    /// vanishes.
    DeltaVanishes,
}

/// Audit trace of the normalization chain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalizationTrace {
    /// Whether the `a2 <-> a3` coefficient swap was applied first.
    pub swapped: bool,
    /// The tuple the chain actually ran on (post-swap if `swapped`).
    pub working_tuple: [String; 7],
    /// `(a6', a4', a1', a2')` after the first coordinate change.
    pub primes: [String; 4],
    /// `(a4'', a1'', a2'')` after the second.
    pub double_primes: [String; 3],
    /// Fifteenth power of the final scaling; only this enters the result.
    pub mu15: String,
    /// The `(a, b)` obtained by running the swapped route when both swap
    /// inputs were admissible; recorded, not compared.
    pub alt_pair: Option<(String, String)>,
}

/// Outcome of normalizing a seven-tuple.
#[derive(Clone, Debug, PartialEq)]
pub enum NormalizationResult {
    Standard { params: StandardParams, trace: NormalizationTrace },
    /// `a2 = a3 = 0` on a smooth member; projectively equivalent to the
    /// fixed special cubic.
    SpecialX0,
    Singular(SingularWitness),
}

/// The fixed special member reached when `a2 = a3 = 0`.
pub fn special_x0_model() -> QPoly {
    build_f7(&SevenTuple::from_ints([1, 0, 0, 1, 1, 1, 1]))
}

/// Coefficient permutation induced by `x_i -> x_{2i mod 5}`; exchanges the
/// two swap-sensitive coefficients while preserving both invariants.
pub fn swap_tuple(t: &SevenTuple) -> SevenTuple {
    let a = &t.0;
    SevenTuple([
        a[0].clone(),
        a[2].clone(),
        a[1].clone(),
        a[6].clone(),
        a[3].clone(),
        a[4].clone(),
        a[5].clone(),
    ])
}

fn singular_witness(t: &SevenTuple) -> SingularWitness {
    for (idx, name, coords) in SINGULAR_WITNESSES {
        if t.a(idx).is_zero() {
            return SingularWitness::Point { name: name.to_string(), coords };
        }
    }
    SingularWitness::DeltaVanishes
}

/// Closed-form pair produced by the normalization chain on a tuple with
/// `a3 != 0` and `D != 0`.
fn closed_form_pair(t: &SevenTuple) -> (Rat, Rat) {
    let [a1, a2, a3, a4, a5, a6, a7] = &t.0;
    let a = Rat::from_integer(32.into()) * a1 * a5 * a5 * a7 * a7 / (a3 * a3 * a3 * a4 * a6);
    let b = Rat::from_integer(8.into()) * a2 * a5 * a7 / (a3 * a4 * a6);
    (a, b)
}

pub fn normalize(t: &SevenTuple) -> NormalizationResult {
    if big_d7(t).is_zero() {
        return NormalizationResult::Singular(singular_witness(t));
    }
    if t.a(2).is_zero() && t.a(3).is_zero() {
        return NormalizationResult::SpecialX0;
    }
    let swapped = t.a(3).is_zero();
    let w = if swapped { swap_tuple(t) } else { t.clone() };
    let [a1, a2, a3, a4, a5, a6, a7] = &w.0;
    let two = Rat::from_integer(2.into());
    let a6p = a6 / &(&two * &(a7 * a7));
    let a4p = a4 / &(&two * &(a5 * a5));
    let a1p = &Rat::from_integer(8.into()) * &(a1 / &(&(a3 * a3) * a3));
    let a2p = &(&two * a2) / &(&(a3 * a5) * a7);
    let a4pp = &(&(a4 * a7) * a7) / &(&(a5 * a5) * a6);
    let a7_4 = &(a7 * a7) * &(a7 * a7);
    let a3_3 = &(a3 * a3) * a3;
    let a1pp = &(&Rat::from_integer(32.into()) * &(a1 * &a7_4)) / &(&a3_3 * &(a6 * a6));
    let a7_3 = &(a7 * a7) * a7;
    let a2pp = &(&Rat::from_integer(8.into()) * &(a2 * &a7_3)) / &(&(a3 * a5) * &(a6 * a6));
    let mu15 = a4pp.recip();
    let (a, b) = (&a1pp / &a4pp, &a2pp / &a4pp);
    debug_assert_eq!((a.clone(), b.clone()), closed_form_pair(&w));
    let alt_pair = if !t.a(2).is_zero() && !t.a(3).is_zero() {
        let (aa, ab) = closed_form_pair(&swap_tuple(t));
        Some((aa.to_string(), ab.to_string()))
    } else {
        None
    };
    NormalizationResult::Standard {
        params: StandardParams::new(a, b),
        trace: NormalizationTrace {
            swapped,
            working_tuple: w.0.clone().map(|r| r.to_string()),
            primes: [a6p, a4p, a1p, a2p].map(|r| r.to_string()),
            double_primes: [a4pp, a1pp, a2pp].map(|r| r.to_string()),
            mu15: mu15.to_string(),
            alt_pair,
        },
    }
}

/// Ambient variables of the standard form.
pub fn fab_vars() -> VarSet {
    VarSet::new(["u", "v", "x", "y", "z"])
}

fn fab_over<K: Ring>(vs: &VarSet, a: K, b: K) -> MultiPoly<K> {
    let u = MultiPoly::<K>::var(vs, "u");
    let v = MultiPoly::<K>::var(vs, "v");
    let x = MultiPoly::<K>::var(vs, "x");
    let y = MultiPoly::<K>::var(vs, "y");
    let z = MultiPoly::<K>::var(vs, "z");
    let two = MultiPoly::<K>::from_int(2);
    x.clone() * u.clone() * u.clone()
        + two.clone() * y.clone() * u.clone() * v.clone()
        + z.clone() * v.clone() * v.clone()
        + two.clone() * z.clone() * z.clone() * u
        + two * x.clone() * x.clone() * v
        + y.pow(3).scale(&a)
        + (x * y * z).scale(&b)
}

/// Standard form at explicit parameters, over `u,v,x,y,z`.
pub fn build_fab(p: &StandardParams) -> QPoly {
    fab_over(&fab_vars(), p.a.clone(), p.b.clone())
}

/// Standard form with symbolic parameters, over `u,v,x,y,z,a,b`.
pub fn build_fab_symbolic() -> QPoly {
    let vs = VarSet::new(["u", "v", "x", "y", "z", "a", "b"]);
    let a = QPoly::var(&vs, "a");
    let b = QPoly::var(&vs, "b");
    let base = fab_over(&vs, Rat::zero(), Rat::zero());
    let y = QPoly::var(&vs, "y");
    let x = QPoly::var(&vs, "x");
    let z = QPoly::var(&vs, "z");
    base + a * y.pow(3) + b * x * y * z
}

/// 5x5 matrix over the cyclotomic field; columns describe the images of
/// the coordinates `(u, v, x, y, z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat5(pub [[NfElem; 5]; 5]);

impl Mat5 {
    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..5 {
            m.0[i][i] = NfElem::int(1);
        }
        m
    }

    fn zero() -> Self {
        Mat5(std::array::from_fn(|_| std::array::from_fn(|_| NfElem::int(0))))
    }

    pub fn mul(&self, other: &Mat5) -> Mat5 {
        let mut out = Self::zero();
        for i in 0..5 {
            for j in 0..5 {
                let mut s = NfElem::int(0);
                for k in 0..5 {
                    s = s + self.0[i][k].clone() * other.0[k][j].clone();
                }
                out.0[i][j] = s;
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Mat5 {
        let mut acc = Mat5::identity();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute coordinates through the matrix: variable `j` maps to the
    /// linear form with coefficients from column `j`.
    pub fn act_on(&self, f: &MultiPoly<NfElem>) -> MultiPoly<NfElem> {
        let vs = f.vars().clone();
        let coord_names = ["u", "v", "x", "y", "z"];
        let images: Vec<(&str, MultiPoly<NfElem>)> = (0..5)
            .map(|j| {
                let mut img = MultiPoly::<NfElem>::zero_over(&vs);
                for (i, row) in coord_names.iter().enumerate() {
                    if !self.0[i][j].is_zero() {
                        img = img + MultiPoly::var(&vs, row).scale(&self.0[i][j]);
                    }
                }
                (coord_names[j], img)
            })
            .collect();
        f.substitute(&vs, &images)
    }
}

/// The order-five and order-two symmetry generators of the standard form:
/// `(u:v:x:y:z) -> (z5^2 u : z5^3 v : z5 x : y : z5^4 z)` and
/// `(u:v:x:y:z) -> (v:u:z:y:x)`.
pub fn d5_generators() -> (Mat5, Mat5) {
    let z = NfElem::zeta();
    let mut alpha = Mat5::zero();
    let exps = [2u32, 3, 1, 0, 4];
    for (i, &e) in exps.iter().enumerate() {
        alpha.0[i][i] = z.pow(e);
    }
    let mut iota = Mat5::zero();
    let perm = [1usize, 0, 4, 3, 2];
    for (i, &j) in perm.iter().enumerate() {
        iota.0[i][j] = NfElem::int(1);
    }
    (alpha, iota)
}

/// Order of the matrix group generated by the two symmetry generators,
/// by closure enumeration.
pub fn d5_group_order() -> usize {
    let (alpha, iota) = d5_generators();
    let mut elems: Vec<Mat5> = vec![Mat5::identity()];
    let gens = [alpha, iota];
    loop {
        let mut grew = false;
        let snapshot = elems.clone();
        for e in &snapshot {
            for g in &gens {
                let m = e.mul(g);
                if !elems.contains(&m) {
                    elems.push(m);
                    grew = true;
                }
            }
        }
        if !grew {
            return elems.len();
        }
    }
}

/// Standard form over the cyclotomic field with symbolic parameters, the
/// form the symmetry generators act on.
pub fn fab_symbolic_cyclotomic() -> MultiPoly<NfElem> {
    build_fab_symbolic().map_coeffs(|c| NfElem::from_rat(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::multi::polyvars;
    use crate::rat;

    #[test]
    fn delta_values_from_direct_evaluation() {
        assert_eq!(delta7(&SevenTuple::from_ints([1, 1, 1, 1, 1, 1, 1])), rat(116));
        assert_eq!(delta7(&SevenTuple::from_ints([1, 0, 1, 1, 1, 1, 1])), rat(43));
        assert_eq!(delta7(&SevenTuple::from_ints([1, 1, 1, 0, 0, 0, 0])), rat(0));
        assert_eq!(big_d7(&SevenTuple::from_ints([1, 1, 1, 1, 1, 1, 1])), rat(116));
        assert_eq!(big_d7(&SevenTuple::from_ints([0, 1, 1, 1, 1, 1, 1])), rat(0));
        assert_eq!(big_d7(&SevenTuple::from_ints([1, 0, 1, 1, 1, 1, 1])), rat(43));
        // with both swap inputs zero only the 27 a1^3 (a4 a5 a6 a7)^2 term survives
        assert_eq!(delta7(&SevenTuple::from_ints([1, 0, 0, 1, 1, 1, 1])), rat(27));
        assert!(is_smooth7(&SevenTuple::from_ints([1, 0, 0, 1, 1, 1, 1])));
        assert!(!is_smooth7(&SevenTuple::from_ints([0, 1, 1, 1, 1, 1, 1])));
    }

    #[test]
    fn delta2_values() {
        assert_eq!(delta2(&StandardParams::from_ints(-2, -2)), rat(1000));
        assert_eq!(delta2(&StandardParams::from_ints(1, 0)), rat(539));
    }

    #[test]
    fn standard_form_consistency_identity() {
        // (1/64) D(a,b,2,2,1,2,1) = a * delta(a,b) in Q[a,b]
        let (_, [a, b]) = polyvars::<Rat, 2>(["a", "b"]);
        let tuple: [QPoly; 7] = [
            a.clone(),
            b.clone(),
            QPoly::from_int(2),
            QPoly::from_int(2),
            QPoly::from_int(1),
            QPoly::from_int(2),
            QPoly::from_int(1),
        ];
        let lhs = big_d7_in(&tuple).scale(&crate::ratq(1, 64));
        let rhs = big_d2_in(&a, &b);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn b8_discriminant_factorization() {
        // D(a,8) = a (a+32)^2 (27a+64) in Q[a]
        let (_, [a]) = polyvars::<Rat, 1>(["a"]);
        let eight = QPoly::from_int(8);
        let lhs = big_d2_in(&a, &eight);
        let rhs = a.clone()
            * (a.clone() + QPoly::from_int(32)).pow(2)
            * (a.scale(&rat(27)) + QPoly::from_int(64));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn f7_examples() {
        let vs = f7_vars();
        let x0 = QPoly::var(&vs, "x0");
        assert_eq!(build_f7(&SevenTuple::from_ints([1, 0, 0, 0, 0, 0, 0])), x0.pow(3));
        assert!(build_f7(&SevenTuple::from_ints([0; 7])).is_zero());
        let all = build_f7(&SevenTuple::from_ints([1; 7]));
        assert_eq!(all.num_terms(), 7);
        assert!(all.is_homogeneous());
        assert_eq!(all.total_degree(), Some(3));
    }

    #[test]
    fn swap_rule_is_induced_by_the_doubling_map_and_preserves_delta() {
        let f = build_f7_symbolic();
        let vs = f.vars().clone();
        // x_i -> x_{2i mod 5}
        let img = f.substitute(
            &vs,
            &[
                ("x1", QPoly::var(&vs, "x2")),
                ("x2", QPoly::var(&vs, "x4")),
                ("x3", QPoly::var(&vs, "x1")),
                ("x4", QPoly::var(&vs, "x3")),
            ],
        );
        // coefficients permuted by the swap rule
        let swapped = f.substitute(
            &vs,
            &[
                ("a2", QPoly::var(&vs, "a3")),
                ("a3", QPoly::var(&vs, "a2")),
                ("a4", QPoly::var(&vs, "a7")),
                ("a5", QPoly::var(&vs, "a4")),
                ("a6", QPoly::var(&vs, "a5")),
                ("a7", QPoly::var(&vs, "a6")),
            ],
        );
        assert_eq!(img, swapped);

        // the degree-eleven invariant is fixed by the induced permutation
        let (_, syms) = polyvars::<Rat, 7>(["a1", "a2", "a3", "a4", "a5", "a6", "a7"]);
        let direct = delta7_in(&syms);
        let [s1, s2, s3, s4, s5, s6, s7] = syms;
        let permuted = delta7_in(&[s1, s3, s2, s7, s4, s5, s6]);
        assert_eq!(direct, permuted);
    }

    #[test]
    fn normalize_dispatch_cases() {
        match normalize(&SevenTuple::from_ints([1, 0, 1, 1, 1, 1, 1])) {
            NormalizationResult::Standard { params, trace } => {
                assert_eq!(params, StandardParams::from_ints(32, 0));
                assert!(!trace.swapped);
                assert_eq!(trace.double_primes, ["1", "32", "0"].map(String::from));
                assert_eq!(trace.mu15, "1");
            }
            other => panic!("expected standard form, got {other:?}"),
        }
        assert_eq!(
            normalize(&SevenTuple::from_ints([1, 0, 0, 1, 1, 1, 1])),
            NormalizationResult::SpecialX0
        );
        match normalize(&SevenTuple::from_ints([0, 1, 1, 1, 1, 1, 1])) {
            NormalizationResult::Singular(SingularWitness::Point { name, coords }) => {
                assert_eq!(name, "P1");
                assert_eq!(coords, [1, 0, 0, 0, 0]);
            }
            other => panic!("expected singular witness, got {other:?}"),
        }
        match normalize(&SevenTuple::from_ints([1, 1, 0, 1, 1, 1, 1])) {
            NormalizationResult::Standard { params, trace } => {
                assert_eq!(params, StandardParams::from_ints(32, 0));
                assert!(trace.swapped);
            }
            other => panic!("expected standard form, got {other:?}"),
        }
    }

    #[test]
    fn normalization_chain_reproduces_closed_form_on_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut tried = 0;
        while tried < 100 {
            let t = SevenTuple::from_ints(std::array::from_fn(|_| rng.gen_range(-5..=5)));
            if big_d7(&t).is_zero() || t.a(3).is_zero() {
                continue;
            }
            tried += 1;
            match normalize(&t) {
                NormalizationResult::Standard { params, trace } => {
                    assert!(!trace.swapped);
                    let (ea, eb) = closed_form_pair(&t);
                    assert_eq!((params.a, params.b), (ea, eb));
                }
                other => panic!("smooth tuple with a3 != 0 must normalize, got {other:?}"),
            }
        }
    }

    #[test]
    fn substitution_chain_yields_the_intermediate_form() {
        // run the actual coordinate changes on the cubic itself:
        // x0 -> 2y/a3, x1 -> x/a5, x4 -> z/a7, then x2 -> lambda u,
        // x3 -> lambda v with lambda = a6/(2 a7^2), divided by lambda^2,
        // must equal x u^2 + 2y uv + z v^2 + 2 z^2 u + 2 a4'' x^2 v
        //            + a1'' y^3 + a2'' x y z
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let two = rat(2);
        let mut tried = 0;
        while tried < 100 {
            let t = SevenTuple::from_ints(std::array::from_fn(|_| rng.gen_range(-5..=5)));
            if big_d7(&t).is_zero() || t.a(3).is_zero() {
                continue;
            }
            tried += 1;
            let [a1, a2, a3, a4, a5, a6, a7] = &t.0;
            let f = build_f7(&t);
            let vs = fab_vars();
            let lambda = a6 / &(&two * &(a7 * a7));
            let bind = [
                ("x0", QPoly::var(&vs, "y").scale(&(&two / a3))),
                ("x1", QPoly::var(&vs, "x").scale(&a5.recip())),
                ("x4", QPoly::var(&vs, "z").scale(&a7.recip())),
                ("x2", QPoly::var(&vs, "u").scale(&lambda)),
                ("x3", QPoly::var(&vs, "v").scale(&lambda)),
            ];
            let img = f.substitute(&vs, &bind).scale(&(&lambda * &lambda).recip());
            let a4pp = &(&(a4 * a7) * a7) / &(&(a5 * a5) * a6);
            let a7_4 = (a7 * a7).pow(2);
            let a1pp = &(&rat(32) * &(a1 * &a7_4)) / &(&(&(a3 * a3) * a3) * &(a6 * a6));
            let a2pp = &(&rat(8) * &(a2 * &(&(a7 * a7) * a7))) / &(&(a3 * a5) * &(a6 * a6));
            let u = QPoly::var(&vs, "u");
            let v = QPoly::var(&vs, "v");
            let x = QPoly::var(&vs, "x");
            let y = QPoly::var(&vs, "y");
            let z = QPoly::var(&vs, "z");
            let expect = x.clone() * u.clone() * u.clone()
                + (y.clone() * u.clone() * v.clone()).scale(&two)
                + z.clone() * v.clone() * v.clone()
                + (z.clone() * z.clone() * u).scale(&two)
                + (x.clone() * x.clone() * v).scale(&(&two * &a4pp))
                + y.clone().pow(3).scale(&a1pp)
                + (x * y * z).scale(&a2pp);
            assert_eq!(img, expect);
            // and the parameters are the ratios of the double-primed values
            match normalize(&t) {
                NormalizationResult::Standard { params, .. } => {
                    assert_eq!(params.a, &a1pp / &a4pp);
                    assert_eq!(params.b, &a2pp / &a4pp);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn normalize_swap_stability() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let mut tried = 0;
        while tried < 50 {
            let mut raw: [i64; 7] = std::array::from_fn(|_| rng.gen_range(-5..=5));
            raw[1] = 0; // a2 = 0, a3 nonzero
            let t = SevenTuple::from_ints(raw);
            if big_d7(&t).is_zero() || t.a(3).is_zero() {
                continue;
            }
            tried += 1;
            let direct = normalize(&t);
            let via_swap = normalize(&swap_tuple(&t));
            // swapping moves the zero into a3; the algorithm undoes it and
            // both routes land on the same parameters
            match (direct, via_swap) {
                (
                    NormalizationResult::Standard { params: p1, trace: t1 },
                    NormalizationResult::Standard { params: p2, trace: t2 },
                ) => {
                    assert_eq!(p1, p2);
                    assert!(!t1.swapped);
                    assert!(t2.swapped);
                }
                other => panic!("expected standard forms, got {other:?}"),
            }
        }
    }

    #[test]
    fn d5_matrices_satisfy_group_relations() {
        let (alpha, iota) = d5_generators();
        assert_eq!(alpha.pow(5), Mat5::identity());
        assert_eq!(iota.pow(2), Mat5::identity());
        let conj = iota.mul(&alpha).mul(&iota);
        assert_eq!(conj, alpha.pow(4));
        assert_eq!(d5_group_order(), 10);
    }

    #[test]
    fn standard_form_is_fixed_by_both_generators() {
        let f = fab_symbolic_cyclotomic();
        let (alpha, iota) = d5_generators();
        assert_eq!(alpha.act_on(&f), f);
        assert_eq!(iota.act_on(&f), f);
    }

    #[test]
    fn singular_coefficient_kills_all_partials_at_witness() {
        for (idx, _, coords) in SINGULAR_WITNESSES {
            let mut raw = [1i64; 7];
            raw[idx - 1] = 0;
            let t = SevenTuple::from_ints(raw);
            let f = build_f7(&t);
            let point: Vec<Rat> = coords.iter().map(|&c| rat(c)).collect();
            for n in f7_vars().names() {
                assert!(f.derivative(n).eval(&point).is_zero());
            }
        }
    }
}

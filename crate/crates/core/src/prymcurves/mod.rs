//! The tower of curves attached to a smooth member of the family.
//!
//! From the standard form with parameters `(a, b)` the tower consists of:
//! the plane quintic `H` of degenerate conics, the genus-2 quotient
//! `Hbar: s^2 = (t-1)f4(t)` by the order-five action together with its
//! genus-3 double cover `r^2 = f4(1-w^2)` and the resulting elliptic curve
//! `E''`; the degree-two quotient side, a singular plane quintic in
//! `(T1:T2:w)` and the genus-2 sextic model `v2^2 = 5 T1^6 + ...`; the
//! bigonal genus-2 curve `C: s^2 = -(b-8) f6(t)`; and, in the Galois case
//! `b = 8`, the pair of elliptic curves over `Q(s5)` together with their
//! common model. The decomposition report ties the pieces together.

pub mod weierstrass;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::polyalg::multi::{MultiPoly, VarSet};
use crate::polyalg::numfield::NfElem;
use crate::polyalg::ring::Ring;
use crate::polyalg::uni::{discriminant, UniPoly};
use crate::threefold::{self, NormalizationResult, SevenTuple, SingularWitness, StandardParams};
use crate::{Error, QPoly, QUni, Rat, Result};
pub use weierstrass::{weierstrass_from_cubic, EllipticWeierstrass};

/// Plane projective curve given by one homogeneous polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurveModel {
    pub label: String,
    pub poly: QPoly,
    pub degree: u32,
}

impl PlaneCurveModel {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "field": "Q",
            "model": self.poly.to_string(),
            "degree": self.degree,
        })
    }
}

/// `y^2 = f(x)` with its genus and tracked discriminant.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperellipticModel<K: Ring> {
    pub label: String,
    pub f: UniPoly<K>,
    pub genus: u32,
    pub disc: K,
}

impl<K: Ring> HyperellipticModel<K> {
    fn build(label: &str, f: UniPoly<K>) -> Result<Self> {
        let disc = discriminant(&f)?;
        let deg = f.degree().unwrap() as u32;
        Ok(HyperellipticModel { label: label.to_string(), f, genus: (deg - 1) / 2, disc })
    }
}

impl HyperellipticModel<Rat> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "genus": self.genus,
            "field": "Q",
            "model": format!("y^2 = {}", self.f),
            "disc": self.disc.to_string(),
        })
    }
}

/// `y^2 = cubic(x)`; genus one whenever `disc != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicModel<K: Ring> {
    pub label: String,
    pub cubic: UniPoly<K>,
    /// Polynomial discriminant of the cubic.
    pub disc: K,
}

impl<K: Ring> CubicModel<K> {
    fn build(label: &str, cubic: UniPoly<K>) -> Result<Self> {
        let disc = discriminant(&cubic)?;
        Ok(CubicModel { label: label.to_string(), cubic, disc })
    }

    /// Long Weierstrass model plus the scaling used to reach it.
    pub fn weierstrass(&self) -> Result<(EllipticWeierstrass<K>, K)> {
        weierstrass_from_cubic(&self.cubic)
    }

    pub fn j(&self) -> Result<K> {
        self.weierstrass()?.0.j()
    }
}

impl CubicModel<NfElem> {
    pub fn to_json(&self) -> serde_json::Value {
        let field = self.cubic.coeffs().first().map(|c| c.field().name()).unwrap_or("Q");
        serde_json::json!({
            "label": self.label,
            "genus": 1,
            "field": field,
            "model": format!("y^2 = {}", self.cubic),
            "disc": self.disc.to_string(),
            "j": self.j().ok().map(|j| j.to_string()),
        })
    }
}

fn k<K: Ring>(n: i64, d: i64) -> K {
    K::from_rat(&crate::ratq(n, d))
}

/// Ambient variables of the degeneration quintic.
pub fn h_vars() -> VarSet {
    VarSet::new(["x", "y", "z"])
}

fn quintic_h_terms<K: Ring>(vs: &VarSet, a: &K, b: &K) -> MultiPoly<K> {
    let x = MultiPoly::<K>::var(vs, "x");
    let y = MultiPoly::<K>::var(vs, "y");
    let z = MultiPoly::<K>::var(vs, "z");
    x.clone().pow(5)
        - (x.clone().pow(2) * y.clone() * z.clone().pow(2)).scale(&(b.clone() + K::from_int(2)))
        - (x * y.clone().pow(3) * z.clone()).scale(&(a.clone() - b.clone()))
        + y.pow(5).scale(a)
        + z.pow(5)
}

/// The 3x3 symmetric matrix of the conic over a point `(x:y:z)`, in the
/// fiber coordinates `(u, v, t)`.
fn conic_matrix_entries<K: Ring>(x: &K, y: &K, z: &K, a: &K, b: &K) -> [[K; 3]; 3] {
    let z2 = z.clone() * z.clone();
    let x2 = x.clone() * x.clone();
    let cubic =
        a.clone() * y.clone() * y.clone() * y.clone() + b.clone() * x.clone() * y.clone() * z.clone();
    [
        [x.clone(), y.clone(), z2.clone()],
        [y.clone(), z.clone(), x2.clone()],
        [z2, x2, cubic],
    ]
}

fn det3<K: Ring>(m: &[[K; 3]; 3]) -> K {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone()
    };
    m[0][0].clone() * minor(1, 2, 1, 2) - m[0][1].clone() * minor(1, 2, 0, 2)
        + m[0][2].clone() * minor(1, 2, 0, 1)
}

/// The expanded degeneration quintic, checked on the fly against the
/// determinant of the conic matrix (which equals its negative).
pub fn quintic_h(p: &StandardParams) -> Result<PlaneCurveModel> {
    let vs = h_vars();
    let h = quintic_h_terms(&vs, &p.a, &p.b);
    let x = QPoly::var(&vs, "x");
    let y = QPoly::var(&vs, "y");
    let z = QPoly::var(&vs, "z");
    let a = QPoly::constant_over(&vs, p.a.clone());
    let b = QPoly::constant_over(&vs, p.b.clone());
    let det = det3(&conic_matrix_entries(&x, &y, &z, &a, &b));
    if det + h.clone() != QPoly::zero() {
        return Err(Error::InternalConsistency(
            "conic determinant does not match the quintic".into(),
        ));
    }
    Ok(PlaneCurveModel { label: "H".into(), poly: h, degree: 5 })
}

/// Quintic with the parameters symbolic, over `x,y,z,a,b`.
pub fn quintic_h_symbolic() -> QPoly {
    let vs = VarSet::new(["x", "y", "z", "a", "b"]);
    let a = QPoly::var(&vs, "a");
    let b = QPoly::var(&vs, "b");
    let x = QPoly::var(&vs, "x");
    let y = QPoly::var(&vs, "y");
    let z = QPoly::var(&vs, "z");
    x.clone().pow(5)
        - (b.clone() + QPoly::from_int(2)) * x.clone().pow(2) * y.clone() * z.clone().pow(2)
        - (a.clone() - b.clone()) * x * y.clone().pow(3) * z.clone()
        + a * y.pow(5)
        + z.pow(5)
}

/// Determinant of the symbolic conic matrix, over `x,y,z,a,b`.
pub fn conic_det_symbolic() -> QPoly {
    let vs = VarSet::new(["x", "y", "z", "a", "b"]);
    let x = QPoly::var(&vs, "x");
    let y = QPoly::var(&vs, "y");
    let z = QPoly::var(&vs, "z");
    let a = QPoly::var(&vs, "a");
    let b = QPoly::var(&vs, "b");
    det3(&conic_matrix_entries(&x, &y, &z, &a, &b))
}

/// The conic over a rational point `T = (x:y:z)`, as a polynomial in the
/// fiber coordinates `(t, u, v)`.
pub fn conic_kt(p: &StandardParams, t_pt: &[Rat; 3]) -> QPoly {
    let vs = VarSet::new(["t", "u", "v"]);
    let t = QPoly::var(&vs, "t");
    let u = QPoly::var(&vs, "u");
    let v = QPoly::var(&vs, "v");
    let [x, y, z] = t_pt;
    let cubic = &p.a * &(&(y * y) * y) + &p.b * &(&(x * y) * z);
    u.clone().pow(2).scale(x)
        + (u.clone() * v.clone()).scale(&(&Rat::from_integer(2.into()) * y))
        + v.clone().pow(2).scale(z)
        + (t.clone() * u).scale(&(&Rat::from_integer(2.into()) * &(z * z)))
        + (t.clone() * v).scale(&(&Rat::from_integer(2.into()) * &(x * x)))
        + t.pow(2).scale(&cubic)
}

/// Exact rank of the conic matrix over a rational point.
pub fn conic_rank(p: &StandardParams, t_pt: &[Rat; 3]) -> usize {
    let [x, y, z] = t_pt;
    let mut m: Vec<Vec<Rat>> = conic_matrix_entries(x, y, z, &p.a, &p.b)
        .into_iter()
        .map(|row| row.to_vec())
        .collect();
    let mut rank = 0;
    for col in 0..3 {
        let Some(piv) = (rank..3).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let pv = m[rank][col].clone();
        for r in 0..3 {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &pv;
                for c in 0..3 {
                    let adj = &m[rank][c] * &factor;
                    m[r][c] = &m[r][c] - &adj;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `D1 = (-1 + a + b) D(a,b)`, the smoothness invariant of the quintic.
pub fn d1_in<K: Ring>(a: &K, b: &K) -> K {
    (a.clone() + b.clone() - K::one()) * threefold::big_d2_in(a, b)
}

pub fn discriminant_d1(p: &StandardParams) -> Rat {
    d1_in(&p.a, &p.b)
}

/// The quartic `f4` of the degree-five quotient.
pub fn f4_in<K: Ring>(a: &K, b: &K) -> UniPoly<K> {
    let a2 = a.clone() * a.clone();
    let b2 = b.clone() * b.clone();
    let ab = a.clone() * b.clone();
    UniPoly::from_coeffs(
        "t",
        vec![
            a2.clone() * k::<K>(1, 4),
            -(a2 * k::<K>(1, 4) - ab.clone() * k::<K>(1, 2)),
            -(ab * k::<K>(1, 2) + a.clone() - b2.clone() * k::<K>(1, 4)),
            -(b2 * k::<K>(1, 4) + b.clone()),
            K::one(),
        ],
    )
}

pub fn f4(p: &StandardParams) -> QUni {
    f4_in(&p.a, &p.b)
}

/// `B(t) = (b+2) t^2 + (a-b) t - a`, the degree-two coefficient of the
/// quotient model `s^2 - B(t) s + t^5 = 0`.
pub fn quotient_b_in<K: Ring>(a: &K, b: &K) -> UniPoly<K> {
    UniPoly::from_coeffs(
        "t",
        vec![-a.clone(), a.clone() - b.clone(), b.clone() + K::from_int(2)],
    )
}

/// Genus-2 quotient `s^2 = (t-1) f4(t)`.
pub fn genus2_hbar(p: &StandardParams) -> Result<HyperellipticModel<Rat>> {
    genus2_hbar_in(&p.a, &p.b)
}

pub fn genus2_hbar_in<K: Ring>(a: &K, b: &K) -> Result<HyperellipticModel<K>> {
    let t_minus_1 = UniPoly::from_coeffs("t", vec![-K::one(), K::one()]);
    HyperellipticModel::build("Hbar", t_minus_1 * f4_in(a, b))
}

/// Genus-3 double cover `r^2 = f4(1 - w^2)`.
pub fn genus3_cover(p: &StandardParams) -> Result<HyperellipticModel<Rat>> {
    genus3_cover_in(&p.a, &p.b)
}

pub fn genus3_cover_in<K: Ring>(a: &K, b: &K) -> Result<HyperellipticModel<K>> {
    let one_minus_w2 = UniPoly::from_coeffs("w", vec![K::one(), K::zero(), -K::one()]);
    HyperellipticModel::build("Hbar_cover", f4_in(a, b).compose(&one_minus_w2))
}

/// Genus-1 quotient `r^2 = f4(1 - w)` of the genus-3 cover.
pub fn genus1_quotient(p: &StandardParams) -> Result<HyperellipticModel<Rat>> {
    let one_minus_w = UniPoly::from_coeffs("w", vec![Rat::one(), -Rat::one()]);
    let f = f4(p).compose(&one_minus_w);
    let disc = discriminant(&f)?;
    Ok(HyperellipticModel { label: "Eprime_quartic".into(), f, genus: 1, disc })
}

/// The elliptic curve `E''` in long Weierstrass form, with its five
/// closed-form coefficients.
pub fn elliptic_eprime_in<K: Ring>(a: &K, b: &K) -> EllipticWeierstrass<K> {
    let a_ = a.clone();
    let b_ = b.clone();
    let b2 = b_.clone() * b_.clone();
    let b3 = b2.clone() * b_.clone();
    let b4 = b3.clone() * b_.clone();
    let ab = a_.clone() * b_.clone();
    let apb = a_.clone() + b_.clone();
    let w_a1 = b2.clone() * k::<K>(1, 4) + b_.clone() - K::from_int(4);
    let w_a3 = apb.clone() * apb.clone() * k::<K>(1, 2)
        + K::from_int(4) * a_.clone()
        + K::from_int(6) * b_.clone()
        - K::from_int(8);
    let w_a2 = K::from_int(2) - a_.clone() - ab.clone() * k::<K>(1, 2) - b4.clone() * k::<K>(1, 64)
        - b3.clone() * k::<K>(1, 8)
        - b2.clone() * k::<K>(1, 4)
        - b_.clone();
    let w_a4 = K::from_int(4) * (apb.clone() - K::one());
    let w_a6 = (apb - K::one())
        * (K::from_int(8) - K::from_int(4) * a_.clone() - K::from_int(2) * ab - b4 * k::<K>(1, 16)
            - b3 * k::<K>(1, 2)
            - b2
            - K::from_int(4) * b_);
    EllipticWeierstrass::new(w_a1, w_a2, w_a3, w_a4, w_a6)
}

pub fn elliptic_eprime(p: &StandardParams) -> EllipticWeierstrass<Rat> {
    elliptic_eprime_in(&p.a, &p.b)
}

/// Variables of the singular plane model of the degree-two quotient.
pub fn dab_vars() -> VarSet {
    VarSet::new(["T1", "T2", "w"])
}

/// The singular plane quintic of the degree-two quotient, in `(T1:T2:w)`.
pub fn plane_quintic_dab(p: &StandardParams) -> PlaneCurveModel {
    PlaneCurveModel { label: "D_plane".into(), poly: cdab_in(&p.a, &p.b), degree: 5 }
}

pub fn cdab_in<K: Ring>(a: &K, b: &K) -> MultiPoly<K> {
    let vs = dab_vars();
    let t1 = MultiPoly::<K>::var(&vs, "T1");
    let t2 = MultiPoly::<K>::var(&vs, "T2");
    let w = MultiPoly::<K>::var(&vs, "w");
    let part1 = (t1.clone() - t2.clone().scale(&K::from_int(2)))
        * (t1.clone().pow(2) + t1.clone() * t2.clone() - t2.clone().pow(2)).pow(2);
    let part2 = (t2.clone().pow(3).scale(&(a.clone() + b.clone() + K::from_int(4)))
        - (t1.clone() * t2.clone().pow(2)).scale(&K::from_int(10))
        + t1.clone().pow(3).scale(&K::from_int(5)))
        * w.clone().pow(2);
    let part3 = (t2.scale(&(-(b.clone() + K::from_int(2)))) + t1.scale(&K::from_int(5))) * w.pow(4);
    part1 + part2 + part3
}

/// The three coefficients of the dehomogenized quotient model read as a
/// quadratic in `v = w^2`: `R + Q v + P v^2` over `Q[..][T1]`.
pub fn dab_quadratic_in<K: Ring>(a: &K, b: &K) -> (UniPoly<K>, UniPoly<K>, UniPoly<K>) {
    let t1 = UniPoly::<K>::x("T1");
    let c = |n: i64| UniPoly::<K>::constant("T1", K::from_int(n));
    let r = (t1.clone() - c(2)) * (t1.clone() * t1.clone() + t1.clone() - c(1)).pow(2);
    let q = t1.clone().pow(3).scale(&K::from_int(5)) - t1.clone().scale(&K::from_int(10))
        + UniPoly::constant("T1", a.clone() + b.clone() + K::from_int(4));
    let p = t1.scale(&K::from_int(5)) - UniPoly::constant("T1", b.clone() + K::from_int(2));
    (r, q, p)
}

/// The closed-form genus-2 sextic of the degree-two quotient.
pub fn dab_sextic_in<K: Ring>(a: &K, b: &K) -> UniPoly<K> {
    let apb = a.clone() + b.clone();
    UniPoly::from_coeffs(
        "T1",
        vec![
            apb.clone() * apb + K::from_int(8) * a.clone(),
            -(K::from_int(20) * a.clone()),
            K::zero(),
            K::from_int(10) * (a.clone() - b.clone()),
            K::zero(),
            K::from_int(4) * b.clone() + K::from_int(8),
            K::from_int(5),
        ],
    )
}

/// Genus-2 model of the quotient; the construction re-derives the sextic
/// from the plane quintic through the substitution chain and refuses to
/// return on any mismatch.
pub fn genus2_dab(p: &StandardParams) -> Result<HyperellipticModel<Rat>> {
    let sextic = dab_sextic_in(&p.a, &p.b);
    let (r, q, pp) = dab_quadratic_in(&p.a, &p.b);
    // v = v1/(2+b-5T1), then v1 = (v2 + Q)/2 turns R + Q v + P v^2 = 0
    // into v2^2 = Q^2 - 4 P R
    let chained = q.clone() * q - (pp * r).scale(&Rat::from_integer(4.into()));
    if chained != sextic {
        return Err(Error::InternalConsistency(
            "substitution chain does not reproduce the quotient sextic".into(),
        ));
    }
    HyperellipticModel::build("D", sextic)
}

/// The seven coefficients of `f6`, low to high.
pub fn f6_in<K: Ring>(a: &K, b: &K) -> UniPoly<K> {
    let a_ = a.clone();
    let b_ = b.clone();
    let b2 = b_.clone() * b_.clone();
    let b3 = b2.clone() * b_.clone();
    let bm8 = b_.clone() - K::from_int(8);
    UniPoly::from_coeffs(
        "t",
        vec![
            -(a_.clone() + b_.clone() + K::from_int(24)),
            K::from_int(10) * bm8.clone(),
            K::from_int(5)
                * (K::from_int(3) * a_.clone() + K::from_int(13) * b_.clone() - K::from_int(8)),
            -(K::from_int(10) * bm8.clone() * (b_.clone() + K::from_int(2))),
            -(K::from_int(5)
                * (K::from_int(15) * a_.clone() + K::from_int(6) * b2.clone()
                    + K::from_int(19) * b_.clone()
                    - K::from_int(56))),
            K::from_int(2) * bm8 * (b2.clone() + K::from_int(9) * b_.clone() - K::from_int(11)),
            K::from_int(5)
                * (K::from_int(25) * a_ + b3 + K::from_int(6) * b2 - K::from_int(13) * b_
                    + K::from_int(8)),
        ],
    )
}

/// The bigonal genus-2 curve `s^2 = -(b-8) f6(t)`; the Galois case is
/// dispatched separately.
pub fn bigonal_c(p: &StandardParams) -> Result<HyperellipticModel<Rat>> {
    if p.b == Rat::from_integer(8.into()) {
        return Err(Error::GaloisB8);
    }
    bigonal_c_in(&p.a, &p.b)
}

pub fn bigonal_c_in<K: Ring>(a: &K, b: &K) -> Result<HyperellipticModel<K>> {
    let f6 = f6_in(a, b);
    HyperellipticModel::build("C", f6.scale(&-(b.clone() - K::from_int(8))))
}

/// Sign choice for the Galois-case elliptic curves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignChoice {
    Plus,
    Minus,
}

impl SignChoice {
    fn apply<K: Ring>(self, s5: K) -> K {
        match self {
            SignChoice::Plus => s5,
            SignChoice::Minus => -s5,
        }
    }
}

fn named_singular_factor(a: &Rat) -> Option<&'static str> {
    if a.is_zero() {
        return Some("a");
    }
    if (a + Rat::from_integer(32.into())).is_zero() {
        return Some("a+32");
    }
    if (a * Rat::from_integer(27.into()) + Rat::from_integer(64.into())).is_zero() {
        return Some("27a+64");
    }
    None
}

/// Galois-case cubic `Y^2 = (a+32)X^3 + 10(-5±s5)X^2 - 10(-3±s5)X - 5±2s5`
/// over `Q(s5)`, at an explicit rational `a`.
pub fn b8_elliptic(a: &Rat, sign: SignChoice) -> Result<CubicModel<NfElem>> {
    if let Some(factor) = named_singular_factor(a) {
        return Err(Error::SingularFactor(factor));
    }
    let sym = b8_cubic_generic(&MultiPoly::<NfElem>::constant(NfElem::from_rat(a.clone())), sign)?;
    let cubic = sym.cubic.map_coeffs(|c| c.as_constant().expect("specialized"));
    let disc = sym.disc.as_constant().expect("specialized");
    Ok(CubicModel { label: sym.label, cubic, disc })
}

/// Same cubic with `a` symbolic, over `Q(s5)[a]`.
pub fn b8_elliptic_symbolic(sign: SignChoice) -> CubicModel<MultiPoly<NfElem>> {
    let vs = VarSet::new(["a"]);
    let a = MultiPoly::<NfElem>::var(&vs, "a");
    b8_cubic_generic(&a, sign).expect("symbolic construction cannot fail")
}

fn b8_cubic_generic(
    a: &MultiPoly<NfElem>,
    sign: SignChoice,
) -> Result<CubicModel<MultiPoly<NfElem>>> {
    type P = MultiPoly<NfElem>;
    let s5 = sign.apply(P::constant(NfElem::sqrt5()));
    let c3 = a.clone() + P::from_int(32);
    let c2 = P::from_int(10) * (P::from_int(-5) + s5.clone());
    let c1 = -(P::from_int(10) * (P::from_int(-3) + s5.clone()));
    let c0 = P::from_int(-5) + P::from_int(2) * s5;
    let label = match sign {
        SignChoice::Plus => "C+",
        SignChoice::Minus => "C-",
    };
    CubicModel::build(label, UniPoly::from_coeffs("X", vec![c0, c1, c2, c3]))
}

/// The common model `y^2 = (a+32)x^3 - 20x^2 + 4x - 1/5` both Galois
/// curves become isomorphic to over `Q(s5, i)`.
pub fn b8_common_model(a: &Rat) -> Result<CubicModel<Rat>> {
    if let Some(factor) = named_singular_factor(a) {
        return Err(Error::SingularFactor(factor));
    }
    let cubic = UniPoly::from_coeffs(
        "x",
        vec![crate::ratq(-1, 5), crate::rat(4), crate::rat(-20), a + Rat::from_integer(32.into())],
    );
    CubicModel::build("C_common", cubic)
}

/// Exact statement of the change of model: substituting `x = (5±s5)/10 X`
/// and `y^2 = (5±2 s5)/25 Y^2` into `5y^2 - (5(a+32)x^3 - 100x^2 + 20x - 1)`
/// gives zero once `Y^2` is replaced by the Galois cubic; checked in
/// `Q(s5)[a, X]`.
pub fn b8_common_model_map_identity(sign: SignChoice) -> bool {
    type P = MultiPoly<NfElem>;
    let vs = VarSet::new(["a", "X"]);
    let a = P::var(&vs, "a");
    let big_x = P::var(&vs, "X");
    let s5 = sign.apply(P::constant(NfElem::sqrt5()));
    let x = (P::from_int(5) + s5.clone()) * big_x.clone() * P::from_rat(&crate::ratq(1, 10));
    let y2 = (P::from_int(5) + P::from_int(2) * s5.clone())
        * P::from_rat(&crate::ratq(1, 25))
        * b8_rhs_cubic(&a, &big_x, &s5);
    let lhs = P::from_int(5) * y2
        - (P::from_int(5) * (a + P::from_int(32)) * x.clone().pow(3)
            - P::from_int(100) * x.clone().pow(2)
            + P::from_int(20) * x
            - P::one());
    lhs.is_zero()
}

fn b8_rhs_cubic(
    a: &MultiPoly<NfElem>,
    x: &MultiPoly<NfElem>,
    s5: &MultiPoly<NfElem>,
) -> MultiPoly<NfElem> {
    type P = MultiPoly<NfElem>;
    (a.clone() + P::from_int(32)) * x.clone().pow(3)
        + P::from_int(10) * (P::from_int(-5) + s5.clone()) * x.clone().pow(2)
        - P::from_int(10) * (P::from_int(-3) + s5.clone()) * x.clone()
        + (P::from_int(-5) + P::from_int(2) * s5.clone())
}

/// Which member the decomposition report describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionCase {
    Generic,
    B8Galois,
    SpecialX0,
    Singular,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Component {
    pub curve: String,
    pub multiplicity: u32,
}

/// Machine-readable statement of the isogeny decomposition of the
/// intermediate Jacobian.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub case: DecompositionCase,
    pub components: Vec<Component>,
    pub field_notes: Vec<String>,
}

const RM_NOTE: &str = "Q(sqrt5) embeds in End(B) tensor Q";

/// Decomposition for explicit standard parameters.
pub fn decompose(p: &StandardParams) -> DecompositionReport {
    if threefold::big_d2(p).is_zero() {
        return DecompositionReport {
            case: DecompositionCase::Singular,
            components: vec![],
            field_notes: vec![format!(
                "D({}, {}) = 0: no smooth member, decomposition undefined",
                p.a, p.b
            )],
        };
    }
    if p.b == Rat::from_integer(8.into()) {
        return DecompositionReport {
            case: DecompositionCase::B8Galois,
            components: vec![
                Component { curve: "E''".into(), multiplicity: 1 },
                Component { curve: "C+".into(), multiplicity: 2 },
                Component { curve: "C-".into(), multiplicity: 2 },
            ],
            field_notes: vec![
                "isomorphic to E'' x C^4 over k(sqrt(-1))".into(),
                RM_NOTE.into(),
            ],
        };
    }
    DecompositionReport {
        case: DecompositionCase::Generic,
        components: vec![
            Component { curve: "E''".into(), multiplicity: 1 },
            Component { curve: "Jac(C)".into(), multiplicity: 2 },
        ],
        field_notes: vec![RM_NOTE.into()],
    }
}

/// Decomposition for a member given by its seven coefficients: normalizes
/// first, dispatching the special and singular cases.
pub fn decompose7(t: &SevenTuple) -> DecompositionReport {
    match threefold::normalize(t) {
        NormalizationResult::Standard { params, .. } => decompose(&params),
        NormalizationResult::SpecialX0 => DecompositionReport {
            case: DecompositionCase::SpecialX0,
            components: vec![Component { curve: "E0: y^2 = x^3 + 1".into(), multiplicity: 5 }],
            field_notes: vec!["holds over the algebraic closure".into()],
        },
        NormalizationResult::Singular(w) => DecompositionReport {
            case: DecompositionCase::Singular,
            components: vec![],
            field_notes: vec![match w {
                SingularWitness::Point { name, .. } => {
                    format!("singular member, witness point {name}")
                }
                SingularWitness::DeltaVanishes => "singular member: delta vanishes".into(),
            }],
        },
    }
}

/// `Q(z5)` statement of the degree-five symmetry of the quintic:
/// `H(z5 x, y, z5^-1 z) = H(x, y, z)` with the parameters symbolic.
pub fn quintic_alpha_invariance() -> bool {
    let h = quintic_h_symbolic().map_coeffs(|c| NfElem::from_rat(c.clone()));
    let vs = h.vars().clone();
    let z = NfElem::zeta();
    let img = h.substitute(
        &vs,
        &[
            ("x", MultiPoly::var(&vs, "x").scale(&z)),
            ("z", MultiPoly::var(&vs, "z").scale(&z.pow(4))),
        ],
    );
    img == h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::multi::polyvars;
    use crate::polyalg::uni::sylvester_resultant;
    use crate::{rat, ratq};

    fn params(a: i64, b: i64) -> StandardParams {
        StandardParams::from_ints(a, b)
    }

    #[test]
    fn quintic_examples() {
        // (a,b) = (-2,-2): the middle terms vanish
        let h = quintic_h(&params(-2, -2)).unwrap();
        let vs = h.poly.vars().clone();
        let x = QPoly::var(&vs, "x");
        let y = QPoly::var(&vs, "y");
        let z = QPoly::var(&vs, "z");
        assert_eq!(h.poly, x.pow(5) + z.pow(5) - y.pow(5).scale(&rat(2)));

        // (1:1:1) lies on the quintic for every parameter pair
        for (a, b) in [(1, 1), (3, -2), (0, 7), (-5, 4)] {
            let h = quintic_h(&params(a, b)).unwrap();
            let one = vec![rat(1), rat(1), rat(1)];
            assert!(h.poly.eval(&one).is_zero());
        }

        assert!(quintic_alpha_invariance());
    }

    #[test]
    fn conic_determinant_is_minus_quintic_symbolically() {
        let vs = VarSet::new(["x", "y", "z", "a", "b"]);
        let h = quintic_h_symbolic().embed(&vs);
        let det = conic_det_symbolic().embed(&vs);
        assert!((det + h).is_zero());
    }

    #[test]
    fn tangency_identity() {
        // H(y^2, y, 1) = (y^5 - 1)^2 in Q[a,b][y]
        let h = quintic_h_symbolic();
        let vs = h.vars().clone();
        let y = QPoly::var(&vs, "y");
        let img = h.substitute(&vs, &[("x", y.clone() * y.clone()), ("z", QPoly::one())]);
        let expect = (y.pow(5) - QPoly::one()).pow(2);
        assert_eq!(img, expect);
    }

    #[test]
    fn conic_over_the_diagonal_point() {
        // K_(1:1:1) under u -> w - v - t becomes w^2 + (a+b-1) t^2
        for (a, b) in [(1, 1), (2, -3), (-2, -2)] {
            let kt = conic_kt(&params(a, b), &[rat(1), rat(1), rat(1)]);
            let wvars = VarSet::new(["t", "w", "v"]);
            let w = QPoly::var(&wvars, "w");
            let v = QPoly::var(&wvars, "v");
            let t = QPoly::var(&wvars, "t");
            let img = kt.substitute(&wvars, &[("u", w.clone() - v - t.clone())]);
            let expect = w.pow(2) + t.pow(2).scale(&rat(a + b - 1));
            assert_eq!(img, expect);
        }
    }

    #[test]
    fn conic_over_the_antidiagonal_point_splits() {
        // K_(1:0:-1) = (u + v)(u - v + 2t)
        let kt = conic_kt(&params(5, 7), &[rat(1), rat(0), rat(-1)]);
        let vs = kt.vars().clone();
        let t = QPoly::var(&vs, "t");
        let u = QPoly::var(&vs, "u");
        let v = QPoly::var(&vs, "v");
        let expect = (u.clone() + v.clone()) * (u - v + t.scale(&rat(2)));
        assert_eq!(kt, expect);
    }

    #[test]
    fn conic_rank_detects_the_quintic() {
        let p = params(1, 1);
        // (1:0:0) is off the quintic: full rank
        assert_eq!(conic_rank(&p, &[rat(1), rat(0), rat(0)]), 3);
        // (1:1:1) is on it: rank two (a+b-1 = 1 here)
        assert_eq!(conic_rank(&p, &[rat(1), rat(1), rat(1)]), 2);
        // double line: a+b = 1 makes the diagonal conic rank one
        assert_eq!(conic_rank(&params(1, 0), &[rat(1), rat(1), rat(1)]), 1);
    }

    #[test]
    fn rank_drop_iff_on_quintic_sampled() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let p = params(2, 3);
        let h = quintic_h(&p).unwrap();
        for _ in 0..40 {
            let pt = [rat(rng.gen_range(-4..=4)), rat(rng.gen_range(-4..=4)), rat(rng.gen_range(-4..=4))];
            if pt.iter().all(|c| c.is_zero()) {
                continue;
            }
            let on_curve = h.poly.eval(&pt.to_vec()).is_zero();
            let rank = conic_rank(&p, &pt);
            assert_eq!(rank <= 2, on_curve, "rank {rank} at {pt:?}");
        }
    }

    #[test]
    fn d1_values() {
        assert_eq!(discriminant_d1(&params(-2, -2)), rat(10000));
        assert_eq!(discriminant_d1(&params(1, 0)), rat(0));
        assert_eq!(discriminant_d1(&params(3, -2)), rat(0));
    }

    #[test]
    fn f4_examples() {
        let f = f4(&params(1, 0));
        assert_eq!(
            f,
            QUni::from_coeffs("t", vec![ratq(1, 4), ratq(-1, 4), rat(-1), rat(0), rat(1)])
        );
        for (a, b) in [(3, 5), (-2, 7), (4, -9)] {
            let f = f4(&params(a, b));
            assert_eq!(f.coeff(0), ratq(a * a, 4));
        }
    }

    #[test]
    fn quotient_quartic_identity() {
        // 4 (t-1) f4(t) = 4 t^5 - B(t)^2 in Q[a,b][t]
        let (_, [a, b]) = polyvars::<Rat, 2>(["a", "b"]);
        let f4s = f4_in(&a, &b);
        let bq = quotient_b_in(&a, &b);
        let t_minus_1 = UniPoly::from_coeffs("t", vec![-QPoly::one(), QPoly::one()]);
        let lhs = (t_minus_1 * f4s).scale(&QPoly::from_int(4));
        let rhs = UniPoly::monomial("t", 5, QPoly::from_int(4)) - bq.clone() * bq;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn genus_bookkeeping() {
        let p = params(1, 1);
        assert_eq!(genus2_hbar(&p).unwrap().genus, 2);
        assert_eq!(genus2_hbar(&p).unwrap().f.degree(), Some(5));
        assert_eq!(genus3_cover(&p).unwrap().genus, 3);
        assert_eq!(genus3_cover(&p).unwrap().f.degree(), Some(8));
        assert_eq!(genus1_quotient(&p).unwrap().genus, 1);
        assert_eq!(genus2_dab(&p).unwrap().genus, 2);
        assert_eq!(bigonal_c(&p).unwrap().genus, 2);
        assert_eq!(plane_quintic_dab(&p).degree, 5);
        assert!(plane_quintic_dab(&p).poly.is_homogeneous());
    }

    #[test]
    fn eprime_values_at_one_zero() {
        let e = elliptic_eprime(&params(1, 0));
        assert_eq!(
            (e.a1, e.a2, e.a3, e.a4, e.a6),
            (rat(-4), rat(1), ratq(-7, 2), rat(0), rat(0))
        );
    }

    #[test]
    fn eprime_disc_and_c4_identities() {
        // disc(E'') = -2^-4 a^5 delta(a,b); c4 equals the j-numerator base
        let (_, [a, b]) = polyvars::<Rat, 2>(["a", "b"]);
        let e = elliptic_eprime_in(&a, &b);
        let delta = crate::threefold::delta2_in(&a, &b);
        assert_eq!(e.disc(), (a.clone().pow(5) * delta).scale(&ratq(-1, 16)));
        let g = a.clone().pow(2).scale(&rat(64))
            + (a.clone().pow(2) * b.clone()).scale(&rat(4))
            + (a.clone() * b.clone().pow(2)).scale(&rat(16))
            + a.clone().pow(2) * b.clone().pow(2)
            + (a.clone() * b.clone().pow(3)).scale(&rat(2))
            + b.clone().pow(4);
        assert_eq!(e.c4(), g);
    }

    #[test]
    fn dab_sextic_properties() {
        let (_, [a, b]) = polyvars::<Rat, 2>(["a", "b"]);
        let s = dab_sextic_in(&a, &b);
        assert_eq!(s.lc().unwrap(), &QPoly::from_int(5));
        for (x, y) in [(1, 1), (2, -5), (-3, 4)] {
            assert!(genus2_dab(&params(x, y)).is_ok());
        }
        // the quadratic-in-v reading of the plane quintic matches the
        // (R, Q, P) triple at specializations
        for (av, bv) in [(1i64, 1i64), (2, -5), (-3, 4)] {
            let (ar, br) = (rat(av), rat(bv));
            let cd = cdab_in(&ar, &br);
            let dehom = cd.substitute(cd.vars(), &[("T2", QPoly::one())]);
            let collected = dehom.collect_uni("w");
            let (r, q, p) = dab_quadratic_in(&ar, &br);
            let rest = collected.coeff(0).vars().clone();
            assert_eq!(collected.coeff(0), r.to_multi().embed(&rest));
            assert_eq!(collected.coeff(2), q.to_multi().embed(&rest));
            assert_eq!(collected.coeff(4), p.to_multi().embed(&rest));
            assert!(collected.coeff(1).is_zero());
            assert!(collected.coeff(3).is_zero());
        }
    }

    #[test]
    fn bigonal_coefficients_at_one_zero() {
        let c = bigonal_c(&params(1, 0)).unwrap();
        let f6 = f6_in(&rat(1), &rat(0));
        assert_eq!(
            f6.coeffs().to_vec(),
            vec![rat(-25), rat(-80), rat(-25), rat(160), rat(205), rat(176), rat(165)]
        );
        assert_eq!(c.f, f6.scale(&rat(8)));
        // b1 = 10(b-8) vanishes exactly at b = 8
        let (_, [a, b]) = polyvars::<Rat, 2>(["a", "b"]);
        let f6s = f6_in(&a, &b);
        let _ = a;
        assert_eq!(f6s.coeff(1), (b - QPoly::from_int(8)).scale(&rat(10)));
        assert!(matches!(bigonal_c(&params(1, 8)), Err(Error::GaloisB8)));
    }

    #[test]
    fn b8_models_and_their_invariants() {
        let a = rat(1);
        let plus = b8_elliptic(&a, SignChoice::Plus).unwrap();
        let minus = b8_elliptic(&a, SignChoice::Minus).unwrap();
        let s5 = NfElem::sqrt5();
        // disc(C±) = -5 (2 ∓ s5)^2 (a+32)(27a+64)
        let claim = |flip: NfElem| {
            NfElem::int(-5) * (NfElem::int(2) - flip).pow(2) * NfElem::int(33) * NfElem::int(91)
        };
        assert_eq!(plus.disc, claim(s5.clone()));
        assert_eq!(minus.disc, claim(-s5));
        let jp = plus.j().unwrap();
        let jm = minus.j().unwrap();
        assert_eq!(jp, jm);
        // j = 2^14 5^2 (3a-4)^3 / ((a+32)^3 (27a+64)) at a = 1
        let expect = NfElem::from_rat(
            crate::ratq(16384 * 25 * -1, 1) / (rat(33).pow(3) * rat(91)),
        );
        assert_eq!(jp, expect);
        // the two discriminants multiply to a rational norm
        let prod = plus.disc.clone() * minus.disc.clone();
        assert_eq!(prod, NfElem::from_rat(rat(25) * rat(33).pow(2) * rat(91).pow(2)));
        assert!(matches!(
            b8_elliptic(&rat(-32), SignChoice::Plus),
            Err(Error::SingularFactor("a+32"))
        ));
        assert!(matches!(b8_common_model(&rat(0)), Err(Error::SingularFactor("a"))));
    }

    #[test]
    fn b8_common_model_maps_verify() {
        assert!(b8_common_model_map_identity(SignChoice::Plus));
        assert!(b8_common_model_map_identity(SignChoice::Minus));
        let a = rat(1);
        let common = b8_common_model(&a).unwrap();
        let jc = common.j().unwrap();
        let jp = b8_elliptic(&a, SignChoice::Plus).unwrap().j().unwrap();
        assert_eq!(NfElem::from_rat(jc), jp);
    }

    #[test]
    fn decomposition_reports() {
        let g = decompose(&params(1, 1));
        assert_eq!(g.case, DecompositionCase::Generic);
        assert_eq!(g.components.len(), 2);
        assert_eq!(g.components[1].multiplicity, 2);

        let b8 = decompose(&params(1, 8));
        assert_eq!(b8.case, DecompositionCase::B8Galois);
        assert_eq!(b8.components.len(), 3);

        let x0 = decompose7(&SevenTuple::from_ints([1, 0, 0, 1, 1, 1, 1]));
        assert_eq!(x0.case, DecompositionCase::SpecialX0);
        assert_eq!(x0.components[0].multiplicity, 5);
        assert!(x0.components[0].curve.contains("x^3 + 1"));

        let sing = decompose7(&SevenTuple::from_ints([0, 1, 1, 1, 1, 1, 1]));
        assert_eq!(sing.case, DecompositionCase::Singular);
    }

    #[test]
    fn eprime_degeneration_factors() {
        // (a+b-1)^4 divides the sextic disc; (a+b-1) never divides disc(E'')
        let (_, [a, b]) = polyvars::<Rat, 2>(["a", "b"]);
        let lin = a.clone() + b.clone() - QPoly::one();
        let sextic = dab_sextic_in(&a, &b);
        let ds = discriminant(&sextic).unwrap();
        let mut quot = ds;
        for _ in 0..4 {
            quot = quot.exact_div(&lin).expect("factor divides");
        }
        assert!(quot.exact_div(&lin).is_none());
        let de = elliptic_eprime_in(&a, &b).disc();
        assert!(de.exact_div(&lin).is_none());
    }

    #[test]
    fn subresultant_agrees_with_sylvester_on_the_quartic() {
        let (_, [a, b]) = polyvars::<Rat, 2>(["a", "b"]);
        let f = f4_in(&a, &b);
        let r1 = crate::polyalg::uni::resultant(&f, &f.derivative()).unwrap();
        let r2 = sylvester_resultant(&f, &f.derivative()).unwrap();
        assert_eq!(r1, r2);
    }
}

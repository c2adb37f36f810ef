//! Executable ledger of the family's closed-form claims.
//!
//! Every claim is a registered check with a stable id. A check runs either
//! symbolically (exact identity in the parameter polynomial ring) or
//! sampled (exact evaluation at seeded random rational parameters away
//! from the degenerate loci). Each check also ships one deliberate
//! single-coefficient mutation of its inputs; a healthy registry fails
//! every mutated run, which guards against vacuous passes.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::groebner::{self, Ideal, Order};
use crate::igusa;
use crate::polyalg::multi::{polyvars, MultiPoly, VarSet};
use crate::polyalg::numfield::{FieldId, NfElem};
use crate::polyalg::ratfn::{self, RatFn};
use crate::polyalg::ring::Ring;
use crate::polyalg::uni::{discriminant, resultant, sylvester_resultant, UniPoly};
use crate::prymcurves as pc;
use crate::threefold as tf;
use crate::{QPoly, QUni, Rat};

/// How a suite run specializes the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Prove identities in the parameter polynomial rings.
    Symbolic,
    /// Evaluate at `n` seeded rational parameter points.
    Sampled { n: usize, seed: u64 },
}

impl Mode {
    fn label(&self) -> String {
        match self {
            Mode::Symbolic => "symbolic".into(),
            Mode::Sampled { n, seed } => format!("sampled(n={n},seed={seed})"),
        }
    }
}

/// Outcome of one check run.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub description: String,
    pub mode: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub millis: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

struct Outcome {
    pass: bool,
    witness: Option<String>,
    detail: Option<String>,
}

impl Outcome {
    fn ok() -> Self {
        Outcome { pass: true, witness: None, detail: None }
    }

    fn ok_with(detail: impl Into<String>) -> Self {
        Outcome { pass: true, witness: None, detail: Some(detail.into()) }
    }

    fn fail(witness: impl Into<String>) -> Self {
        Outcome { pass: false, witness: Some(witness.into()), detail: None }
    }

    fn from_bool(pass: bool, witness: impl Into<String>) -> Self {
        if pass {
            Outcome::ok()
        } else {
            Outcome::fail(witness)
        }
    }
}

struct Ctx {
    mode: Mode,
    mutated: bool,
    rng_seed: u64,
}

impl Ctx {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.rng_seed)
    }

    fn sample_count(&self, default_n: usize) -> usize {
        match self.mode {
            Mode::Symbolic => default_n,
            Mode::Sampled { n, .. } => n,
        }
    }
}

/// A registered claim.
pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    /// Whether the check has a genuinely symbolic form (the rest sample
    /// even in symbolic mode).
    pub symbolic: bool,
    run: fn(&Ctx) -> Outcome,
}

/// Draw a rational `p/q` with `p` in `[-20, 20]`, `q` in `[1, 8]`.
fn sample_rat(rng: &mut ChaCha8Rng) -> Rat {
    crate::ratq(rng.gen_range(-20..=20), rng.gen_range(1..=8))
}

/// Parameter pairs avoiding every degeneration locus the claims divide by:
/// `a`, `delta(a,b)`, `a+b-1`, `b-8`, `a+32`, `27a+64`.
pub fn sample_params(rng: &mut ChaCha8Rng) -> tf::StandardParams {
    loop {
        let a = sample_rat(rng);
        let b = sample_rat(rng);
        if a.is_zero() {
            continue;
        }
        let p = tf::StandardParams::new(a.clone(), b.clone());
        let bad = tf::delta2(&p).is_zero()
            || (&a + &b - Rat::one()).is_zero()
            || (&b - crate::rat(8)).is_zero()
            || (&a + crate::rat(32)).is_zero()
            || (&a * crate::rat(27) + crate::rat(64)).is_zero();
        if !bad {
            return p;
        }
    }
}

fn symbolic_ab() -> (QPoly, QPoly) {
    let (_, [a, b]) = polyvars::<Rat, 2>(["a", "b"]);
    (a, b)
}

/// Run an `(a, b)`-parameterized predicate either once symbolically or at
/// sampled specializations.
fn identity_over_ab(
    ctx: &Ctx,
    default_n: usize,
    check: impl Fn(&QPoly, &QPoly) -> Option<String> + Sync,
    sampled: impl Fn(&Rat, &Rat) -> Option<String> + Sync,
) -> Outcome {
    match ctx.mode {
        Mode::Symbolic => {
            let (a, b) = symbolic_ab();
            match check(&a, &b) {
                None => Outcome::ok(),
                Some(w) => Outcome::fail(w),
            }
        }
        Mode::Sampled { .. } => {
            let mut rng = ctx.rng();
            for _ in 0..ctx.sample_count(default_n) {
                let p = sample_params(&mut rng);
                if let Some(w) = sampled(&p.a, &p.b) {
                    return Outcome::fail(format!("at (a,b) = ({}, {}): {w}", p.a, p.b));
                }
            }
            Outcome::ok()
        }
    }
}

fn check_eq5_consistency(ctx: &Ctx) -> Outcome {
    let scale = if ctx.mutated { crate::ratq(1, 32) } else { crate::ratq(1, 64) };
    let verify = |a: &QPoly, b: &QPoly| -> Option<String> {
        let tuple: [QPoly; 7] = [
            a.clone(),
            b.clone(),
            QPoly::from_int(2),
            QPoly::from_int(2),
            QPoly::from_int(1),
            QPoly::from_int(2),
            QPoly::from_int(1),
        ];
        let lhs = tf::big_d7_in(&tuple).scale(&scale);
        let rhs = tf::big_d2_in(a, b);
        (lhs != rhs).then(|| format!("lhs - rhs = {}", lhs - rhs))
    };
    identity_over_ab(ctx, 10, &verify, |a, b| {
        verify(&QPoly::constant(a.clone()), &QPoly::constant(b.clone()))
    })
}

fn quintic_h_over(vs: &VarSet, a: &QPoly, b: &QPoly, mutated: bool) -> QPoly {
    let x = QPoly::var(vs, "x");
    let y = QPoly::var(vs, "y");
    let z = QPoly::var(vs, "z");
    let z5 = if mutated { -z.clone().pow(5) } else { z.clone().pow(5) };
    x.clone().pow(5)
        - (b.clone() + QPoly::from_int(2)) * x.clone().pow(2) * y.clone() * z.clone().pow(2)
        - (a.clone() - b.clone()) * x * y.clone().pow(3) * z
        + a.clone() * y.pow(5)
        + z5
}

fn check_tangency(ctx: &Ctx) -> Outcome {
    let mutated = ctx.mutated;
    identity_over_ab(
        ctx,
        10,
        |a, b| {
            let vs = VarSet::new(["x", "y", "z", "a", "b"]);
            let h = quintic_h_over(&vs, &a.embed(&vs), &b.embed(&vs), mutated);
            let y = QPoly::var(&vs, "y");
            let img = h.substitute(&vs, &[("x", y.clone() * y.clone()), ("z", QPoly::one())]);
            let expect = (y.pow(5) - QPoly::one()).pow(2);
            (img != expect).then(|| format!("difference = {}", img - expect))
        },
        |a, b| {
            let vs = VarSet::new(["x", "y", "z"]);
            let h = quintic_h_over(&vs, &QPoly::constant(a.clone()), &QPoly::constant(b.clone()), mutated);
            let y = QPoly::var(&vs, "y");
            let img = h.substitute(&vs, &[("x", y.clone() * y.clone()), ("z", QPoly::one())]);
            let expect = (y.pow(5) - QPoly::one()).pow(2);
            (img != expect).then(|| "tangency identity broken".to_string())
        },
    )
}

fn check_conic_double_line(ctx: &Ctx) -> Outcome {
    let uv_coeff = if ctx.mutated { 3 } else { 2 };
    let verify = |a: &QPoly, b: &QPoly, vs: &VarSet| -> Option<String> {
        let t = QPoly::var(vs, "t");
        let u = QPoly::var(vs, "u");
        let v = QPoly::var(vs, "v");
        // conic over (1:1:1)
        let kt = u.clone().pow(2)
            + (u.clone() * v.clone()).scale(&crate::rat(uv_coeff))
            + v.clone().pow(2)
            + (t.clone() * u.clone()).scale(&crate::rat(2))
            + (t.clone() * v.clone()).scale(&crate::rat(2))
            + t.clone().pow(2) * (a.clone() + b.clone());
        let mut names: Vec<String> = vs.names().to_vec();
        names.push("w".into());
        let wvars = VarSet::new(names);
        let w = QPoly::var(&wvars, "w");
        let img = kt.substitute(
            &wvars,
            &[("u", w.clone() - QPoly::var(&wvars, "v") - QPoly::var(&wvars, "t"))],
        );
        let expect = w.pow(2)
            + QPoly::var(&wvars, "t").pow(2)
                * (a.embed(&wvars) + b.embed(&wvars) - QPoly::one());
        (img != expect).then(|| format!("difference = {}", img - expect))
    };
    identity_over_ab(
        ctx,
        10,
        |a, b| {
            let vs = VarSet::new(["t", "u", "v", "a", "b"]);
            verify(&a.embed(&vs), &b.embed(&vs), &vs)
        },
        |a, b| {
            let vs = VarSet::new(["t", "u", "v"]);
            verify(
                &QPoly::constant_over(&vs, a.clone()),
                &QPoly::constant_over(&vs, b.clone()),
                &vs,
            )
        },
    )
}

fn check_d1_fermat(ctx: &Ctx) -> Outcome {
    let b = if ctx.mutated { crate::rat(2) } else { crate::rat(-2) };
    let p = tf::StandardParams::new(crate::rat(-2), b);
    let d1 = pc::discriminant_d1(&p);
    Outcome::from_bool(
        d1 == crate::rat(10000),
        format!("D1(-2,{}) = {} (expected 10000 = 2^4 5^4)", p.b, d1),
    )
}

fn check_quotient_f4(ctx: &Ctx) -> Outcome {
    let mutated = ctx.mutated;
    let verify = |a: &QPoly, b: &QPoly| -> Option<String> {
        let mut f4 = pc::f4_in(a, b);
        if mutated {
            // flip the sign of the t^3 coefficient
            let mut cs = f4.coeffs().to_vec();
            cs[3] = -cs[3].clone();
            f4 = UniPoly::from_coeffs("t", cs);
        }
        let bq = pc::quotient_b_in(a, b);
        let t_minus_1 = UniPoly::from_coeffs("t", vec![-QPoly::one(), QPoly::one()]);
        let lhs = (t_minus_1 * f4).scale(&QPoly::from_int(4));
        let rhs = UniPoly::monomial("t", 5, QPoly::from_int(4)) - bq.clone() * bq;
        (lhs != rhs).then(|| format!("difference = {}", lhs - rhs))
    };
    identity_over_ab(ctx, 10, &verify, |a, b| {
        verify(&QPoly::constant(a.clone()), &QPoly::constant(b.clone()))
    })
}

fn eprime_maybe_mutated(a: &QPoly, b: &QPoly, mutated: bool) -> pc::EllipticWeierstrass<QPoly> {
    let mut e = pc::elliptic_eprime_in(a, b);
    if mutated {
        // a4 = 4(a+b-1) -> 4(a+b+1)
        e.a4 = (a.clone() + b.clone() + QPoly::one()).scale(&crate::rat(4));
    }
    e
}

fn check_eprime_disc(ctx: &Ctx) -> Outcome {
    let mutated = ctx.mutated;
    let verify = |a: &QPoly, b: &QPoly| -> Option<String> {
        let e = eprime_maybe_mutated(a, b, mutated);
        let delta = tf::delta2_in(a, b);
        let expect = (a.clone().pow(5) * delta).scale(&crate::ratq(-1, 16));
        let got = e.disc();
        (got != expect).then(|| format!("disc(E'') - claim = {}", got - expect))
    };
    identity_over_ab(ctx, 10, &verify, |a, b| {
        verify(&QPoly::constant(a.clone()), &QPoly::constant(b.clone()))
    })
}

fn check_eprime_j(ctx: &Ctx) -> Outcome {
    let mutated = ctx.mutated;
    let verify = |a: &QPoly, b: &QPoly| -> Option<String> {
        let e = pc::elliptic_eprime_in(a, b);
        let (jn, jd) = e.j_parts(); // j = jn/jd
        let first = if mutated { 63 } else { 64 };
        let base = a.clone().pow(2).scale(&crate::rat(first))
            + (a.clone().pow(2) * b.clone()).scale(&crate::rat(4))
            + (a.clone() * b.clone().pow(2)).scale(&crate::rat(16))
            + a.clone().pow(2) * b.clone().pow(2)
            + (a.clone() * b.clone().pow(3)).scale(&crate::rat(2))
            + b.clone().pow(4);
        // j * a^5 delta = -16 base^3, cross-multiplied
        let a5d = a.clone().pow(5) * tf::delta2_in(a, b);
        let lhs = jn * a5d;
        let rhs = base.pow(3).scale(&crate::rat(-16)) * jd;
        (lhs != rhs).then(|| "j-invariant identity broken".to_string())
    };
    identity_over_ab(ctx, 6, &verify, |a, b| {
        verify(&QPoly::constant(a.clone()), &QPoly::constant(b.clone()))
    })
}

/// Divide `disc` by the expected locus factor, then count how many times
/// the quintic invariant divides the quotient; passes when the remainder
/// after all divisions is a nonzero constant. The measured constant and
/// exponent go into the detail string.
fn disc_ratio_outcome(
    disc: QPoly,
    locus: QPoly,
    a: &QPoly,
    b: &QPoly,
    expected_constant: Rat,
    expected_exponent: u32,
    quoted_exponent: u32,
) -> Outcome {
    let Some(mut q) = disc.exact_div(&locus) else {
        return Outcome::fail("stated locus factor does not divide the discriminant");
    };
    let delta = tf::delta2_in(a, b);
    let mut exp = 0u32;
    while let Some(next) = q.exact_div(&delta) {
        q = next;
        exp += 1;
    }
    match q.as_constant() {
        Some(c) if !c.is_zero() => {
            let pass = c == expected_constant && exp == expected_exponent;
            let note = if exp == quoted_exponent {
                "matches the expected normalization".to_string()
            } else {
                format!(
                    "measured delta-exponent {exp} differs from the classically quoted exponent {quoted_exponent}"
                )
            };
            Outcome {
                pass,
                witness: (!pass).then(|| format!("measured constant {c}, delta-exponent {exp}")),
                detail: Some(format!("constant = {c}, delta-exponent = {exp}; {note}")),
            }
        }
        _ => Outcome::fail(format!("non-constant cofactor {q} after removing delta^{exp}")),
    }
}

fn check_disc_ratio_sextic(ctx: &Ctx) -> Outcome {
    if let Mode::Sampled { .. } = ctx.mode {
        return sampled_disc_ratio(ctx, 20, |a, b| {
            let mut sextic = pc::dab_sextic_in(a, b);
            if ctx.mutated {
                let mut cs = sextic.coeffs().to_vec();
                cs[5] = &cs[5] + &Rat::one();
                sextic = UniPoly::from_coeffs("T1", cs);
            }
            let disc = discriminant(&sextic).expect("degree six");
            let claim = crate::rat(4096 * 3125)
                * (a + b - Rat::one()).pow(4)
                * tf::delta2_in(a, b).pow(2);
            disc == claim
        });
    }
    let (a, b) = symbolic_ab();
    let mut sextic = pc::dab_sextic_in(&a, &b);
    if ctx.mutated {
        let mut cs = sextic.coeffs().to_vec();
        cs[5] = b.clone().scale(&crate::rat(4)) + QPoly::from_int(9);
        sextic = UniPoly::from_coeffs("T1", cs);
    }
    let disc = discriminant(&sextic).expect("degree six");
    let locus = (a.clone() + b.clone() - QPoly::one()).pow(4);
    disc_ratio_outcome(disc, locus, &a, &b, crate::rat(4096 * 3125), 2, 1)
}

/// Sampled form of a disc-ratio claim: evaluate both sides exactly at
/// seeded parameter points.
fn sampled_disc_ratio(
    ctx: &Ctx,
    default_n: usize,
    holds_at: impl Fn(&Rat, &Rat) -> bool,
) -> Outcome {
    let mut rng = ctx.rng();
    for _ in 0..ctx.sample_count(default_n) {
        let p = sample_params(&mut rng);
        if !holds_at(&p.a, &p.b) {
            return Outcome::fail(format!("factorization fails at (a,b) = ({}, {})", p.a, p.b));
        }
    }
    Outcome::ok()
}

fn check_disc_ratio_bigonal(ctx: &Ctx) -> Outcome {
    if let Mode::Sampled { .. } = ctx.mode {
        return sampled_disc_ratio(ctx, 20, |a, b| {
            let mut f6 = pc::f6_in(a, b);
            if ctx.mutated {
                let mut cs = f6.coeffs().to_vec();
                cs[2] = &cs[2] + &Rat::one();
                f6 = UniPoly::from_coeffs("t", cs);
            }
            let curve = f6.scale(&-(b - &crate::rat(8)));
            let disc = discriminant(&curve).expect("degree six");
            let claim = crate::rat(64 * 3125)
                * (b - &crate::rat(8)).pow(22)
                * tf::delta2_in(a, b).pow(2);
            disc == claim
        });
    }
    let (a, b) = symbolic_ab();
    let mut f6 = pc::f6_in(&a, &b);
    if ctx.mutated {
        let mut cs = f6.coeffs().to_vec();
        cs[2] = (a.clone().scale(&crate::rat(3)) + b.clone().scale(&crate::rat(13)) - QPoly::from_int(7))
            .scale(&crate::rat(5));
        f6 = UniPoly::from_coeffs("t", cs);
    }
    let curve = f6.scale(&-(b.clone() - QPoly::from_int(8)));
    let disc = discriminant(&curve).expect("degree six");
    let locus = (b.clone() - QPoly::from_int(8)).pow(22);
    disc_ratio_outcome(disc, locus, &a, &b, crate::rat(64 * 3125), 2, 2)
}

fn check_disc_ratio_genus3(ctx: &Ctx) -> Outcome {
    if let Mode::Sampled { .. } = ctx.mode {
        return sampled_disc_ratio(ctx, 20, |a, b| {
            let mut f4 = pc::f4_in(a, b);
            if ctx.mutated {
                let mut cs = f4.coeffs().to_vec();
                cs[2] = -cs[2].clone();
                f4 = UniPoly::from_coeffs("t", cs);
            }
            let one_minus_w2 = UniPoly::from_coeffs("w", vec![Rat::one(), Rat::zero(), -Rat::one()]);
            let octic = f4.compose(&one_minus_w2);
            let disc = discriminant(&octic).expect("degree eight");
            let claim = crate::ratq(1, 256)
                * (Rat::one() - a - b)
                * a.clone().pow(10)
                * tf::delta2_in(a, b).pow(2);
            disc == claim
        });
    }
    let (a, b) = symbolic_ab();
    let mut f4 = pc::f4_in(&a, &b);
    if ctx.mutated {
        let mut cs = f4.coeffs().to_vec();
        cs[2] = -cs[2].clone();
        f4 = UniPoly::from_coeffs("t", cs);
    }
    let one_minus_w2 = UniPoly::from_coeffs("w", vec![QPoly::one(), QPoly::zero(), -QPoly::one()]);
    let octic = f4.compose(&one_minus_w2);
    let disc = discriminant(&octic).expect("degree eight");
    let locus = (QPoly::one() - a.clone() - b.clone()) * a.clone().pow(10);
    disc_ratio_outcome(disc, locus, &a, &b, crate::ratq(1, 256), 2, 1)
}

/// The bigonal construction identity, with the root labeling
/// `2 w w1 = -2 t (T1^2 + T1 - 1)` forced by the model with the stated f6:
/// `(b-8)^2 (5t^2-1)^2 W(t) + (b-8) f6(t) = 0` where
/// `W = 2 w w1 - q/p` after substituting `T1 = ((b+2)t^2 - 2)/(5t^2 - 1)`.
fn check_bigonal_identity(ctx: &Ctx) -> Outcome {
    let verify = |a: &QPoly, b: &QPoly| -> Option<String> {
        let t = UniPoly::<QPoly>::x("t");
        let num = t.clone().pow(2).scale(&(b.clone() + QPoly::from_int(2)))
            - UniPoly::constant("t", QPoly::from_int(2));
        let den = t.clone().pow(2).scale(&QPoly::from_int(5)) - UniPoly::constant("t", QPoly::one());
        // T1^2 + T1 - 1 = (num^2 + num den - den^2)/den^2
        let t1_quad = num.clone() * num.clone() + num.clone() * den.clone() - den.clone() * den.clone();
        // 5 T1^3 - 10 T1 + (a+b+4) = (5 num^3 - 10 num den^2 + (a+b+4) den^3)/den^3
        let q_num = num.clone().pow(3).scale(&QPoly::from_int(5))
            - (num.clone() * den.clone() * den.clone()).scale(&QPoly::from_int(10))
            + den.clone().pow(3).scale(&(a.clone() + b.clone() + QPoly::from_int(4)));
        // 5 T1 - (b+2) = (b-8)/den, so q/p = q_num * den / ((b-8) den^3)
        //                                  = q_num / ((b-8) den^2)
        let bm8 = b.clone() - QPoly::from_int(8);
        // (b-8)^2 den^2 W = -2 (b-8)^2 t (num^2+num den-den^2) - (b-8) q_num
        let sign = if ctx.mutated { 2 } else { -2 };
        let first = (t.clone() * t1_quad).scale(&(bm8.clone() * bm8.clone()).scale(&crate::rat(sign)));
        let second = q_num.scale(&bm8.clone());
        let lhs = first - second;
        let f6 = pc::f6_in(a, b);
        let total = lhs + f6.scale(&bm8);
        (!total.is_zero()).then(|| format!("residual degree {:?}", total.degree()))
    };
    identity_over_ab(ctx, 6, &verify, |a, b| {
        verify(&QPoly::constant(a.clone()), &QPoly::constant(b.clone()))
    })
}

fn check_b8_factorization(ctx: &Ctx) -> Outcome {
    let (_, [a]) = polyvars::<Rat, 1>(["a"]);
    let last = if ctx.mutated { 63 } else { 64 };
    let lhs = tf::big_d2_in(&a, &QPoly::from_int(8));
    let rhs = a.clone()
        * (a.clone() + QPoly::from_int(32)).pow(2)
        * (a.clone().scale(&crate::rat(27)) + QPoly::from_int(last));
    Outcome::from_bool(lhs == rhs, format!("difference = {}", lhs.clone() - rhs))
}

fn check_b8_disc_j(ctx: &Ctx) -> Outcome {
    type P = MultiPoly<NfElem>;
    let vs = VarSet::new(["a"]);
    let a = P::var(&vs, "a");
    let s5 = P::constant(NfElem::sqrt5());
    let quad_coeff = if ctx.mutated { -4 } else { -5 };
    let mut results = vec![];
    for sign in [pc::SignChoice::Plus, pc::SignChoice::Minus] {
        let flip = match sign {
            pc::SignChoice::Plus => s5.clone(),
            pc::SignChoice::Minus => -s5.clone(),
        };
        let c3 = a.clone() + P::from_int(32);
        let c2 = P::from_int(10) * (P::from_int(quad_coeff) + flip.clone());
        let c1 = -(P::from_int(10) * (P::from_int(-3) + flip.clone()));
        let c0 = P::from_int(-5) + P::from_int(2) * flip.clone();
        let cubic = UniPoly::from_coeffs("X", vec![c0, c1, c2, c3.clone()]);
        let disc = discriminant(&cubic).expect("cubic");
        let claim = P::from_int(-5)
            * (P::from_int(2) - flip.clone()).pow(2)
            * (a.clone() + P::from_int(32))
            * (a.clone().scale(&NfElem::int(27)) + P::from_int(64));
        if disc != claim {
            return Outcome::fail(format!("polynomial discriminant mismatch for {sign:?}"));
        }
        let (model, _) = pc::weierstrass_from_cubic(&cubic).expect("cubic");
        let (jn, jd) = model.j_parts();
        // j (a+32)^3 (27a+64) = 2^14 5^2 (3a-4)^3, cross-multiplied
        let lhs = jn.clone()
            * (a.clone() + P::from_int(32)).pow(3)
            * (a.clone().scale(&NfElem::int(27)) + P::from_int(64));
        let rhs = (a.clone().scale(&NfElem::int(3)) - P::from_int(4))
            .pow(3)
            .scale(&NfElem::int(16384 * 25))
            * jd.clone();
        if lhs != rhs {
            return Outcome::fail(format!("j identity mismatch for {sign:?}"));
        }
        results.push((jn, jd));
    }
    // j(C+) = j(C-)
    let (jpn, jpd) = &results[0];
    let (jmn, jmd) = &results[1];
    Outcome::from_bool(
        jpn.clone() * jmd.clone() == jmn.clone() * jpd.clone(),
        "the two j-invariants differ",
    )
}

fn check_b8_common_model(ctx: &Ctx) -> Outcome {
    // map identity in Q(s5)[a,X] for both signs
    if !ctx.mutated {
        if !pc::b8_common_model_map_identity(pc::SignChoice::Plus)
            || !pc::b8_common_model_map_identity(pc::SignChoice::Minus)
        {
            return Outcome::fail("change-of-model substitution identity broken");
        }
    } else {
        // mutation: x-map scaled by 1/9 instead of 1/10
        type P = MultiPoly<NfElem>;
        let vs = VarSet::new(["a", "X"]);
        let a = P::var(&vs, "a");
        let big_x = P::var(&vs, "X");
        let s5 = P::constant(NfElem::sqrt5());
        let x = (P::from_int(5) + s5.clone()) * big_x.clone() * P::from_rat(&crate::ratq(1, 9));
        let cubic = (a.clone() + P::from_int(32)) * big_x.clone().pow(3)
            + P::from_int(10) * (P::from_int(-5) + s5.clone()) * big_x.clone().pow(2)
            - P::from_int(10) * (P::from_int(-3) + s5.clone()) * big_x.clone()
            + (P::from_int(-5) + P::from_int(2) * s5.clone());
        let y2 = (P::from_int(5) + P::from_int(2) * s5) * P::from_rat(&crate::ratq(1, 25)) * cubic;
        let lhs = P::from_int(5) * y2
            - (P::from_int(5) * (a + P::from_int(32)) * x.clone().pow(3)
                - P::from_int(100) * x.clone().pow(2)
                + P::from_int(20) * x
                - P::one());
        if lhs.is_zero() {
            return Outcome::fail("mutated map unexpectedly satisfies the identity");
        }
        return Outcome::fail("mutated x-scaling breaks the change of model");
    }
    // the closed-form square roots live in the tower
    let i = NfElem::tower_i();
    let z = NfElem::zeta().promote(FieldId::Zeta5I);
    let s5t = NfElem::sqrt5().promote(FieldId::Zeta5I);
    let sp = NfElem::int(1) + NfElem::int(2) * z.pow(3) + NfElem::int(2) * z.pow(4);
    let sm = NfElem::int(1) + NfElem::int(2) * z.clone() + NfElem::int(2) * z.pow(3);
    let plus_ok = (i.clone() * sp).pow(2) == NfElem::int(5) + NfElem::int(2) * s5t.clone();
    let minus_ok = (-(i * sm)).pow(2) == NfElem::int(5) - NfElem::int(2) * s5t;
    if !(plus_ok && minus_ok) {
        return Outcome::fail("tower square-root expressions do not square correctly");
    }
    // sampled j agreement between the common model and the pair
    let mut rng = ctx.rng();
    for _ in 0..ctx.sample_count(5) {
        let p = sample_params(&mut rng);
        let a = p.a;
        let jc = pc::b8_common_model(&a).unwrap().j().unwrap();
        let jp = pc::b8_elliptic(&a, pc::SignChoice::Plus).unwrap().j().unwrap();
        if NfElem::from_rat(jc) != jp {
            return Outcome::fail(format!("j mismatch at a = {a}"));
        }
    }
    Outcome::ok_with("sqrt(5 ± 2 sqrt5) realized as ±i(1+2z^3+2z^4), -i(1+2z+2z^3)")
}

fn check_smoothness_certificate(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng();
    let n = ctx.sample_count(50);
    if ctx.mutated {
        // a singular member must never certify as empty
        let t = tf::SevenTuple::from_ints([0, 1, 1, 1, 1, 1, 1]);
        return match tf::smoothness_cross_check(&t) {
            Ok(true) => Outcome::fail("singular member certified as empty"),
            Ok(false) => Outcome::fail("mutation detected: singular member is not empty"),
            Err(e) => Outcome::fail(format!("groebner error: {e}")),
        };
    }
    let mut tested = 0;
    while tested < n {
        let t = tf::SevenTuple(std::array::from_fn(|_| crate::rat(rng.gen_range(-5..=5))));
        if tf::big_d7(&t).is_zero() {
            continue;
        }
        tested += 1;
        match tf::smoothness_cross_check(&t) {
            Ok(true) => {}
            Ok(false) => {
                return Outcome::fail(format!("smooth member not empty: {:?}", t.0.clone().map(|r| r.to_string())))
            }
            Err(e) => return Outcome::fail(format!("groebner error: {e}")),
        }
    }
    // vanishing axis witnesses
    for (idx, name, coords) in tf::SINGULAR_WITNESSES {
        let mut raw = [1i64; 7];
        raw[idx - 1] = 0;
        let t = tf::SevenTuple::from_ints(raw);
        let f = tf::build_f7(&t);
        let point: Vec<Rat> = coords.iter().map(|&c| crate::rat(c)).collect();
        for v in tf::f7_vars().names() {
            if !f.derivative(v).eval(&point).is_zero() {
                return Outcome::fail(format!("partial {v} does not vanish at {name}"));
            }
        }
    }
    // the certificate polynomial at the all-ones member
    let ones = tf::SevenTuple::from_ints([1; 7]);
    let gb = groebner::groebner_basis(&tf::jacobian_ideal(&ones));
    let vs = tf::f7_vars();
    let x0 = QPoly::var(&vs, "x0");
    let cert = x0.pow(6).scale(&tf::delta7(&ones));
    if !gb.contains(&cert) {
        return Outcome::fail("certificate polynomial not in the Jacobian ideal at the all-ones member");
    }
    Outcome::ok_with(format!("{tested} seeded members certified empty"))
}

fn check_d5_action(ctx: &Ctx) -> Outcome {
    let (alpha, iota) = if ctx.mutated {
        // corrupt: give the middle coordinate weight one
        let z = NfElem::zeta();
        let mut alpha = tf::Mat5::identity();
        for (i, &e) in [2u32, 3, 1, 1, 4].iter().enumerate() {
            alpha.0[i][i] = z.pow(e);
        }
        (alpha, tf::d5_generators().1)
    } else {
        tf::d5_generators()
    };
    if alpha.pow(5) != tf::Mat5::identity() {
        return Outcome::fail("alpha^5 != 1");
    }
    if iota.pow(2) != tf::Mat5::identity() {
        return Outcome::fail("iota^2 != 1");
    }
    if iota.mul(&alpha).mul(&iota) != alpha.pow(4) {
        return Outcome::fail("iota alpha iota^-1 != alpha^-1");
    }
    let f = tf::fab_symbolic_cyclotomic();
    if alpha.act_on(&f) != f {
        return Outcome::fail("standard form not fixed by the order-five generator");
    }
    if iota.act_on(&f) != f {
        return Outcome::fail("standard form not fixed by the involution");
    }
    if tf::d5_group_order() != 10 {
        return Outcome::fail("generated matrix group does not have order ten");
    }
    Outcome::ok()
}

fn check_igusa_oracle(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng();
    let n = ctx.sample_count(100);
    let mut done = 0;
    while done < n {
        let f = QUni::from_ints("x", &std::array::from_fn::<i64, 7, _>(|_| rng.gen_range(-9..=9)));
        if f.degree() != Some(6) {
            continue;
        }
        let d = discriminant(&f).unwrap();
        if d.is_zero() {
            continue;
        }
        done += 1;
        let mut exact = igusa::igusa_clebsch(&f).unwrap();
        if ctx.mutated {
            exact.i2 = exact.i2 * crate::rat(2);
        }
        if exact.i10 != d {
            return Outcome::fail(format!("I10 != disc for {f}"));
        }
        let num = igusa::igusa_numeric_oracle(&f).unwrap();
        let err = igusa::oracle_relative_error(&exact, &num);
        if err > 1e-8 {
            return Outcome::fail(format!("relative error {err} for {f}"));
        }
    }
    // GL2 covariance on 20 maps
    let mut maps = 0;
    while maps < 20 {
        let f = QUni::from_ints("x", &std::array::from_fn::<i64, 7, _>(|_| rng.gen_range(-9..=9)));
        if f.degree() != Some(6) {
            continue;
        }
        let m: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-3..=3));
        let det = m[0] * m[3] - m[1] * m[2];
        if det == 0 {
            continue;
        }
        let g = igusa::moebius_sextic(&f, m).unwrap();
        if g.degree() != Some(6) {
            continue;
        }
        maps += 1;
        let fi = igusa::igusa_clebsch(&f).unwrap();
        let gi = igusa::igusa_clebsch(&g).unwrap();
        let dr = crate::rat(det);
        if gi.i2 != fi.i2 * dr.clone().pow(6)
            || gi.i4 != fi.i4 * dr.clone().pow(12)
            || gi.i6 != fi.i6 * dr.clone().pow(18)
            || gi.i10 != fi.i10 * dr.clone().pow(30)
        {
            return Outcome::fail(format!("covariance broken for det {det}"));
        }
    }
    Outcome::ok_with(format!("{done} sextics within 1e-8; 20 covariance maps exact"))
}

fn check_humbert(ctx: &Ctx) -> Outcome {
    let lead = if ctx.mutated { 13 } else { 12 };
    let eval = |z: [i64; 6], m: usize| -> Rat {
        let v = igusa::HumbertVector::new(z.map(crate::rat), m).unwrap();
        // recompute with a corruptible leading coefficient
        let tau2: Rat = v.z.iter().map(|x| x * x).sum();
        let tau4: Rat = v.z.iter().map(|x| &(x * x) * &(x * x)).sum();
        let zm = &v.z[v.m - 1];
        let zm2 = zm * zm;
        crate::rat(lead) * &(&zm2 * &zm2) - crate::rat(4) * &(&tau2 * &zm2) + &tau2 * &tau2
            - crate::rat(4) * tau4
    };
    for (z, m) in [
        ([0, 0, 0, 0, 0, 0], 1),
        ([1, -1, 1, -1, 1, -1], 4),
        ([2, -2, 1, -1, 1, -1], 1),
    ] {
        let h = eval(z, m);
        if !h.is_zero() {
            return Outcome::fail(format!("H_{m}{z:?} = {h}"));
        }
    }
    if igusa::HumbertVector::new([crate::rat(1), crate::rat(0), crate::rat(0), crate::rat(0), crate::rat(0), crate::rat(0)], 1).is_ok() {
        return Outcome::fail("constraint violation accepted");
    }
    Outcome::ok()
}

fn check_cdab_elimination(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng();
    let n = match ctx.mode {
        Mode::Symbolic => 3,
        Mode::Sampled { n, .. } => n.min(5).max(1),
    };
    let mut pts: Vec<tf::StandardParams> = vec![tf::StandardParams::from_ints(1, 1)];
    while pts.len() < n {
        pts.push(sample_params(&mut rng));
    }
    for p in pts {
        let vs = VarSet::new(["x", "z", "T1", "w"]);
        let x = QPoly::var(&vs, "x");
        let z = QPoly::var(&vs, "z");
        let t1 = QPoly::var(&vs, "T1");
        let w = QPoly::var(&vs, "w");
        // H(x, 1, z)
        let h = x.clone().pow(5)
            - x.clone().pow(2) * z.clone().pow(2) * QPoly::constant(p.b.clone() + crate::rat(2))
            - x.clone() * z.clone() * QPoly::constant(p.a.clone() - p.b.clone())
            + QPoly::constant(p.a.clone())
            + z.clone().pow(5);
        let cover = w.clone() * w.clone() - QPoly::one() + x.clone() * z.clone();
        let graph = t1.clone() - x.clone() - z.clone();
        let ideal = Ideal::new(&vs, vec![h, cover, graph], Order::Block(2));
        let elim = groebner::eliminate(&ideal, &["x", "z"]);
        if elim.gens.len() != 1 {
            return Outcome::fail(format!(
                "elimination ideal at ({}, {}) has {} generators",
                p.a,
                p.b,
                elim.gens.len()
            ));
        }
        // expected: the dehomogenized plane quintic, up to scalar
        let shift = if ctx.mutated { crate::rat(5) } else { crate::rat(4) };
        let evars = elim.vars.clone();
        let t1e = QPoly::var(&evars, "T1");
        let we = QPoly::var(&evars, "w");
        let r = (t1e.clone() - QPoly::from_int(2))
            * (t1e.clone() * t1e.clone() + t1e.clone() - QPoly::one()).pow(2);
        let q = t1e.clone().pow(3).scale(&crate::rat(5)) - t1e.clone().scale(&crate::rat(10))
            + QPoly::constant_over(&evars, &p.a + &p.b + shift);
        let pp = t1e.scale(&crate::rat(5)) - QPoly::constant_over(&evars, &p.b + crate::rat(2));
        let expect = r + q * we.clone().pow(2) + pp * we.pow(4);
        let got = elim.gens[0].content_primitive().1;
        let want = expect.content_primitive().1;
        if got != want && got != -want.clone() {
            return Outcome::fail(format!("eliminant differs from the plane quintic at ({}, {})", p.a, p.b));
        }
    }
    Outcome::ok()
}

fn check_sextic_chain(ctx: &Ctx) -> Outcome {
    let verify = |a: &QPoly, b: &QPoly| -> Option<String> {
        let (r, mut q, pp) = pc::dab_quadratic_in(a, b);
        if ctx.mutated {
            let mut cs = q.coeffs().to_vec();
            cs[1] = QPoly::from_int(-11);
            q = UniPoly::from_coeffs("T1", cs);
        }
        let chained = q.clone() * q - (pp * r).scale(&QPoly::from_int(4));
        let sextic = pc::dab_sextic_in(a, b);
        (chained != sextic).then(|| format!("difference = {}", chained - sextic))
    };
    identity_over_ab(ctx, 10, &verify, |a, b| {
        verify(&QPoly::constant(a.clone()), &QPoly::constant(b.clone()))
    })
}

fn check_quintic_det(ctx: &Ctx) -> Outcome {
    let vs = VarSet::new(["x", "y", "z", "a", "b"]);
    let h = pc::quintic_h_symbolic().embed(&vs);
    let mut det = pc::conic_det_symbolic().embed(&vs);
    if ctx.mutated {
        // corrupt one off-diagonal entry: scale the determinant's xy-term path
        det = det + QPoly::var(&vs, "x") * QPoly::var(&vs, "y").pow(4);
    }
    Outcome {
        pass: (det.clone() + h).is_zero(),
        witness: (!(det + pc::quintic_h_symbolic().embed(&vs)).is_zero())
            .then(|| "determinant does not equal minus the quintic".to_string()),
        detail: Some("det of the conic matrix = -H exactly".into()),
    }
}

fn check_quotient_invariants(ctx: &Ctx) -> Outcome {
    // substitute S -> (x/y)^5, T -> xz/y^2 into S^2 - B(T) S + T^5 and
    // compare with (x/y)^5 * H / y^5 as rational functions
    let vs = VarSet::new(["S", "T", "a", "b"]);
    let s = QPoly::var(&vs, "S");
    let t = QPoly::var(&vs, "T");
    let a = QPoly::var(&vs, "a");
    let b = QPoly::var(&vs, "b");
    let tpow = if ctx.mutated { 4 } else { 5 };
    let model = s.clone() * s.clone()
        - ((b.clone() + QPoly::from_int(2)) * t.clone() * t.clone()
            + (a.clone() - b.clone()) * t.clone()
            - a.clone())
            * s
        + t.pow(tpow);
    let target = VarSet::new(["x", "y", "z", "a", "b"]);
    let x = QPoly::var(&target, "x");
    let y = QPoly::var(&target, "y");
    let z = QPoly::var(&target, "z");
    let s_img = RatFn::new(x.clone().pow(5), y.clone().pow(5)).unwrap();
    let t_img = RatFn::new(x.clone() * z.clone(), y.clone() * y.clone()).unwrap();
    let lhs = ratfn::substitute(&model, &target, &[("S", s_img), ("T", t_img)]) .unwrap();
    let h = pc::quintic_h_symbolic().embed(&target);
    let rhs = RatFn::new(h * x.pow(5), y.pow(10)).unwrap();
    Outcome::from_bool(lhs == rhs, "multiplying the quotient model out does not recover the quintic")
}

fn check_zeta_sqrt5(ctx: &Ctx) -> Outcome {
    let z = NfElem::zeta();
    let two = if ctx.mutated { 1 } else { 2 };
    let s_plus = NfElem::int(1) + NfElem::int(two) * z.pow(3) + NfElem::int(2) * z.pow(4);
    let sqrt5 = NfElem::int(1) + NfElem::int(2) * z.clone() + NfElem::int(2) * z.pow(4);
    if sqrt5.clone() * sqrt5.clone() != NfElem::int(5) {
        return Outcome::fail("chosen representative does not square to five");
    }
    if NfElem::sqrt5().promote(FieldId::Zeta5) != sqrt5 {
        return Outcome::fail("embedding of sqrt5 disagrees with the chosen representative");
    }
    let lhs = s_plus.clone() * s_plus;
    let rhs = -(NfElem::int(5) + NfElem::int(2) * sqrt5);
    Outcome::from_bool(lhs == rhs, "(1 + 2 z5^3 + 2 z5^4)^2 != -5 - 2 sqrt5")
}

fn check_genus_degrees(ctx: &Ctx) -> Outcome {
    let p = tf::StandardParams::from_ints(1, 1);
    let expected_hbar_genus = if ctx.mutated { 3 } else { 2 };
    let hbar = pc::genus2_hbar(&p).unwrap();
    if hbar.genus != expected_hbar_genus || hbar.f.degree() != Some(5) {
        return Outcome::fail(format!("degree-five quotient has genus {}", hbar.genus));
    }
    let cover = pc::genus3_cover(&p).unwrap();
    if cover.genus != 3 || cover.f.degree() != Some(8) {
        return Outcome::fail("octic cover bookkeeping broken");
    }
    let c = pc::bigonal_c(&p).unwrap();
    if c.genus != 2 || c.f.degree() != Some(6) {
        return Outcome::fail("bigonal curve bookkeeping broken");
    }
    let d = pc::genus2_dab(&p).unwrap();
    if d.genus != 2 || d.f.degree() != Some(6) {
        return Outcome::fail("quotient sextic bookkeeping broken");
    }
    Outcome::ok_with(
        "asserted constants: quintic H has genus 6 when smooth, its double cover genus 11, \
         the intermediate quotient genus 4 (plane models only)",
    )
}

fn check_eprime_degeneration(ctx: &Ctx) -> Outcome {
    let (a, b) = symbolic_ab();
    let lin = a.clone() + b.clone() - QPoly::one();
    let mut sextic = pc::dab_sextic_in(&a, &b);
    if ctx.mutated {
        let mut cs = sextic.coeffs().to_vec();
        cs[3] = (a.clone() + b.clone()).scale(&crate::rat(10));
        sextic = UniPoly::from_coeffs("T1", cs);
    }
    let ds = discriminant(&sextic).expect("degree six");
    let mut q = ds;
    for i in 0..4 {
        match q.exact_div(&lin) {
            Some(next) => q = next,
            None => return Outcome::fail(format!("(a+b-1)^{} does not divide the sextic disc", i + 1)),
        }
    }
    if q.exact_div(&lin).is_some() {
        return Outcome::fail("(a+b-1)^5 divides the sextic disc");
    }
    let de = pc::elliptic_eprime_in(&a, &b).disc();
    Outcome::from_bool(
        de.exact_div(&lin).is_none(),
        "(a+b-1) divides disc(E''), the degeneration factor failed to disappear",
    )
}

fn check_resultant_oracle(ctx: &Ctx) -> Outcome {
    // subresultant PRS against the Sylvester determinant, on the family's
    // own parametric polynomials and on random rational pairs
    let (a, b) = symbolic_ab();
    let f4 = pc::f4_in(&a, &b);
    let fd = if ctx.mutated { f4.derivative().scale(&QPoly::from_int(2)) } else { f4.derivative() };
    let r1 = resultant(&f4, &fd).unwrap();
    let r2 = sylvester_resultant(&f4, &f4.derivative()).unwrap();
    if r1 != r2 {
        return Outcome::fail("PRS and Sylvester disagree on the quotient quartic");
    }
    let mut rng = ctx.rng();
    for _ in 0..ctx.sample_count(20) {
        let fc: Vec<Rat> = (0..=4).map(|_| sample_rat(&mut rng)).collect();
        let gc: Vec<Rat> = (0..=3).map(|_| sample_rat(&mut rng)).collect();
        let f = QUni::from_coeffs("x", fc);
        let g = QUni::from_coeffs("x", gc);
        if f.is_zero() && g.is_zero() {
            continue;
        }
        let r1 = resultant(&f, &g).unwrap();
        let r2 = sylvester_resultant(&f, &g).unwrap();
        if r1 != r2 {
            return Outcome::fail(format!("disagreement on f = {f}, g = {g}"));
        }
    }
    Outcome::ok()
}

macro_rules! checks {
    ($(($id:literal, $desc:literal, $sym:literal, $f:ident)),+ $(,)?) => {
        &[$(Check { id: $id, description: $desc, symbolic: $sym, run: $f }),+]
    };
}

/// The fixed check registry, in id order.
pub fn registry() -> &'static [Check] {
    checks![
        (
            "b8_common_model",
            "Galois-case change of model: substitution identity, tower square roots, shared j",
            true,
            check_b8_common_model
        ),
        (
            "b8_disc_j",
            "Galois-case cubics: closed-form discriminants and the shared j-invariant identity",
            true,
            check_b8_disc_j
        ),
        (
            "b8_factorization",
            "D(a,8) = a (a+32)^2 (27a+64)",
            true,
            check_b8_factorization
        ),
        (
            "bigonal_identity",
            "bigonal construction: (b-8)^2 (5t^2-1)^2 W(t) + (b-8) f6(t) = 0",
            true,
            check_bigonal_identity
        ),
        (
            "cdab_elimination",
            "eliminating the cover variables reproduces the plane quintic of the quotient",
            false,
            check_cdab_elimination
        ),
        (
            "conic_double_line",
            "the conic over (1:1:1) completes to w^2 + (a+b-1) t^2",
            true,
            check_conic_double_line
        ),
        (
            "d1_fermat_value",
            "D1(-2,-2) = 10000",
            true,
            check_d1_fermat
        ),
        (
            "d5_action",
            "dihedral generators: relations, invariance of the standard form, order ten",
            true,
            check_d5_action
        ),
        (
            "disc_ratio_bigonal",
            "disc(-(b-8) f6) = 2^6 5^5 (b-8)^22 delta^2",
            true,
            check_disc_ratio_bigonal
        ),
        (
            "disc_ratio_genus3",
            "disc(f4(1-w^2)) = 2^-8 (1-a-b) a^10 delta^2",
            true,
            check_disc_ratio_genus3
        ),
        (
            "disc_ratio_sextic",
            "disc of the quotient sextic = 2^12 5^5 (a+b-1)^4 delta^2",
            true,
            check_disc_ratio_sextic
        ),
        (
            "eprime_degeneration",
            "(a+b-1)^4 exactly divides the sextic disc and never divides disc(E'')",
            true,
            check_eprime_degeneration
        ),
        (
            "eprime_disc",
            "disc(E'') = -2^-4 a^5 delta(a,b)",
            true,
            check_eprime_disc
        ),
        (
            "eprime_j",
            "j(E'') a^5 delta = -16 (64a^2 + 4a^2 b + 16ab^2 + a^2 b^2 + 2ab^3 + b^4)^3",
            true,
            check_eprime_j
        ),
        (
            "eq5_consistency",
            "(1/64) D(a,b,2,2,1,2,1) = a delta(a,b)",
            true,
            check_eq5_consistency
        ),
        (
            "genus_degrees",
            "degree and genus bookkeeping across the curve tower",
            true,
            check_genus_degrees
        ),
        (
            "humbert_vanishing",
            "the Humbert quartic vanishes on the example vectors and enforces its constraints",
            true,
            check_humbert
        ),
        (
            "igusa_oracle",
            "exact invariants vs the numeric root-difference oracle, I10 = disc, GL2 covariance",
            false,
            check_igusa_oracle
        ),
        (
            "quintic_det",
            "the conic-matrix determinant equals minus the degeneration quintic",
            true,
            check_quintic_det
        ),
        (
            "quotient_f4_identity",
            "4 (t-1) f4(t) = 4 t^5 - B(t)^2",
            true,
            check_quotient_f4
        ),
        (
            "quotient_invariants",
            "the invariant functions rewrite the quintic as s^2 - B(t) s + t^5",
            true,
            check_quotient_invariants
        ),
        (
            "resultant_oracle",
            "subresultant PRS agrees with the Sylvester determinant",
            true,
            check_resultant_oracle
        ),
        (
            "sextic_chain",
            "the substitution chain turns the plane quintic into the quotient sextic",
            true,
            check_sextic_chain
        ),
        (
            "smoothness_certificate",
            "seeded smooth members certify projectively empty Jacobian ideals; axis witnesses vanish",
            false,
            check_smoothness_certificate
        ),
        (
            "tangency_quintic",
            "H(y^2, y, 1) = (y^5 - 1)^2",
            true,
            check_tangency
        ),
        (
            "zeta_sqrt5",
            "(1 + 2 z5^3 + 2 z5^4)^2 = -5 - 2 sqrt5 for the chosen sqrt5 representative",
            true,
            check_zeta_sqrt5
        ),
    ]
}

fn run_one(check: &Check, mode: Mode, mutated: bool) -> CheckResult {
    let seed = match mode {
        Mode::Symbolic => 0,
        Mode::Sampled { seed, .. } => seed,
    };
    let ctx = Ctx {
        mode,
        mutated,
        rng_seed: seed ^ stable_hash(check.id),
    };
    let start = std::time::Instant::now();
    let out = (check.run)(&ctx);
    let millis = start.elapsed().as_millis();
    let mode_label = match mode {
        Mode::Symbolic if check.symbolic => "symbolic".to_string(),
        Mode::Symbolic => format!("sampled(n=default,seed={})", ctx.rng_seed),
        m => m.label(),
    };
    CheckResult {
        check_id: check.id.to_string(),
        description: check.description.to_string(),
        mode: mode_label,
        status: if out.pass { "pass" } else { "fail" }.to_string(),
        witness: out.witness,
        detail: out.detail,
        millis,
    }
}

fn stable_hash(s: &str) -> u64 {
    // FNV-1a, stable across runs and platforms
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Run the registry (or a selection) in the given mode; results come back
/// in id order regardless of scheduling.
pub fn run_suite(mode: Mode, only: Option<&[String]>) -> Vec<CheckResult> {
    let selected: Vec<&Check> = registry()
        .iter()
        .filter(|c| only.map(|ids| ids.iter().any(|i| i == c.id)).unwrap_or(true))
        .collect();
    let mut results: Vec<CheckResult> = selected
        .par_iter()
        .map(|c| run_one(c, mode, false))
        .collect();
    results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    results
}

/// Run one check with its shipped single-coefficient mutation; a healthy
/// check fails here.
pub fn run_mutated(id: &str, mode: Mode) -> Option<CheckResult> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .map(|c| run_one(c, mode, true))
}

/// Ids of every registered check.
pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

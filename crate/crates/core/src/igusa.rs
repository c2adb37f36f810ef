//! Igusa–Clebsch invariants of binary quintics and sextics, exact and
//! numeric, plus the Humbert quartic evaluator.
//!
//! The four invariants are defined by the classical symmetric
//! root-difference sums (weights 2, 4, 6, 10):
//!
//! ```text
//! I2  = a^2  sum over the 15 pairings          (12)^2 (34)^2 (56)^2
//! I4  = a^4  sum over the 10 triple splits     (123)^2 (456)^2
//! I6  = a^6  sum over the 60 split+bijections  (123)^2 (456)^2 (14)^2 (25)^2 (36)^2
//! I10 = a^10 prod of all squared differences   (the discriminant)
//! ```
//!
//! with `(ij) = r_i - r_j` and `(ijk)^2 = (ij)^2 (jk)^2 (ki)^2`. The exact
//! route reduces these symmetric sums to universal polynomials in the
//! coefficients once (Gauss's algorithm over the elementary symmetric
//! polynomials) and then just evaluates; the numeric oracle recomputes
//! them from companion-matrix roots and must agree to `1e-8` relative.

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

use crate::polyalg::multi::{Mono, VarSet};
use crate::polyalg::uni::discriminant;
use crate::{Error, QPoly, QUni, Rat, Result};

/// The four invariants, exact.
#[derive(Clone, Debug, PartialEq)]
pub struct IgusaInvariants {
    pub i2: Rat,
    pub i4: Rat,
    pub i6: Rat,
    pub i10: Rat,
}

impl IgusaInvariants {
    pub fn to_json(&self) -> serde_json::Value {
        let abs = absolute_invariants(self).ok();
        serde_json::json!({
            "I2": self.i2.to_string(),
            "I4": self.i4.to_string(),
            "I6": self.i6.to_string(),
            "I10": self.i10.to_string(),
            "absolute": abs.map(|[a, b, c]| vec![a.to_string(), b.to_string(), c.to_string()]),
        })
    }
}

const NVARS: usize = 6;

fn root_vars() -> VarSet {
    VarSet::new(["r1", "r2", "r3", "r4", "r5", "r6"])
}

fn diff_squared(vs: &VarSet, i: usize, j: usize) -> QPoly {
    let d = QPoly::var(vs, vs.names()[i].as_str()) - QPoly::var(vs, vs.names()[j].as_str());
    d.clone() * d
}

/// The fifteen pairings of six labels into three pairs.
fn pairings() -> Vec<[(usize, usize); 3]> {
    fn rec(rem: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<[(usize, usize); 3]>) {
        if rem.is_empty() {
            out.push([acc[0], acc[1], acc[2]]);
            return;
        }
        let first = rem[0];
        for k in 1..rem.len() {
            let second = rem[k];
            let rest: Vec<usize> = rem[1..].iter().copied().filter(|&x| x != second).collect();
            acc.push((first, second));
            rec(&rest, acc, out);
            acc.pop();
        }
    }
    let items: Vec<usize> = (0..6).collect();
    let mut out = vec![];
    rec(&items, &mut vec![], &mut out);
    out
}

/// The ten unordered partitions of six labels into two triples.
fn triple_splits() -> Vec<([usize; 3], [usize; 3])> {
    let mut out = vec![];
    for j in 1..6 {
        for kk in j + 1..6 {
            let a = [0, j, kk];
            let b: Vec<usize> = (1..6).filter(|&x| x != j && x != kk).collect();
            out.push((a, [b[0], b[1], b[2]]));
        }
    }
    out
}

fn triangle(vs: &VarSet, t: &[usize; 3]) -> QPoly {
    diff_squared(vs, t[0], t[1]) * diff_squared(vs, t[1], t[2]) * diff_squared(vs, t[2], t[0])
}

/// Write a symmetric polynomial in the six roots as a polynomial in the
/// elementary symmetric functions; returns `(exponents of e1..e6, coeff)`.
fn symmetric_reduce(mut p: QPoly) -> Vec<(Vec<u32>, Rat)> {
    let vs = p.vars().clone();
    let elems: Vec<QPoly> = (1..=NVARS).map(|k| elementary(&vs, k)).collect();
    let mut out = vec![];
    while let Some((lm, lc)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let lam = &lm.0;
        debug_assert!(
            lam.windows(2).all(|w| w[0] >= w[1]),
            "leading monomial of a symmetric polynomial must be a partition"
        );
        let mut exps = vec![0u32; NVARS];
        for j in 0..NVARS {
            let next = if j + 1 < NVARS { lam[j + 1] } else { 0 };
            exps[j] = lam[j] - next;
        }
        let mut prod = QPoly::constant_over(&vs, lc.clone());
        for (j, &e) in exps.iter().enumerate() {
            if e > 0 {
                prod = prod * elems[j].pow(e);
            }
        }
        p = p - prod;
        out.push((exps, lc));
    }
    out
}

fn elementary(vs: &VarSet, k: usize) -> QPoly {
    fn combos(start: usize, k: usize, acc: &mut Vec<usize>, sink: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            sink.push(acc.clone());
            return;
        }
        for i in start..NVARS {
            acc.push(i);
            combos(i + 1, k, acc, sink);
            acc.pop();
        }
    }
    let mut sink = vec![];
    combos(0, k, &mut vec![], &mut sink);
    let mut out = QPoly::zero_over(vs);
    for c in sink {
        let mut e = vec![0u32; NVARS];
        for i in c {
            e[i] = 1;
        }
        out.add_term(Mono(e), Rat::one());
    }
    out
}

/// Frozen universal coefficient polynomials for `I2, I4, I6` over the
/// variables `c0..c6` of `f = c0 + c1 x + ... + c6 x^6`, as
/// `(exponent vector, coefficient)` tables. Derived once by
/// [`derive_universal`], which stays in the crate as the oracle the tests
/// replay.
const I2_TABLE: [([u32; 7], i64); 4] = [
    ([1, 0, 0, 0, 0, 0, 1], -240),
    ([0, 1, 0, 0, 0, 1, 0], 40),
    ([0, 0, 1, 0, 1, 0, 0], -16),
    ([0, 0, 0, 2, 0, 0, 0], 6),
];

const I4_TABLE: [([u32; 7], i64); 16] = [
    ([2, 0, 0, 0, 0, 0, 2], 1620),
    ([1, 1, 0, 0, 0, 1, 1], -540),
    ([1, 0, 1, 0, 1, 0, 1], -504),
    ([0, 2, 0, 0, 1, 0, 1], 300),
    ([1, 0, 0, 2, 0, 0, 1], 324),
    ([0, 1, 1, 1, 0, 0, 1], -180),
    ([0, 0, 3, 0, 0, 0, 1], 48),
    ([1, 0, 1, 0, 0, 2, 0], 300),
    ([0, 2, 0, 0, 0, 2, 0], -80),
    ([1, 0, 0, 1, 1, 1, 0], -180),
    ([0, 1, 1, 0, 1, 1, 0], 4),
    ([0, 1, 0, 2, 0, 1, 0], 36),
    ([0, 0, 2, 1, 0, 1, 0], -12),
    ([1, 0, 0, 0, 3, 0, 0], 48),
    ([0, 1, 0, 1, 2, 0, 0], -12),
    ([0, 0, 2, 0, 2, 0, 0], 4),
];

const I6_TABLE: [([u32; 7], i64); 56] = [
    ([3, 0, 0, 0, 0, 0, 3], -119880),
    ([2, 1, 0, 0, 0, 1, 2], 59940),
    ([2, 0, 1, 0, 1, 0, 2], 20664),
    ([1, 2, 0, 0, 1, 0, 2], -18600),
    ([2, 0, 0, 2, 0, 0, 2], -10044),
    ([1, 1, 1, 1, 0, 0, 2], 3060),
    ([0, 3, 0, 1, 0, 0, 2], 2250),
    ([1, 0, 3, 0, 0, 0, 2], -96),
    ([0, 2, 2, 0, 0, 0, 2], -900),
    ([2, 0, 1, 0, 0, 2, 1], -18600),
    ([1, 2, 0, 0, 0, 2, 1], -2240),
    ([2, 0, 0, 1, 1, 1, 1], 3060),
    ([1, 1, 1, 0, 1, 1, 1], 3472),
    ([0, 3, 0, 0, 1, 1, 1], 1600),
    ([1, 1, 0, 2, 0, 1, 1], 1818),
    ([1, 0, 2, 1, 0, 1, 1], -876),
    ([0, 2, 1, 1, 0, 1, 1], -1860),
    ([0, 1, 3, 0, 0, 1, 1], 616),
    ([2, 0, 0, 0, 3, 0, 1], -96),
    ([1, 1, 0, 1, 2, 0, 1], -876),
    ([1, 0, 2, 0, 2, 0, 1], 424),
    ([0, 2, 1, 0, 2, 0, 1], -640),
    ([1, 0, 1, 2, 1, 0, 1], -468),
    ([0, 2, 0, 2, 1, 0, 1], 330),
    ([0, 1, 2, 1, 1, 0, 1], 492),
    ([0, 0, 4, 0, 1, 0, 1], -160),
    ([1, 0, 0, 4, 0, 0, 1], 162),
    ([0, 1, 1, 3, 0, 0, 1], -198),
    ([0, 0, 3, 2, 0, 0, 1], 60),
    ([2, 0, 0, 1, 0, 3, 0], 2250),
    ([1, 1, 1, 0, 0, 3, 0], 1600),
    ([0, 3, 0, 0, 0, 3, 0], -320),
    ([2, 0, 0, 0, 2, 2, 0], -900),
    ([1, 1, 0, 1, 1, 2, 0], -1860),
    ([1, 0, 2, 0, 1, 2, 0], -640),
    ([0, 2, 1, 0, 1, 2, 0], 64),
    ([1, 0, 1, 2, 0, 2, 0], 330),
    ([0, 2, 0, 2, 0, 2, 0], 176),
    ([0, 1, 2, 1, 0, 2, 0], 26),
    ([0, 0, 4, 0, 0, 2, 0], -36),
    ([1, 1, 0, 0, 3, 1, 0], 616),
    ([1, 0, 1, 1, 2, 1, 0], 492),
    ([0, 2, 0, 1, 2, 1, 0], 26),
    ([0, 1, 2, 0, 2, 1, 0], 28),
    ([1, 0, 0, 3, 1, 1, 0], -198),
    ([0, 1, 1, 2, 1, 1, 0], -238),
    ([0, 0, 3, 1, 1, 1, 0], 76),
    ([0, 1, 0, 4, 0, 1, 0], 72),
    ([0, 0, 2, 3, 0, 1, 0], -24),
    ([1, 0, 1, 0, 4, 0, 0], -160),
    ([0, 2, 0, 0, 4, 0, 0], -36),
    ([1, 0, 0, 2, 3, 0, 0], 60),
    ([0, 1, 1, 1, 3, 0, 0], 76),
    ([0, 0, 3, 0, 3, 0, 0], -24),
    ([0, 1, 0, 3, 2, 0, 0], -24),
    ([0, 0, 2, 2, 2, 0, 0], 8),
];

fn table_poly(table: &[([u32; 7], i64)]) -> QPoly {
    let cs = coeff_vars();
    QPoly::from_terms(
        &cs,
        table.iter().map(|(e, c)| (Mono(e.to_vec()), crate::rat(*c))),
    )
}

fn universal() -> &'static [QPoly; 3] {
    static CELL: OnceLock<[QPoly; 3]> = OnceLock::new();
    CELL.get_or_init(|| [table_poly(&I2_TABLE), table_poly(&I4_TABLE), table_poly(&I6_TABLE)])
}

/// Re-derive the universal polynomials from the root-difference sums by
/// symmetric reduction; the tables above must reproduce this exactly.
pub fn derive_universal() -> [QPoly; 3] {
    {
        let vs = root_vars();
        let i2 = pairings()
            .into_iter()
            .map(|p| {
                p.iter()
                    .map(|&(i, j)| diff_squared(&vs, i, j))
                    .fold(QPoly::one(), |a, b| a * b)
            })
            .fold(QPoly::zero_over(&vs), |a, b| a + b);
        let splits = triple_splits();
        let i4 = splits
            .iter()
            .map(|(a, b)| triangle(&vs, a) * triangle(&vs, b))
            .fold(QPoly::zero_over(&vs), |acc, t| acc + t);
        let mut i6 = QPoly::zero_over(&vs);
        for (a, b) in &splits {
            for perm in permutations3(b) {
                let link = diff_squared(&vs, a[0], perm[0])
                    * diff_squared(&vs, a[1], perm[1])
                    * diff_squared(&vs, a[2], perm[2]);
                i6 = i6 + triangle(&vs, a) * triangle(&vs, &perm) * link;
            }
        }
        [
            to_coefficient_poly(symmetric_reduce(i2), 2),
            to_coefficient_poly(symmetric_reduce(i4), 4),
            to_coefficient_poly(symmetric_reduce(i6), 6),
        ]
    }
}

fn permutations3(b: &[usize; 3]) -> Vec<[usize; 3]> {
    let [x, y, z] = *b;
    vec![[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]]
}

fn coeff_vars() -> VarSet {
    VarSet::new(["c0", "c1", "c2", "c3", "c4", "c5", "c6"])
}

/// Translate the symmetric-function expansion into a polynomial in the
/// sextic's coefficients: `e_j = (-1)^j c_{6-j} / c6`, cleared by the
/// correct power of `c6` (`d` is the degree in the coefficients).
fn to_coefficient_poly(expansion: Vec<(Vec<u32>, Rat)>, d: u32) -> QPoly {
    let cs = coeff_vars();
    let mut out = QPoly::zero_over(&cs);
    for (m, coef) in expansion {
        let total: u32 = m.iter().sum();
        debug_assert!(total <= d);
        let mut exps = vec![0u32; 7];
        exps[6] = d - total;
        let mut sign = false;
        for (jm1, &e) in m.iter().enumerate() {
            let j = jm1 + 1;
            exps[6 - j] += e;
            if j % 2 == 1 && e % 2 == 1 {
                sign = !sign;
            }
        }
        out.add_term(Mono(exps), if sign { -coef } else { coef });
    }
    out
}

fn coefficient_vector(f: &QUni) -> Result<Vec<Rat>> {
    let deg = f.degree().ok_or(Error::DegreeOutOfRange(0, 5, 6))?;
    if !(5..=6).contains(&deg) {
        return Err(Error::DegreeOutOfRange(deg, 5, 6));
    }
    Ok((0..=6).map(|i| f.coeff(i)).collect())
}

/// Exact Igusa–Clebsch invariants; degree five inputs are the sextics with
/// a root at infinity, and `I10` is the polynomial discriminant in either
/// case.
pub fn igusa_clebsch(f: &QUni) -> Result<IgusaInvariants> {
    let cs = coefficient_vector(f)?;
    let u = universal();
    Ok(IgusaInvariants {
        i2: u[0].eval(&cs),
        i4: u[1].eval(&cs),
        i6: u[2].eval(&cs),
        i10: discriminant(f)?,
    })
}

/// Weight-zero ratios `(I2^5, I2^3 I4, I2^2 I6) / I10`.
pub fn absolute_invariants(inv: &IgusaInvariants) -> Result<[Rat; 3]> {
    if inv.i10.is_zero() {
        return Err(Error::SingularSextic);
    }
    Ok([
        inv.i2.clone().pow(5) / &inv.i10,
        inv.i2.clone().pow(3) * &inv.i4 / &inv.i10,
        inv.i2.clone().pow(2) * &inv.i6 / &inv.i10,
    ])
}

/// All complex roots of a rational polynomial: companion-matrix
/// eigenvalues refined by Newton steps.
pub fn complex_roots(f: &QUni) -> Result<Vec<Complex64>> {
    let n = f
        .degree()
        .filter(|&n| n >= 1)
        .ok_or(Error::RootFinding("constant input".into()))?;
    let lead = f.lc().unwrap();
    let monic: Vec<f64> = (0..n).map(|i| rat_to_f64(&(f.coeff(i) / lead))).collect();
    let mut m = nalgebra::DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for (i, c) in monic.iter().enumerate() {
        m[(i, n - 1)] = -c;
    }
    let eig = m.complex_eigenvalues();
    let fc: Vec<Complex64> = (0..=n)
        .map(|i| Complex64::new(rat_to_f64(&f.coeff(i)), 0.0))
        .collect();
    let dfc: Vec<Complex64> = (1..=n)
        .map(|i| Complex64::new(i as f64 * rat_to_f64(&f.coeff(i)), 0.0))
        .collect();
    let horner = |cs: &[Complex64], z: Complex64| {
        cs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let mut roots = Vec::with_capacity(n);
    for &e in eig.iter() {
        let mut z = Complex64::new(e.re, e.im);
        for _ in 0..4 {
            let d = horner(&dfc, z);
            if d.norm() < 1e-300 {
                break;
            }
            z -= horner(&fc, z) / d;
        }
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::RootFinding("non-finite eigenvalue refinement".into()));
        }
        roots.push(z);
    }
    Ok(roots)
}

fn rat_to_f64(r: &Rat) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Floating Igusa–Clebsch invariants from the root-difference sums; the
/// independent check on the exact route. Requires a squarefree sextic.
pub fn igusa_numeric_oracle(f: &QUni) -> Result<[f64; 4]> {
    if f.degree() != Some(6) {
        return Err(Error::DegreeOutOfRange(f.degree().unwrap_or(0), 6, 6));
    }
    if discriminant(f)?.is_zero() {
        return Err(Error::SingularSextic);
    }
    let r = complex_roots(f)?;
    let a0 = rat_to_f64(f.lc().unwrap());
    let d = |i: usize, j: usize| r[i] - r[j];
    let sq = |z: Complex64| z * z;
    let mut i2 = Complex64::new(0.0, 0.0);
    for p in pairings() {
        i2 += p.iter().map(|&(i, j)| sq(d(i, j))).product::<Complex64>();
    }
    let tri = |t: &[usize; 3]| sq(d(t[0], t[1])) * sq(d(t[1], t[2])) * sq(d(t[2], t[0]));
    let splits = triple_splits();
    let mut i4 = Complex64::new(0.0, 0.0);
    for (a, b) in &splits {
        i4 += tri(a) * tri(b);
    }
    let mut i6 = Complex64::new(0.0, 0.0);
    for (a, b) in &splits {
        for perm in permutations3(b) {
            i6 += tri(a)
                * tri(&perm)
                * sq(d(a[0], perm[0]))
                * sq(d(a[1], perm[1]))
                * sq(d(a[2], perm[2]));
        }
    }
    let mut i10 = Complex64::new(1.0, 0.0);
    for i in 0..6 {
        for j in i + 1..6 {
            i10 *= sq(d(i, j));
        }
    }
    Ok([
        a0.powi(2) * i2.re,
        a0.powi(4) * i4.re,
        a0.powi(6) * i6.re,
        a0.powi(10) * i10.re,
    ])
}

/// Largest relative disagreement between the exact and numeric invariants.
pub fn oracle_relative_error(exact: &IgusaInvariants, num: &[f64; 4]) -> f64 {
    let ex = [&exact.i2, &exact.i4, &exact.i6, &exact.i10].map(rat_to_f64);
    ex.iter()
        .zip(num)
        .map(|(e, n)| {
            let scale = e.abs().max(n.abs()).max(1.0);
            (e - n).abs() / scale
        })
        .fold(0.0, f64::max)
}

/// The sextic `(cx+d)^6 f((ax+b)/(cx+d))`; the binary substitution the
/// covariance law refers to.
pub fn moebius_sextic(f: &QUni, m: [i64; 4]) -> Result<QUni> {
    let cs = coefficient_vector(f)?;
    let [a, b, c, d] = m.map(crate::rat);
    let var = f.var();
    let lin1 = QUni::from_coeffs(var, vec![b, a]);
    let lin2 = QUni::from_coeffs(var, vec![d, c]);
    let mut out = QUni::zero_poly(var);
    for (i, ci) in cs.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        out = out + (lin1.pow(i as u32) * lin2.pow(6 - i as u32)).scale(ci);
    }
    Ok(out)
}

/// Six coordinates on the Segre cubic with a distinguished index.
#[derive(Clone, Debug, PartialEq)]
pub struct HumbertVector {
    pub z: [Rat; 6],
    /// 1-based index of the distinguished coordinate.
    pub m: usize,
}

impl HumbertVector {
    pub fn new(z: [Rat; 6], m: usize) -> Result<Self> {
        if !(1..=6).contains(&m) {
            return Err(Error::HumbertConstraint("index out of range"));
        }
        let sum: Rat = z.iter().sum();
        if !sum.is_zero() {
            return Err(Error::HumbertConstraint("sum of coordinates must vanish"));
        }
        let sum3: Rat = z.iter().map(|v| v * v * v).sum();
        if !sum3.is_zero() {
            return Err(Error::HumbertConstraint("sum of cubes must vanish"));
        }
        Ok(HumbertVector { z, m })
    }
}

/// `H_m(z) = 12 z_m^4 - 4 tau2 z_m^2 + tau2^2 - 4 tau4`.
pub fn humbert_h(v: &HumbertVector) -> Rat {
    let tau2: Rat = v.z.iter().map(|z| z * z).sum();
    let tau4: Rat = v.z.iter().map(|z| &(z * z) * &(z * z)).sum();
    let zm = &v.z[v.m - 1];
    let zm2 = zm * zm;
    crate::rat(12) * &(&zm2 * &zm2) - crate::rat(4) * &(&tau2 * &zm2) + &tau2 * &tau2
        - crate::rat(4) * tau4
}

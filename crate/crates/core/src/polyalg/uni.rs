//! Dense univariate polynomials, resultants and discriminants.
//!
//! The resultant runs the fraction-free subresultant remainder sequence,
//! which keeps coefficient growth polynomial even when the scalar is itself
//! a polynomial ring such as `Q[a,b]`. A Bareiss determinant of the
//! Sylvester matrix is kept alongside as an independent oracle.

use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::multi::{MultiPoly, VarSet};
use super::ring::Ring;
use crate::{Error, Rat, Result};

/// Dense univariate polynomial, coefficients stored low to high with a
/// nonzero leading coefficient (the zero polynomial stores nothing).
#[derive(Clone, Debug)]
pub struct UniPoly<K: Ring> {
    var: String,
    coeffs: Vec<K>,
}

impl<K: Ring> UniPoly<K> {
    pub fn from_coeffs(var: &str, mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { var: var.to_string(), coeffs }
    }

    pub fn from_ints(var: &str, ints: &[i64]) -> Self {
        Self::from_coeffs(var, ints.iter().map(|&n| K::from_int(n)).collect())
    }

    pub fn zero_poly(var: &str) -> Self {
        UniPoly { var: var.to_string(), coeffs: vec![] }
    }

    pub fn constant(var: &str, c: K) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    pub fn x(var: &str) -> Self {
        Self::from_coeffs(var, vec![K::zero(), K::one()])
    }

    /// `c * var^e`.
    pub fn monomial(var: &str, e: usize, c: K) -> Self {
        let mut v = vec![K::zero(); e + 1];
        v[e] = c;
        Self::from_coeffs(var, v)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lc(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero_poly(&self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * K::from_int(i as i64))
            .collect();
        Self::from_coeffs(&self.var, coeffs)
    }

    pub fn map_coeffs<L: Ring>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::from_coeffs(&self.var, self.coeffs.iter().map(f).collect())
    }

    /// Composition `self(g)`; the result lives in `g`'s variable.
    pub fn compose(&self, g: &UniPoly<K>) -> UniPoly<K> {
        let mut acc = UniPoly::zero_poly(g.var());
        for c in self.coeffs.iter().rev() {
            acc = acc * g.clone() + UniPoly::constant(g.var(), c.clone());
        }
        acc
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Self::from_coeffs(&self.var, coeffs)
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::from_coeffs(&self.var, self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.var, K::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base.clone();
            e >>= 1;
        }
        acc
    }

    /// View as a sparse multivariate polynomial in the single variable.
    pub fn to_multi(&self) -> MultiPoly<K> {
        let vs = VarSet::new([self.var.clone()]);
        MultiPoly::from_terms(
            &vs,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (super::multi::Mono(vec![i as u32]), c.clone())),
        )
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.var == b.var {
            (a.clone(), b.clone())
        } else if a.is_constant() {
            (
                UniPoly { var: b.var.clone(), coeffs: a.coeffs.clone() },
                b.clone(),
            )
        } else if b.is_constant() {
            (
                a.clone(),
                UniPoly { var: a.var.clone(), coeffs: b.coeffs.clone() },
            )
        } else {
            panic!("univariate variables differ: {} vs {}", a.var, b.var)
        }
    }
}

impl UniPoly<Rat> {
    /// Positive rational content and integer primitive part.
    pub fn content_primitive(&self) -> (Rat, UniPoly<Rat>) {
        use num::Integer;
        if self.coeffs.is_empty() {
            return (Rat::zero(), self.clone());
        }
        let mut num_gcd = num::BigInt::from(0);
        let mut den_lcm = num::BigInt::from(1);
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rat::new(num_gcd, den_lcm);
        (content.clone(), self.map_coeffs(|c| c / &content))
    }
}

impl<K: Ring> PartialEq for UniPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<K: Ring> Neg for UniPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        UniPoly { var: self.var, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<K: Ring> Add for UniPoly<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = Self::unify(&self, &rhs);
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n).map(|i| a.coeff(i) + b.coeff(i)).collect();
        Self::from_coeffs(&a.var, coeffs)
    }
}

impl<K: Ring> Sub for UniPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ring> Mul for UniPoly<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = Self::unify(&self, &rhs);
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return Self::zero_poly(&a.var);
        }
        let mut out = vec![K::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    out[i + j] = out[i + j].clone() + ca.clone() * cb.clone();
                }
            }
        }
        Self::from_coeffs(&a.var, out)
    }
}

impl<K: Ring> Zero for UniPoly<K> {
    fn zero() -> Self {
        Self::zero_poly("x")
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<K: Ring> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = c.coeff_parts();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = c.is_display_one() || (-c.clone()).is_display_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit_coeff => write!(f, "{}", self.var)?,
                1 => write!(f, "{mag}*{}", self.var)?,
                _ if unit_coeff => write!(f, "{}^{}", self.var, i)?,
                _ => write!(f, "{mag}*{}^{}", self.var, i)?,
            }
        }
        Ok(())
    }
}

/// Pseudo-remainder: the remainder of `lc(b)^(deg a - deg b + 1) * a` under
/// division by `b`. Requires `deg a >= deg b`, `b` nonzero.
fn pseudo_rem<K: Ring>(a: &UniPoly<K>, b: &UniPoly<K>) -> UniPoly<K> {
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    let d = b.lc().unwrap().clone();
    let mut e = (da - db + 1) as i64;
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.lc().unwrap().clone();
        let shifted = UniPoly::monomial(&r.var.clone(), dr - db, lr) * b.clone();
        r = r.scale(&d) - shifted;
        e -= 1;
    }
    let mut extra = K::one();
    for _ in 0..e {
        extra = extra * d.clone();
    }
    r.scale(&extra)
}

fn pow_ring<K: Ring>(base: &K, e: usize) -> K {
    let mut acc = K::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

/// Resultant via the fraction-free subresultant remainder sequence.
///
/// `Res(f, g) = 0` exactly when `f` and `g` share a root over the algebraic
/// closure; for constants the empty-Sylvester convention gives
/// `Res(f, c) = c^deg(f)`.
pub fn resultant<K: Ring>(f: &UniPoly<K>, g: &UniPoly<K>) -> Result<K> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    // zero input behaves as the constant 0
    if f.is_zero() {
        return Ok(if g.is_constant() { K::one() } else { K::zero() });
    }
    if g.is_zero() {
        return Ok(if f.is_constant() { K::one() } else { K::zero() });
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign_neg = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign_neg = !sign_neg;
        }
    }
    if b.is_constant() {
        let r = pow_ring(b.lc().unwrap(), a.degree().unwrap());
        return Ok(if sign_neg { -r } else { r });
    }
    let mut g_acc = K::one();
    let mut h_acc = K::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = g_acc.clone() * pow_ring(&h_acc, delta);
        b = r.map_coeffs(|c| {
            c.exact_div(&divisor)
                .expect("subresultant sequence division must be exact")
        });
        g_acc = a.lc().unwrap().clone();
        h_acc = if delta == 0 {
            h_acc
        } else {
            pow_ring(&g_acc, delta)
                .exact_div(&pow_ring(&h_acc, delta - 1))
                .expect("subresultant h update must be exact")
        };
        if b.is_zero() {
            return Ok(K::zero());
        }
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let res = pow_ring(b.lc().unwrap(), da)
                .exact_div(&pow_ring(&h_acc, da.saturating_sub(1)))
                .expect("final subresultant division must be exact");
            return Ok(if sign_neg { -res } else { res });
        }
    }
}

/// Bareiss fraction-free determinant. Exact over any integral domain.
pub fn bareiss_det<K: Ring>(mut m: Vec<Vec<K>>) -> K {
    let n = m.len();
    if n == 0 {
        return K::one();
    }
    let mut sign_neg = false;
    let mut prev = K::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_neg = !sign_neg;
                }
                None => return K::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = t.exact_div(&prev).expect("Bareiss division must be exact");
            }
            m[i][k] = K::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_neg {
        -d
    } else {
        d
    }
}

/// Resultant as the Bareiss determinant of the Sylvester matrix; the
/// independent cross-check oracle.
pub fn sylvester_resultant<K: Ring>(f: &UniPoly<K>, g: &UniPoly<K>) -> Result<K> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    let n = f.degree().unwrap_or(0);
    let m = g.degree().unwrap_or(0);
    if n + m == 0 {
        return Ok(K::one());
    }
    let size = n + m;
    let mut mat = vec![vec![K::zero(); size]; size];
    for row in 0..m {
        for (k, c) in f.coeffs.iter().enumerate() {
            mat[row][row + n - k] = c.clone();
        }
    }
    for row in 0..n {
        for (k, c) in g.coeffs.iter().enumerate() {
            mat[m + row][row + m - k] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant<K: Ring>(f: &UniPoly<K>) -> Result<K> {
    let n = f.degree().filter(|&n| n >= 1).ok_or(Error::ConstantDiscriminant)?;
    let res = resultant(f, &f.derivative())?;
    let d = res
        .exact_div(f.lc().unwrap())
        .ok_or(Error::InexactDivision)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, QPoly, QUni, Rat};
    use num_traits::One;
    use rand::{Rng, SeedableRng};

    #[test]
    fn resultant_small_examples() {
        // (x^2 - 1, x - 2) -> 3, by the 2x2 Sylvester determinant
        let f = QUni::from_ints("x", &[-1, 0, 1]);
        let g = QUni::from_ints("x", &[-2, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), rat(3));
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), rat(3));

        // (x - a, x - b) -> a - b over Q[a,b]
        let (vs, [a, b]) = crate::polyalg::multi::polyvars::<Rat, 2>(["a", "b"]);
        let xa = UniPoly::from_coeffs("x", vec![-a.clone(), QPoly::one()]);
        let xb = UniPoly::from_coeffs("x", vec![-b.clone(), QPoly::one()]);
        assert_eq!(resultant(&xa, &xb).unwrap(), a.clone() - b.clone());
        let _ = vs;

        // (f, 1) -> 1
        let one = QUni::from_ints("x", &[1]);
        assert_eq!(resultant(&f, &one).unwrap(), rat(1));
    }

    #[test]
    fn resultant_matches_root_product_formula() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let nf = rng.gen_range(1..=4);
            let ng = rng.gen_range(1..=4);
            let lf = rat(rng.gen_range(1..=3));
            let lg = rat(rng.gen_range(1..=3));
            let alphas: Vec<Rat> = (0..nf).map(|_| rat(rng.gen_range(-4..=4))).collect();
            let betas: Vec<Rat> = (0..ng).map(|_| rat(rng.gen_range(-4..=4))).collect();
            let poly = |lead: &Rat, roots: &[Rat]| {
                let mut p = QUni::constant("x", lead.clone());
                for r in roots {
                    p = p * QUni::from_coeffs("x", vec![-r.clone(), Rat::one()]);
                }
                p
            };
            let f = poly(&lf, &alphas);
            let g = poly(&lg, &betas);
            let mut expect = num::pow::pow(lf.clone(), ng) * num::pow::pow(lg.clone(), nf);
            for a in &alphas {
                for b in &betas {
                    expect = expect * (a - b);
                }
            }
            let got = resultant(&f, &g).unwrap();
            assert_eq!(got, expect);
            assert_eq!(sylvester_resultant(&f, &g).unwrap(), expect);
        }
    }

    #[test]
    fn resultant_antisymmetry_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let nf = rng.gen_range(1..=5);
            let ng = rng.gen_range(1..=5);
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, n: usize| loop {
                let coeffs: Vec<Rat> = (0..=n).map(|_| rat(rng.gen_range(-5..=5))).collect();
                let p = QUni::from_coeffs("x", coeffs);
                if p.degree() == Some(n) {
                    return p;
                }
            };
            let f = rand_poly(&mut rng, nf);
            let g = rand_poly(&mut rng, ng);
            let rfg = resultant(&f, &g).unwrap();
            let rgf = resultant(&g, &f).unwrap();
            let expect = if (nf * ng) % 2 == 1 { -rgf.clone() } else { rgf.clone() };
            assert_eq!(rfg, expect);
        }
    }

    #[test]
    fn discriminant_textbook_values() {
        // x^2 + bx + c -> b^2 - 4c over Q[b,c]
        let (_, [b, c]) = crate::polyalg::multi::polyvars::<Rat, 2>(["b", "c"]);
        let f = UniPoly::from_coeffs("x", vec![c.clone(), b.clone(), QPoly::one()]);
        let d = discriminant(&f).unwrap();
        assert_eq!(d, b.clone() * b.clone() - QPoly::from_int(4) * c.clone());

        // x^3 + px + q -> -4p^3 - 27q^2
        let (_, [p, q]) = crate::polyalg::multi::polyvars::<Rat, 2>(["p", "q"]);
        let f = UniPoly::from_coeffs("x", vec![q.clone(), p.clone(), QPoly::zero(), QPoly::one()]);
        let d = discriminant(&f).unwrap();
        let expect = QPoly::from_int(-4) * p.clone().pow(3) - QPoly::from_int(27) * q.clone() * q.clone();
        assert_eq!(d, expect);

        // (x-1)^2 (x+1) -> 0
        let f = QUni::from_ints("x", &[1, -1, -1, 1]);
        assert_eq!(discriminant(&f).unwrap(), rat(0));

        // constant -> error
        let c = QUni::from_ints("x", &[7]);
        assert!(matches!(discriminant(&c), Err(Error::ConstantDiscriminant)));
    }

    #[test]
    fn disc_product_rule_randomized() {
        // disc(fg) = disc(f) disc(g) Res(f,g)^2 for coprime f, g
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut done = 0;
        while done < 20 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, n: usize| {
                let mut coeffs: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-4..=4))).collect();
                coeffs.push(rat(rng.gen_range(1..=3)));
                QUni::from_coeffs("x", coeffs)
            };
            let df = rng.gen_range(1..=3);
            let dg = rng.gen_range(1..=3);
            let f = rand_poly(&mut rng, df);
            let g = rand_poly(&mut rng, dg);
            let r = resultant(&f, &g).unwrap();
            if r.is_zero() {
                continue;
            }
            let df = discriminant(&f).unwrap();
            let dg = discriminant(&g).unwrap();
            if df.is_zero() || dg.is_zero() {
                continue;
            }
            let dfg = discriminant(&(f.clone() * g.clone())).unwrap();
            assert_eq!(dfg, df * dg * r.clone() * r);
            done += 1;
        }
    }

    #[test]
    fn subresultant_matches_sylvester_on_parametric_coefficients() {
        // degree <= 4 cross-check over Q[a,b]
        let (_, [a, b]) = crate::polyalg::multi::polyvars::<Rat, 2>(["a", "b"]);
        let one = QPoly::one();
        let f = UniPoly::from_coeffs(
            "t",
            vec![a.clone(), b.clone(), a.clone() * b.clone(), one.clone() + a.clone(), one.clone()],
        );
        let g = UniPoly::from_coeffs("t", vec![b.clone() - a.clone(), one.clone(), a.clone()]);
        let r1 = resultant(&f, &g).unwrap();
        let r2 = sylvester_resultant(&f, &g).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn compose_and_reflect() {
        // f = t^2 + 1 composed with g = 1 - w^2 gives w^4 - 2w^2 + 2
        let f = QUni::from_ints("t", &[1, 0, 1]);
        let g = QUni::from_ints("w", &[1, 0, -1]);
        assert_eq!(f.compose(&g), QUni::from_ints("w", &[2, 0, -2, 0, 1]));
        let h = QUni::from_ints("t", &[1, 2, 3]);
        assert_eq!(h.reflect(), QUni::from_ints("t", &[1, -2, 3]));
    }

    #[test]
    fn display_parenthesizes_composite_coefficients() {
        let (_, [b]) = crate::polyalg::multi::polyvars::<Rat, 1>(["b"]);
        let c = b.clone() + QPoly::from_int(2);
        let p = UniPoly::from_coeffs("t", vec![QPoly::zero(), QPoly::zero(), -c, QPoly::zero(), QPoly::zero(), QPoly::one()]);
        assert_eq!(p.to_string(), "t^5 - (b + 2)*t^2");
    }
}

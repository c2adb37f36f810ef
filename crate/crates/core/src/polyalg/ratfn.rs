//! Rational functions with polynomial numerator and denominator.
//!
//! No polynomial gcd is attempted (factorization over number fields is out
//! of scope); fractions are reduced by rational content only and compared
//! by cross-multiplication, which is all the identity checks need.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::multi::{MultiPoly, VarSet};
use super::ring::Ring;
use crate::{Error, Rat, Result};

/// `num/den` with `den != 0`.
#[derive(Clone, Debug)]
pub struct RatFn<K: Ring> {
    pub num: MultiPoly<K>,
    pub den: MultiPoly<K>,
}

impl<K: Ring> RatFn<K> {
    pub fn new(num: MultiPoly<K>, den: MultiPoly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFn { num, den })
    }

    pub fn from_poly(p: MultiPoly<K>) -> Self {
        RatFn { num: p, den: MultiPoly::one() }
    }

    pub fn is_zero_fn(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the fraction is a polynomial with `den = 1`-style exact
    /// divisibility.
    pub fn to_poly(&self) -> Option<MultiPoly<K>> {
        self.num.exact_div(&self.den)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFn { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

impl RatFn<Rat> {
    /// Divide numerator and denominator by rational content; the reduced
    /// denominator has integer coprime coefficients and positive leading
    /// coefficient.
    pub fn normalized(&self) -> Self {
        if self.num.is_zero() {
            return RatFn { num: MultiPoly::zero(), den: MultiPoly::one() };
        }
        let (cn, pn) = self.num.content_primitive();
        let (cd, pd) = self.den.content_primitive();
        let scalar = cn / cd;
        RatFn { num: pn.scale(&scalar), den: pd }
    }
}

impl<K: Ring> PartialEq for RatFn<K> {
    fn eq(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }
}

impl<K: Ring> Neg for RatFn<K> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFn { num: -self.num, den: self.den }
    }
}

impl<K: Ring> Add for RatFn<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        RatFn {
            num: self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone(),
            den: self.den * rhs.den,
        }
    }
}

impl<K: Ring> Sub for RatFn<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ring> Mul for RatFn<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        RatFn { num: self.num * rhs.num, den: self.den * rhs.den }
    }
}

impl<K: Ring> Div for RatFn<K> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.num.is_zero(), "division by the zero rational function");
        RatFn { num: self.num * rhs.den, den: self.den * rhs.num }
    }
}

impl<K: Ring> fmt::Display for RatFn<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Content reduction hook: scalars that support it divide numerator and
/// denominator by their common rational content.
pub trait ContentReduce: Ring + Sized {
    fn reduce_fraction(num: MultiPoly<Self>, den: MultiPoly<Self>) -> (MultiPoly<Self>, MultiPoly<Self>) {
        (num, den)
    }
}

impl ContentReduce for Rat {
    fn reduce_fraction(num: MultiPoly<Rat>, den: MultiPoly<Rat>) -> (MultiPoly<Rat>, MultiPoly<Rat>) {
        let r = RatFn { num, den }.normalized();
        (r.num, r.den)
    }
}

impl ContentReduce for crate::polyalg::numfield::NfElem {}
impl<K: ContentReduce> ContentReduce for MultiPoly<K> {}

/// Substitute rational functions for variables of a polynomial. Every
/// variable must be bound or present in `target`; the result is reduced
/// by rational content. Errors if a binding has an identically zero
/// denominator.
pub fn substitute<K: Ring + ContentReduce>(
    f: &MultiPoly<K>,
    target: &VarSet,
    bind: &[(&str, RatFn<K>)],
) -> Result<RatFn<K>> {
    for (v, rf) in bind {
        if rf.den.is_zero() {
            return Err(Error::ZeroDenominator(v.to_string()));
        }
    }
    let images: Vec<RatFn<K>> = f
        .vars()
        .names()
        .iter()
        .map(|name| {
            bind.iter()
                .find(|(v, _)| v == name)
                .map(|(_, rf)| rf.clone())
                .unwrap_or_else(|| RatFn::from_poly(MultiPoly::var(target, name)))
        })
        .collect();
    let mut acc = RatFn::from_poly(MultiPoly::<K>::zero_over(target));
    for (m, c) in f.terms() {
        let mut t = RatFn::from_poly(MultiPoly::constant_over(target, c.clone()));
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t * images[i].pow(e);
            }
        }
        acc = acc + t;
    }
    let (num, den) = K::reduce_fraction(acc.num, acc.den);
    Ok(RatFn { num, den })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::multi::polyvars;
    use crate::{QPoly, Rat};

    #[test]
    fn substitute_square_of_shifted_inverse() {
        // f = x^2 under x -> (t+1)/t gives (t+1)^2 / t^2
        let (_, [x]) = polyvars::<Rat, 1>(["x"]);
        let f = x.clone() * x.clone();
        let (tv, [t]) = polyvars::<Rat, 1>(["t"]);
        let bind = RatFn::new(t.clone() + QPoly::one(), t.clone()).unwrap();
        let img = substitute(&f, &tv, &[("x", bind)]).unwrap();
        let expect = RatFn::new((t.clone() + QPoly::one()).pow(2), t.clone() * t.clone()).unwrap();
        assert_eq!(img, expect);
    }

    #[test]
    fn zero_denominator_is_an_error() {
        let (_, [x]) = polyvars::<Rat, 1>(["x"]);
        let (tv, _) = polyvars::<Rat, 1>(["t"]);
        let bad = RatFn { num: QPoly::one(), den: QPoly::zero() };
        assert!(matches!(
            substitute(&x, &tv, &[("x", bad)]),
            Err(crate::Error::ZeroDenominator(_))
        ));
    }

    #[test]
    fn cross_multiplication_equality() {
        let (_, [t]) = polyvars::<Rat, 1>(["t"]);
        let two_t = t.scale(&crate::rat(2));
        let a = RatFn::new(t.clone(), QPoly::from_int(2)).unwrap();
        let b = RatFn::new(two_t, QPoly::from_int(4)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.normalized().den, QPoly::from_int(2).content_primitive().1);
    }
}

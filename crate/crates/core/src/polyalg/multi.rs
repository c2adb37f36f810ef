//! Sparse multivariate polynomials with a canonical graded-reverse-lex
//! term order.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors whose `Ord` is
//! grevlex, so equal polynomials have identical term maps and the leading
//! term is the last map entry. Constants (including the `Zero`/`One`
//! identities) carry an empty variable list and adapt to the other
//! operand's variables on the fly, which keeps the ring operations total.

use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::ring::Ring;
use crate::Rat;

/// Ordered list of variable names, shared between polynomials.
#[derive(Clone, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarSet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn empty() -> Self {
        VarSet(Arc::new(vec![]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for VarSet {}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

/// Exponent vector; arity equals the owning polynomial's variable count.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn unit(n: usize) -> Self {
        Mono(vec![0; n])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Grevlex: compare by total degree, ties broken by the last differing
/// exponent, smaller exponent winning.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let n = self.0.len().max(other.0.len());
        for k in (0..n).rev() {
            let a = self.0.get(k).copied().unwrap_or(0);
            let b = other.0.get(k).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over a [`Ring`] scalar.
#[derive(Clone, Debug)]
pub struct MultiPoly<K: Ring> {
    vars: VarSet,
    terms: BTreeMap<Mono, K>,
}

impl<K: Ring> MultiPoly<K> {
    pub fn zero_over(vars: &VarSet) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_over(vars: &VarSet, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(vars.len()), c);
        }
        MultiPoly { vars: vars.clone(), terms }
    }

    pub fn constant(c: K) -> Self {
        Self::constant_over(&VarSet::empty(), c)
    }

    pub fn var(vars: &VarSet, name: &str) -> Self {
        let i = vars
            .index(name)
            .unwrap_or_else(|| panic!("variable {name} not in {vars}"));
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Mono(e), K::one())
    }

    pub fn monomial(vars: &VarSet, m: Mono, c: K) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { vars: vars.clone(), terms }
    }

    pub fn from_terms(vars: &VarSet, it: impl IntoIterator<Item = (Mono, K)>) -> Self {
        let mut p = Self::zero_over(vars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn as_constant(&self) -> Option<K> {
        if self.terms.is_empty() {
            return Some(K::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn add_term(&mut self, m: Mono, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Leading term in the canonical grevlex order.
    pub fn leading(&self) -> Option<(&Mono, &K)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        let Some(i) = self.vars.index(var) else { return 0 };
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Mono) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn map_coeffs<L: Ring>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        MultiPoly::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero_over(&self.vars);
        }
        Self::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * k.clone())))
    }

    pub fn derivative(&self, var: &str) -> Self {
        let Some(i) = self.vars.index(var) else {
            return Self::zero_over(&self.vars);
        };
        let mut out = Self::zero_over(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] = e - 1;
            out.add_term(m2, c.clone() * K::from_int(e as i64));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant_over(&self.vars, K::one());
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

    fn promote_to(&self, vars: &VarSet) -> Self {
        if self.vars == *vars {
            let mut p = self.clone();
            p.vars = vars.clone();
            return p;
        }
        assert!(
            self.is_constant() || self.vars.is_empty(),
            "incompatible variable sets {} vs {}",
            self.vars,
            vars
        );
        match self.as_constant() {
            Some(c) => Self::constant_over(vars, c),
            None => panic!("incompatible variable sets {} vs {}", self.vars, vars),
        }
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.vars == b.vars {
            (a.clone(), b.clone())
        } else if a.is_constant() {
            (a.promote_to(&b.vars), b.clone())
        } else {
            (a.clone(), b.promote_to(&a.vars))
        }
    }

    /// Substitute polynomials for variables. Every variable of `self` must
    /// be bound or present in `target`.
    pub fn substitute(&self, target: &VarSet, bind: &[(&str, MultiPoly<K>)]) -> MultiPoly<K> {
        let n = self.vars.len();
        // image of each variable
        let images: Vec<MultiPoly<K>> = (0..n)
            .map(|i| {
                let name = &self.vars.names()[i];
                if let Some((_, p)) = bind.iter().find(|(v, _)| v == name) {
                    p.promote_to_vars_of(target)
                } else {
                    MultiPoly::var(target, name)
                }
            })
            .collect();
        let mut powers: Vec<Vec<MultiPoly<K>>> = (0..n)
            .map(|i| vec![MultiPoly::constant_over(target, K::one()), images[i].clone()])
            .collect();
        let mut out = MultiPoly::zero_over(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant_over(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = &mut powers[i];
                while p.len() <= e as usize {
                    let next = p.last().unwrap().clone() * images[i].clone();
                    p.push(next);
                }
                term = term * p[e as usize].clone();
            }
            out = out + term;
        }
        out
    }

    fn promote_to_vars_of(&self, target: &VarSet) -> MultiPoly<K> {
        if &self.vars == target {
            self.clone()
        } else if self.is_constant() {
            self.promote_to(target)
        } else {
            // embed: every variable of self must exist in target
            let map: Vec<usize> = self
                .vars
                .names()
                .iter()
                .map(|n| target.index(n).unwrap_or_else(|| panic!("variable {n} not in {target}")))
                .collect();
            let mut out = MultiPoly::zero_over(target);
            for (m, c) in &self.terms {
                let mut e = vec![0; target.len()];
                for (i, &exp) in m.0.iter().enumerate() {
                    e[map[i]] = exp;
                }
                out.add_term(Mono(e), c.clone());
            }
            out
        }
    }

    /// Reinterpret over a superset of variables (by name).
    pub fn embed(&self, target: &VarSet) -> MultiPoly<K> {
        self.promote_to_vars_of(target)
    }

    /// Evaluate at a full point (one value per variable).
    pub fn eval(&self, vals: &[K]) -> K {
        assert_eq!(vals.len(), self.vars.len());
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * vals[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Collect as a dense univariate polynomial in `var` with coefficients
    /// in the remaining variables.
    pub fn collect_uni(&self, var: &str) -> super::uni::UniPoly<MultiPoly<K>> {
        let i = self
            .vars
            .index(var)
            .unwrap_or_else(|| panic!("variable {var} not in {}", self.vars));
        let rest = VarSet::new(
            self.vars
                .names()
                .iter()
                .filter(|n| n.as_str() != var)
                .cloned(),
        );
        let deg = self.degree_in(var) as usize;
        let mut coeffs = vec![MultiPoly::zero_over(&rest); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut rm: Vec<u32> = m.0.clone();
            rm.remove(i);
            coeffs[e].add_term(Mono(rm), c.clone());
        }
        super::uni::UniPoly::from_coeffs(var, coeffs)
    }
}

impl MultiPoly<Rat> {
    /// Positive rational `c` with `self = c * primitive`, the primitive
    /// part having coprime integer coefficients and positive leading
    /// coefficient. Zero returns `(0, 0)`.
    pub fn content_primitive(&self) -> (Rat, MultiPoly<Rat>) {
        use num::Integer;
        if self.terms.is_empty() {
            return (Rat::zero(), self.clone());
        }
        let mut num_gcd = num::BigInt::from(0);
        let mut den_lcm = num::BigInt::from(1);
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.leading().unwrap().1 < &Rat::zero() {
            content = -content;
        }
        let prim = self.map_coeffs(|c| c / &content);
        (content, prim)
    }
}

impl<K: Ring> PartialEq for MultiPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = Self::unify(self, other);
        a.terms == b.terms
    }
}

impl<K: Ring> Zero for MultiPoly<K> {
    fn zero() -> Self {
        Self::zero_over(&VarSet::empty())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Ring> One for MultiPoly<K> {
    fn one() -> Self {
        Self::constant(K::one())
    }
    fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }
}

impl<K: Ring> Neg for MultiPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<K: Ring> Add for MultiPoly<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut a, b) = Self::unify(&self, &rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl<K: Ring> Sub for MultiPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ring> Mul for MultiPoly<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = Self::unify(&self, &rhs);
        let mut out = Self::zero_over(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let c = ca.clone() * cb.clone();
                out.add_term(ma.mul(mb), c);
            }
        }
        out
    }
}

impl<K: Ring> Ring for MultiPoly<K> {
    /// Division by a single divisor; exact or `None`.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (mut rem, d) = Self::unify(self, rhs);
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut q = Self::zero_over(&rem.vars);
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.try_div(&dm)?;
            let qc = rc.exact_div(&dc)?;
            q.add_term(qm.clone(), qc.clone());
            let piece = Self::monomial(&rem.vars, qm, qc) * d.clone();
            rem = rem - piece;
        }
        Some(q)
    }

    fn from_int(n: i64) -> Self {
        Self::constant(K::from_int(n))
    }

    fn from_rat(r: &Rat) -> Self {
        Self::constant(K::from_rat(r))
    }

    fn coeff_parts(&self) -> (bool, String) {
        if let Some(c) = self.as_constant() {
            return c.coeff_parts();
        }
        if self.terms.len() == 1 {
            let neg = self.leading().unwrap().1.coeff_parts().0;
            let body = if neg { format!("{}", -self.clone()) } else { format!("{self}") };
            return (neg, body);
        }
        let neg = self.leading().unwrap().1.coeff_parts().0;
        if neg {
            (true, format!("({})", -self.clone()))
        } else {
            (false, format!("({self})"))
        }
    }
}

impl<K: Ring> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
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
            let mono = mono_text(&self.vars, m);
            match (mono.is_empty(), c.is_display_one() || (-c.clone()).is_display_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

fn mono_text(vars: &VarSet, m: &Mono) -> String {
    let mut parts = vec![];
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.names()[i].clone()),
            _ => parts.push(format!("{}^{}", vars.names()[i], e)),
        }
    }
    parts.join("*")
}

/// Convenience: build the variable polynomials of a fresh variable set.
pub fn polyvars<K: Ring, const N: usize>(names: [&str; N]) -> (VarSet, [MultiPoly<K>; N]) {
    let vs = VarSet::new(names);
    let arr = names.map(|n| MultiPoly::var(&vs, n));
    (vs, arr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Rat};

    fn ab() -> (VarSet, MultiPoly<Rat>, MultiPoly<Rat>) {
        let vs = VarSet::new(["x", "y"]);
        (vs.clone(), MultiPoly::var(&vs, "x"), MultiPoly::var(&vs, "y"))
    }

    #[test]
    fn grevlex_order_on_three_vars() {
        // x^2 > x*y > y^2 > x*z > y*z > z^2 in grevlex with x > y > z
        let seq = [
            Mono(vec![2, 0, 0]),
            Mono(vec![1, 1, 0]),
            Mono(vec![0, 2, 0]),
            Mono(vec![1, 0, 1]),
            Mono(vec![0, 1, 1]),
            Mono(vec![0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert!(w[0] > w[1], "{:?} should exceed {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn arithmetic_and_display() {
        let (_, x, y) = ab();
        let p = (x.clone() + y.clone()).pow(2);
        let q = x.clone() * x.clone() + MultiPoly::from_int(2) * x.clone() * y.clone() + y.clone() * y.clone();
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "x^2 + 2*x*y + y^2");
        let r = x.clone() - y.clone() * MultiPoly::from_int(3);
        assert_eq!(r.to_string(), "x - 3*y");
    }

    #[test]
    fn constants_adapt_to_variables() {
        let (_, x, _) = ab();
        let c: MultiPoly<Rat> = MultiPoly::from_int(5);
        let s = c.clone() + x.clone();
        assert_eq!(s.to_string(), "x + 5");
        assert_eq!(s * c, x.scale(&rat(5)) + MultiPoly::from_int(25));
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = ab();
        let p = (x.clone() + y.clone()).pow(3);
        let d = x.clone() + y.clone();
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, (x.clone() + y.clone()).pow(2));
        assert!(x.exact_div(&y).is_none());
    }

    #[test]
    fn substitution() {
        let (vs, x, y) = ab();
        let p = x.clone() * x.clone() + y.clone();
        let t = VarSet::new(["t"]);
        let tt = MultiPoly::var(&t, "t");
        let img = p.substitute(&t, &[("x", tt.clone() + MultiPoly::from_int(1)), ("y", tt.clone())]);
        // (t+1)^2 + t = t^2 + 3t + 1
        let expect = tt.clone().pow(2) + tt.scale(&rat(3)) + MultiPoly::from_int(1);
        assert_eq!(img, expect);
        // partial: keep y
        let img2 = p.substitute(&vs, &[("x", y.clone())]);
        assert_eq!(img2, y.clone() * y.clone() + y);
    }

    #[test]
    fn content_and_primitive() {
        let vs = VarSet::new(["x"]);
        let x = MultiPoly::var(&vs, "x");
        let p = x.scale(&crate::ratq(-4, 3)) + MultiPoly::constant_over(&vs, crate::ratq(-2, 9));
        let (c, prim) = p.content_primitive();
        assert_eq!(c, crate::ratq(-2, 9));
        assert_eq!(prim, x.scale(&rat(6)) + MultiPoly::from_int(1));
    }

    #[test]
    fn ring_axioms_randomized_over_number_fields() {
        use crate::polyalg::numfield::NfElem;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
        let vs = VarSet::new(["x", "y"]);
        for field in 0..3 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut p = MultiPoly::<NfElem>::zero_over(&vs);
                for _ in 0..4 {
                    let m = Mono((0..2).map(|_| rng.gen_range(0..3)).collect());
                    let c = match field {
                        0 => NfElem::int(rng.gen_range(-4..=4)),
                        1 => {
                            NfElem::int(rng.gen_range(-4..=4))
                                + NfElem::zeta().pow(rng.gen_range(0..4))
                        }
                        _ => {
                            NfElem::int(rng.gen_range(-4..=4))
                                + NfElem::sqrt5() * NfElem::int(rng.gen_range(-2..=2))
                        }
                    };
                    p.add_term(m, c);
                }
                p
            };
            for _ in 0..10 {
                let a = rand_poly(&mut rng);
                let b = rand_poly(&mut rng);
                let c = rand_poly(&mut rng);
                assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
                assert_eq!(
                    a.clone() * (b.clone() + c.clone()),
                    a.clone() * b.clone() + a.clone() * c.clone()
                );
            }
        }
    }

    #[test]
    fn ring_axioms_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let vs = VarSet::new(["x", "y", "z"]);
        let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut p = MultiPoly::zero_over(&vs);
            for _ in 0..5 {
                let m = Mono((0..3).map(|_| rng.gen_range(0..3)).collect());
                p.add_term(m, rat(rng.gen_range(-5..=5)));
            }
            p
        };
        for _ in 0..25 {
            let a = rand_poly(&mut rng);
            let b = rand_poly(&mut rng);
            let c = rand_poly(&mut rng);
            let left = (a.clone() * b.clone()) * c.clone();
            let right = a.clone() * (b.clone() * c.clone());
            assert_eq!(left, right);
            let dist = a.clone() * (b.clone() + c.clone());
            let dist2 = a.clone() * b.clone() + a.clone() * c.clone();
            assert_eq!(dist, dist2);
        }
    }
}

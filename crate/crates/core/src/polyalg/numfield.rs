//! Small number fields in power-basis representation.
//!
//! Four fields cover every closed form in the family: the rationals, the
//! cyclotomic field of fifth roots of unity `Q(z5)` with `z5^4+z5^3+z5^2+z5+1 = 0`,
//! the real quadratic field `Q(s5)` with `s5^2 = 5`, the Gaussian field
//! `Q(i)` with `i^2 = -1`, and the degree-eight tower `Q(z5)(i)` needed only
//! for the change of model in the Galois case. Elements of distinct fields
//! combine through the canonical embeddings below; in particular the crate
//! fixes the representative
//!
//! ```text
//! sqrt(5) = 1 + 2*z5 + 2*z5^4   (= -1 - 2*z5^2 - 2*z5^3 in the power basis)
//! ```
//!
//! which is the positive square root under `z5 = exp(2*pi*i/5)`. With this
//! choice `(1 + 2*z5^3 + 2*z5^4)^2 = -5 - 2*sqrt(5)` holds exactly.

use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Field, Ring};
use crate::Rat;

/// Identifier of a supported base field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FieldId {
    /// The rationals.
    Q,
    /// `Q(z5)`, `z5` a primitive fifth root of unity.
    Zeta5,
    /// `Q(s5)`, `s5^2 = 5`.
    Sqrt5,
    /// `Q(i)`, `i^2 = -1`.
    Gauss,
    /// The tower `Q(z5)(i)`, degree eight over `Q`.
    Zeta5I,
}

impl FieldId {
    /// Degree of the field over `Q`.
    pub fn degree(self) -> usize {
        match self {
            FieldId::Q => 1,
            FieldId::Zeta5 => 4,
            FieldId::Sqrt5 => 2,
            FieldId::Gauss => 2,
            FieldId::Zeta5I => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldId::Q => "Q",
            FieldId::Zeta5 => "Q(z5)",
            FieldId::Sqrt5 => "Q(s5)",
            FieldId::Gauss => "Q(i)",
            FieldId::Zeta5I => "Q(z5,i)",
        }
    }

    /// Text of the defining polynomial(s), for wire headers.
    pub fn modulus(self) -> &'static str {
        match self {
            FieldId::Q => "x",
            FieldId::Zeta5 => "x^4+x^3+x^2+x+1",
            FieldId::Sqrt5 => "x^2-5",
            FieldId::Gauss => "x^2+1",
            FieldId::Zeta5I => "x^2+1 over z5^4+z5^3+z5^2+z5+1",
        }
    }

    /// Smallest supported field containing both, along the canonical
    /// embeddings. `None` only for pairs the lattice does not join (none
    /// with the current five fields).
    pub fn join(a: FieldId, b: FieldId) -> Option<FieldId> {
        use FieldId::*;
        if a == b {
            return Some(a);
        }
        Some(match (a.min(b), a.max(b)) {
            (Q, f) => f,
            (Zeta5, Sqrt5) => Zeta5,
            (Zeta5, Gauss) => Zeta5I,
            (Sqrt5, Gauss) => Zeta5I,
            (_, Zeta5I) => Zeta5I,
            _ => return None,
        })
    }
}

/// Element of one of the supported fields, as rational coordinates in the
/// power basis (for the tower: real part then imaginary part, each in the
/// `z5` power basis).
#[derive(Clone, Debug)]
pub struct NfElem {
    field: FieldId,
    c: Vec<Rat>,
}

fn rz() -> Rat {
    Rat::zero()
}

impl NfElem {
    pub fn from_rat(r: Rat) -> Self {
        NfElem { field: FieldId::Q, c: vec![r] }
    }

    pub fn int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    /// The generator `z5` of `Q(z5)`.
    pub fn zeta() -> Self {
        NfElem { field: FieldId::Zeta5, c: vec![rz(), Rat::one(), rz(), rz()] }
    }

    /// `z5^k` for any integer exponent.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(5) as usize;
        if k == 4 {
            // z5^4 = -(1 + z5 + z5^2 + z5^3)
            let m = -Rat::one();
            NfElem { field: FieldId::Zeta5, c: vec![m.clone(), m.clone(), m.clone(), m] }
        } else {
            let mut c = vec![rz(); 4];
            c[k] = Rat::one();
            NfElem { field: FieldId::Zeta5, c }
        }
    }

    /// The generator `s5` of `Q(s5)`, with `s5^2 = 5`.
    pub fn sqrt5() -> Self {
        NfElem { field: FieldId::Sqrt5, c: vec![rz(), Rat::one()] }
    }

    /// The generator `i` of `Q(i)`.
    pub fn gauss_i() -> Self {
        NfElem { field: FieldId::Gauss, c: vec![rz(), Rat::one()] }
    }

    /// `i` inside the tower `Q(z5)(i)`.
    pub fn tower_i() -> Self {
        let mut c = vec![rz(); 8];
        c[4] = Rat::one();
        NfElem { field: FieldId::Zeta5I, c }
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.c
    }

    /// `Some(r)` if the element lies in the rational prime field.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Image in `target` along the canonical embeddings. Panics if the
    /// embedding does not exist (callers go through `join`).
    pub fn promote(&self, target: FieldId) -> NfElem {
        use FieldId::*;
        if self.field == target {
            return self.clone();
        }
        match (self.field, target) {
            (Q, _) => {
                let mut c = vec![rz(); target.degree()];
                c[0] = self.c[0].clone();
                NfElem { field: target, c }
            }
            (Sqrt5, Zeta5) => {
                // s5 -> -1 - 2*z5^2 - 2*z5^3  (the power-basis form of 1 + 2*z5 + 2*z5^4)
                let two = Rat::from_integer(2.into());
                let s5 = vec![-Rat::one(), rz(), -two.clone(), -two];
                let mut c = vec![rz(); 4];
                c[0] = self.c[0].clone();
                for (ck, sk) in c.iter_mut().zip(&s5) {
                    *ck = &*ck + &(sk * &self.c[1]);
                }
                NfElem { field: Zeta5, c }
            }
            (Sqrt5, Zeta5I) => self.promote(Zeta5).promote(Zeta5I),
            (Zeta5, Zeta5I) => {
                let mut c = self.c.clone();
                c.extend(std::iter::repeat(rz()).take(4));
                NfElem { field: Zeta5I, c }
            }
            (Gauss, Zeta5I) => {
                let mut c = vec![rz(); 8];
                c[0] = self.c[0].clone();
                c[4] = self.c[1].clone();
                NfElem { field: Zeta5I, c }
            }
            (f, t) => panic!("no canonical embedding {} -> {}", f.name(), t.name()),
        }
    }

    fn unify(a: &NfElem, b: &NfElem) -> (NfElem, NfElem) {
        let j = FieldId::join(a.field, b.field)
            .unwrap_or_else(|| panic!("fields {} and {} do not join", a.field.name(), b.field.name()));
        (a.promote(j), b.promote(j))
    }

    /// Real/imaginary split of a tower element over `Q(z5)`.
    pub fn re_im(&self) -> (NfElem, NfElem) {
        assert_eq!(self.field, FieldId::Zeta5I);
        (
            NfElem { field: FieldId::Zeta5, c: self.c[..4].to_vec() },
            NfElem { field: FieldId::Zeta5, c: self.c[4..].to_vec() },
        )
    }

    pub fn pow(&self, mut e: u32) -> NfElem {
        let mut base = self.clone();
        let mut acc = NfElem::int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    fn mul_same(a: &NfElem, b: &NfElem) -> NfElem {
        use FieldId::*;
        let field = a.field;
        match field {
            Q => NfElem { field, c: vec![&a.c[0] * &b.c[0]] },
            Sqrt5 | Gauss => {
                let m = if field == Sqrt5 { Rat::from_integer(5.into()) } else { -Rat::one() };
                let c0 = &(&a.c[0] * &b.c[0]) + &(&m * &(&a.c[1] * &b.c[1]));
                let c1 = &(&a.c[0] * &b.c[1]) + &(&a.c[1] * &b.c[0]);
                NfElem { field, c: vec![c0, c1] }
            }
            Zeta5 => {
                let mut v = vec![rz(); 7];
                for (i, ai) in a.c.iter().enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    for (j, bj) in b.c.iter().enumerate() {
                        if !bj.is_zero() {
                            v[i + j] = &v[i + j] + &(ai * bj);
                        }
                    }
                }
                // z5^5 = 1, z5^6 = z5, then z5^4 = -(1+z5+z5^2+z5^3)
                let v5 = v[5].clone();
                v[0] = &v[0] + &v5;
                let v6 = v[6].clone();
                v[1] = &v[1] + &v6;
                let v4 = v[4].clone();
                let mut c = vec![rz(); 4];
                for k in 0..4 {
                    c[k] = &v[k] - &v4;
                }
                NfElem { field, c }
            }
            Zeta5I => {
                let (ar, ai) = a.re_im();
                let (br, bi) = b.re_im();
                let re = Self::mul_same(&ar, &br) - Self::mul_same(&ai, &bi);
                let im = Self::mul_same(&ar, &bi) + Self::mul_same(&ai, &br);
                let mut c = re.c;
                c.extend(im.c);
                NfElem { field, c }
            }
        }
    }

    fn inv_same(&self) -> Option<NfElem> {
        use FieldId::*;
        if self.is_zero() {
            return None;
        }
        match self.field {
            Q => Some(NfElem { field: Q, c: vec![self.c[0].recip()] }),
            Sqrt5 | Gauss => {
                let m = if self.field == Sqrt5 { Rat::from_integer(5.into()) } else { -Rat::one() };
                let n = &(&self.c[0] * &self.c[0]) - &(&m * &(&self.c[1] * &self.c[1]));
                if n.is_zero() {
                    return None;
                }
                Some(NfElem { field: self.field, c: vec![&self.c[0] / &n, -(&self.c[1] / &n)] })
            }
            Zeta5 => {
                // extended euclid of the coordinate polynomial with the
                // cyclotomic modulus x^4+x^3+x^2+x+1 over Q
                let one = Rat::one();
                let modulus = vec![one.clone(), one.clone(), one.clone(), one.clone(), one];
                let inv = poly_invert_mod(&self.c, &modulus)?;
                Some(NfElem { field: Zeta5, c: inv })
            }
            Zeta5I => {
                let (u, v) = self.re_im();
                let n = Self::mul_same(&u, &u) + Self::mul_same(&v, &v);
                let ninv = n.inv_same()?;
                let re = Self::mul_same(&u, &ninv);
                let im = Self::mul_same(&(-v), &ninv);
                let mut c = re.c;
                c.extend(im.c);
                Some(NfElem { field: Zeta5I, c })
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": self.field.name(),
            "modulus": self.field.modulus(),
            "coords": self.c.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Inverse of `a` modulo the monic polynomial `m` (dense low-to-high
/// coefficients), over the rationals.
fn poly_invert_mod(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
    // extended euclid on (a, m); invariant r = s*a (mod m)
    let trim = |v: &mut Vec<Rat>| {
        while v.last().map(|x| x.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    let mut r0: Vec<Rat> = m.to_vec();
    let mut r1: Vec<Rat> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<Rat> = vec![];
    let mut s1: Vec<Rat> = vec![Rat::one()];
    while !r1.is_empty() {
        // divide r0 by r1
        let mut rem = r0.clone();
        let mut q: Vec<Rat> = vec![rz(); rem.len().saturating_sub(r1.len()) + 1];
        while rem.len() >= r1.len() && !rem.is_empty() {
            let d = rem.len() - r1.len();
            let c = rem.last().unwrap() / r1.last().unwrap();
            q[d] = &q[d] + &c;
            for (k, rk) in r1.iter().enumerate() {
                rem[d + k] = &rem[d + k] - &(&c * rk);
            }
            trim(&mut rem);
        }
        // s_next = s0 - q*s1
        let mut snext = s0.clone();
        snext.resize(snext.len().max(q.len() + s1.len()), rz());
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, sj) in s1.iter().enumerate() {
                snext[i + j] = &snext[i + j] - &(qi * sj);
            }
        }
        trim(&mut snext);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, snext);
    }
    if r0.len() != 1 {
        return None; // gcd not a unit
    }
    let lead = r0[0].clone();
    let mut out: Vec<Rat> = s0.iter().map(|x| x / &lead).collect();
    out.resize(m.len() - 1, rz());
    Some(out)
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = NfElem::unify(self, other);
        a.c == b.c
    }
}

impl Zero for NfElem {
    fn zero() -> Self {
        NfElem::int(0)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

impl One for NfElem {
    fn one() -> Self {
        NfElem::int(1)
    }
    fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }
}

impl Neg for NfElem {
    type Output = NfElem;
    fn neg(self) -> NfElem {
        NfElem { field: self.field, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl Add for NfElem {
    type Output = NfElem;
    fn add(self, rhs: NfElem) -> NfElem {
        let (mut a, b) = NfElem::unify(&self, &rhs);
        for (x, y) in a.c.iter_mut().zip(&b.c) {
            *x = &*x + y;
        }
        a
    }
}

impl Sub for NfElem {
    type Output = NfElem;
    fn sub(self, rhs: NfElem) -> NfElem {
        self + (-rhs)
    }
}

impl Mul for NfElem {
    type Output = NfElem;
    fn mul(self, rhs: NfElem) -> NfElem {
        let (a, b) = NfElem::unify(&self, &rhs);
        NfElem::mul_same(&a, &b)
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field == FieldId::Zeta5I {
            let (re, im) = self.re_im();
            if im.is_zero() {
                return write!(f, "{re}");
            }
            if re.is_zero() {
                return write!(f, "({im})*i");
            }
            return write!(f, "({re}) + ({im})*i");
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let (neg, mag) = ck.coeff_parts();
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
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                let gen = gen_symbol(self.field, k);
                if ck.clone().abs().is_one() {
                    write!(f, "{gen}")?;
                } else {
                    write!(f, "{mag}*{gen}")?;
                }
            }
        }
        Ok(())
    }
}

impl Ring for NfElem {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (a, b) = NfElem::unify(self, rhs);
        Some(NfElem::mul_same(&a, &b.inv_same()?))
    }

    fn from_int(n: i64) -> Self {
        NfElem::int(n)
    }

    fn from_rat(r: &Rat) -> Self {
        NfElem::from_rat(r.clone())
    }

    fn coeff_parts(&self) -> (bool, String) {
        if let Some(r) = self.as_rational() {
            return r.coeff_parts();
        }
        let nz: Vec<usize> = (0..self.c.len()).filter(|&k| !self.c[k].is_zero()).collect();
        if nz.len() == 1 {
            let k = nz[0];
            let (neg, mag) = self.c[k].coeff_parts();
            let gen = gen_symbol(self.field, k);
            let text = if self.c[k].clone().abs().is_one() { gen } else { format!("{mag}*{gen}") };
            return (neg, text);
        }
        (false, format!("({})", self))
    }
}

impl Field for NfElem {
    fn inv(&self) -> Option<Self> {
        self.inv_same()
    }
}

fn gen_symbol(field: FieldId, k: usize) -> String {
    let g = match field {
        FieldId::Q => return "1".into(),
        FieldId::Zeta5 => "z5",
        FieldId::Sqrt5 => "s5",
        FieldId::Gauss => "i",
        FieldId::Zeta5I => return format!("[{k}]"),
    };
    if k == 1 {
        g.to_string()
    } else {
        format!("{g}^{k}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn zeta_relations() {
        let z = NfElem::zeta();
        assert_eq!(z.pow(5), NfElem::int(1));
        let sum = (0..5).fold(NfElem::int(0), |s, k| s + NfElem::zeta_pow(k));
        assert!(sum.is_zero());
    }

    #[test]
    fn sqrt5_representative_squares_to_five() {
        // 1 + 2 z5 + 2 z5^4 squares to 5 and is the chosen image of s5
        let z = NfElem::zeta();
        let s = NfElem::int(1) + NfElem::int(2) * z.clone() + NfElem::int(2) * z.pow(4);
        assert_eq!(s.clone() * s.clone(), NfElem::int(5));
        assert_eq!(NfElem::sqrt5().promote(FieldId::Zeta5), s);
    }

    #[test]
    fn splus_square_is_minus_five_minus_two_sqrt5() {
        let z = NfElem::zeta();
        let s_plus = NfElem::int(1) + NfElem::int(2) * z.pow(3) + NfElem::int(2) * z.pow(4);
        let rhs = -(NfElem::int(5) + NfElem::int(2) * NfElem::sqrt5());
        assert_eq!(s_plus.clone() * s_plus, rhs);
    }

    #[test]
    fn tower_square_roots() {
        // (i*(1+2z^3+2z^4))^2 = 5 + 2 sqrt5 ; (-i*(1+2z+2z^3))^2 = 5 - 2 sqrt5
        let i = NfElem::tower_i();
        let z = NfElem::zeta().promote(FieldId::Zeta5I);
        let sp = NfElem::int(1) + NfElem::int(2) * z.pow(3) + NfElem::int(2) * z.pow(4);
        let sm = NfElem::int(1) + NfElem::int(2) * z.clone() + NfElem::int(2) * z.pow(3);
        let lhs_p = (i.clone() * sp.clone()).pow(2);
        let lhs_m = (-(i * sm.clone())).pow(2);
        let s5 = NfElem::sqrt5();
        assert_eq!(lhs_p, NfElem::int(5) + NfElem::int(2) * s5.clone());
        assert_eq!(lhs_m, NfElem::int(5) - NfElem::int(2) * s5);
    }

    #[test]
    fn inverses_across_fields() {
        let z = NfElem::zeta();
        let x = NfElem::int(3) + NfElem::int(2) * z.clone() - z.pow(3);
        let xi = x.inv().unwrap();
        assert!((x * xi).is_one());

        let g = NfElem::int(2) + NfElem::int(3) * NfElem::gauss_i();
        assert!((g.clone() * g.inv().unwrap()).is_one());

        let t = NfElem::tower_i() + NfElem::zeta().promote(FieldId::Zeta5I) * NfElem::from_rat(rat(2));
        assert!((t.clone() * t.inv().unwrap()).is_one());
    }

    #[test]
    fn promotion_is_compatible_with_arithmetic() {
        let s = NfElem::sqrt5();
        let prod = s.clone() * NfElem::zeta(); // joins into Zeta5
        assert_eq!(prod.field(), FieldId::Zeta5);
        let sq = s.clone() * s;
        assert_eq!(sq, NfElem::int(5));
    }
}

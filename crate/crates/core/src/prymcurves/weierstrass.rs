//! Long Weierstrass models and their standard quantities.

use crate::polyalg::ring::Ring;
use crate::polyalg::uni::UniPoly;
use crate::{Error, Result};

/// `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6` over any scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticWeierstrass<K: Ring> {
    pub a1: K,
    pub a2: K,
    pub a3: K,
    pub a4: K,
    pub a6: K,
}

impl<K: Ring> EllipticWeierstrass<K> {
    pub fn new(a1: K, a2: K, a3: K, a4: K, a6: K) -> Self {
        EllipticWeierstrass { a1, a2, a3, a4, a6 }
    }

    pub fn b2(&self) -> K {
        self.a1.clone() * self.a1.clone() + K::from_int(4) * self.a2.clone()
    }

    pub fn b4(&self) -> K {
        K::from_int(2) * self.a4.clone() + self.a1.clone() * self.a3.clone()
    }

    pub fn b6(&self) -> K {
        self.a3.clone() * self.a3.clone() + K::from_int(4) * self.a6.clone()
    }

    pub fn b8(&self) -> K {
        self.a1.clone() * self.a1.clone() * self.a6.clone()
            + K::from_int(4) * self.a2.clone() * self.a6.clone()
            - self.a1.clone() * self.a3.clone() * self.a4.clone()
            + self.a2.clone() * self.a3.clone() * self.a3.clone()
            - self.a4.clone() * self.a4.clone()
    }

    pub fn c4(&self) -> K {
        let b2 = self.b2();
        b2.clone() * b2 - K::from_int(24) * self.b4()
    }

    pub fn c6(&self) -> K {
        let b2 = self.b2();
        -(b2.clone() * b2.clone() * b2.clone()) + K::from_int(36) * b2 * self.b4()
            - K::from_int(216) * self.b6()
    }

    pub fn disc(&self) -> K {
        let b2 = self.b2();
        let b4 = self.b4();
        let b6 = self.b6();
        let b8 = self.b8();
        -(b2.clone() * b2.clone() * b8.clone()) - K::from_int(8) * b4.clone() * b4.clone() * b4.clone()
            - K::from_int(27) * b6.clone() * b6.clone()
            + K::from_int(9) * b2 * b4 * b6
    }

    /// `j = c4^3 / disc` as a numerator/denominator pair, so symbolic
    /// scalars stay exact.
    pub fn j_parts(&self) -> (K, K) {
        let c4 = self.c4();
        (c4.clone() * c4.clone() * c4, self.disc())
    }

    /// `j` when the scalar is a field-like ring with exact division.
    pub fn j(&self) -> Result<K> {
        let (num, den) = self.j_parts();
        if den.is_zero() {
            return Err(Error::SingularFactor("disc"));
        }
        num.exact_div(&den).ok_or(Error::InexactDivision)
    }
}

/// Convert `y^2 = cubic(x)` with leading coefficient `c3` into a long
/// Weierstrass model by the substitution `(x, y) -> (X/c3, Y/c3)`, i.e.
/// `Y^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2`. Returns the model and the
/// scaling `c3`. The Weierstrass discriminant of the returned model is
/// `16 c3^2 disc(cubic)`; the `j`-invariant is unchanged.
pub fn weierstrass_from_cubic<K: Ring>(cubic: &UniPoly<K>) -> Result<(EllipticWeierstrass<K>, K)> {
    if cubic.degree() != Some(3) {
        return Err(Error::DegreeOutOfRange(cubic.degree().unwrap_or(0), 3, 3));
    }
    let c3 = cubic.coeff(3);
    let c2 = cubic.coeff(2);
    let c1 = cubic.coeff(1);
    let c0 = cubic.coeff(0);
    let model = EllipticWeierstrass::new(
        K::zero(),
        c2,
        K::zero(),
        c1 * c3.clone(),
        c0 * c3.clone() * c3.clone(),
    );
    Ok((model, c3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::multi::polyvars;
    use crate::polyalg::uni::discriminant;
    use crate::{rat, QUni, Rat};

    #[test]
    fn c4_cubed_minus_c6_squared_is_1728_disc() {
        // symbolically, over Q[p,q,r,s,t] as generic coefficients
        let (_, [p, q, r, s, t]) = polyvars::<Rat, 5>(["p", "q", "r", "s", "t"]);
        let e = EllipticWeierstrass::new(p, q, r, s, t);
        let lhs = e.c4().pow(3) - e.c6().pow(2);
        let rhs = e.disc().scale(&rat(1728));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn known_curve_invariants() {
        // y^2 + y = x^3 - x^2 has disc -11 and c4 = 16
        let e = EllipticWeierstrass::new(rat(0), rat(-1), rat(1), rat(0), rat(0));
        assert_eq!(e.disc(), rat(-11));
        assert_eq!(e.c4(), rat(16));
        assert_eq!(e.j().unwrap(), crate::ratq(-4096, 11));
    }

    #[test]
    fn cubic_conversion_scales_disc_by_16_c3_squared() {
        let cubic = QUni::from_coeffs("x", vec![rat(-1), rat(2), rat(-3), rat(5)]);
        let (model, u) = weierstrass_from_cubic(&cubic).unwrap();
        assert_eq!(u, rat(5));
        let dpoly = discriminant(&cubic).unwrap();
        assert_eq!(model.disc(), rat(16) * u.clone() * u * dpoly);
    }
}

//! Coefficient ring abstraction.
//!
//! The polynomial types are generic over the scalar they carry. A scalar is
//! anything implementing [`Ring`]: exact, commutative, with a decidable
//! exact-division test. Concrete instances are `Rat` (big rationals),
//! [`super::numfield::NfElem`] (number field elements) and the polynomial
//! types themselves, which makes nested coefficient rings like `Q[a,b][t]`
//! ordinary instantiations.

use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use crate::Rat;

/// Exact commutative ring scalar.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    /// Exact division. `None` if `rhs` is zero or does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Canonical image of a small integer.
    fn from_int(n: i64) -> Self;

    /// Canonical image of a rational (every scalar here is a Q-algebra).
    fn from_rat(r: &Rat) -> Self;

    /// Sign and magnitude rendering used when this element appears as a
    /// coefficient inside a polynomial: `(negative, text)`, where `text`
    /// is already parenthesized if it is not a product atom.
    fn coeff_parts(&self) -> (bool, String);

    /// True for the multiplicative identity (used to suppress `1*` factors).
    fn is_display_one(&self) -> bool {
        self.is_one()
    }
}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` on zero.
    fn inv(&self) -> Option<Self>;
}

impl Ring for Rat {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn from_int(n: i64) -> Self {
        Rat::from_integer(n.into())
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn coeff_parts(&self) -> (bool, String) {
        if self < &Rat::zero() {
            (true, (-self).to_string())
        } else {
            (false, self.to_string())
        }
    }
}

impl Field for Rat {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

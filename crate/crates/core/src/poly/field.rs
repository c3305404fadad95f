//! Coefficient domains: exact rationals and small prime fields.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A commutative field usable as a polynomial coefficient domain.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + 'static
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    /// Image of `num / den` in the field; `None` if `den` maps to zero.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Scalar that brings a coefficient list to its preferred normal form.
    ///
    /// For rationals this is the content-removal factor (result has coprime
    /// integer coefficients and a positive leading entry); for prime fields it
    /// makes the leading entry one. `coeffs` must be non-empty with a nonzero
    /// first entry.
    fn normalizing_scale(coeffs: &[Self]) -> Self {
        coeffs[0].inverse().expect("leading coefficient is nonzero")
    }

    /// Text form used by the polynomial printer; must be parseable back by
    /// the grammar (`int` or `int/uint`, with an optional leading minus).
    fn to_text(&self) -> String {
        self.to_string()
    }

    /// Whether the printer should emit this coefficient with a minus sign.
    fn prints_negative(&self) -> bool {
        false
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rational::new(num.clone(), den.clone()))
        }
    }

    fn normalizing_scale(coeffs: &[Self]) -> Self {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut scale = Rational::new(den_lcm, num_gcd);
        if Signed::is_negative(&coeffs[0]) {
            scale = -scale;
        }
        scale
    }

    fn prints_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Residue class modulo the prime `P` (`P < 2^31`), stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField<const P: u32>(u32);

impl<const P: u32> PrimeField<P> {
    pub const MODULUS: u32 = P;

    pub fn new(value: i64) -> Self {
        Self(value.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        let p = P as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Self(acc as u32)
    }

    fn reduce_big(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Self(r.to_u32().expect("residue fits in u32"))
    }
}

impl<const P: u32> Debug for PrimeField<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> Display for PrimeField<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for PrimeField<P> {
    fn zero() -> Self {
        Self(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for PrimeField<P> {
    fn one() -> Self {
        Self(1 % P)
    }
}

impl<const P: u32> Add for PrimeField<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for PrimeField<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for PrimeField<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self((self.0 as u64 * rhs.0 as u64 % P as u64) as u32)
    }
}

impl<const P: u32> Div for PrimeField<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl<const P: u32> Neg for PrimeField<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Self((P - self.0) % P)
    }
}

impl<const P: u32> AddAssign for PrimeField<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for PrimeField<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for PrimeField<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Field for PrimeField<P> {
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat; P is assumed prime.
            Some(self.pow(P as u64 - 2))
        }
    }

    fn from_i64(n: i64) -> Self {
        Self::new(n)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let d = Self::reduce_big(den);
        d.inverse().map(|inv| Self::reduce_big(num) * inv)
    }
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// `num/den` as a rational; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = PrimeField<7>;

    #[test]
    fn rationals_are_reduced() {
        let q = frac(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn prime_field_inverse() {
        for v in 1..7 {
            let a = F7::new(v);
            assert_eq!(a * a.inverse().unwrap(), F7::one());
        }
        assert!(F7::zero().inverse().is_none());
        assert_eq!(F7::new(-1).value(), 6);
    }

    #[test]
    fn prime_field_from_ratio() {
        let x = F7::from_ratio(&BigInt::from(3), &BigInt::from(2)).unwrap();
        assert_eq!(x * F7::new(2), F7::new(3));
        assert!(F7::from_ratio(&BigInt::from(1), &BigInt::from(14)).is_none());
    }

    #[test]
    fn content_removal_scale() {
        let coeffs = vec![frac(-2, 3), frac(4, 9), int(2)];
        let s = Rational::normalizing_scale(&coeffs);
        let scaled: Vec<_> = coeffs.iter().map(|c| c * &s).collect();
        assert_eq!(scaled, vec![int(3), int(-2), int(-9)]);
    }
}

//! Exact rational scalars.
//!
//! Every coefficient in this crate is a `Scalar`: an arbitrary-precision
//! rational kept in canonical reduced form (positive denominator). There is
//! no floating point anywhere; equality of scalars is decidable and exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An exact rational number over the ground field.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` with `q != 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Scalar(self.0.recip())
    }

    /// (-1)^e as a scalar.
    pub fn sign_pow(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    /// n! as a scalar.
    pub fn factorial(n: usize) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= BigInt::from(k);
        }
        Scalar(BigRational::from_integer(acc))
    }

    /// Binomial coefficient `C(n, k)`.
    pub fn binomial(n: usize, k: usize) -> Self {
        if k > n {
            return Scalar::zero();
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..k.min(n - k) {
            num *= BigInt::from(n - i);
            den *= BigInt::from(i + 1);
        }
        Scalar(BigRational::new(num, den))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parses `"p"` or `"p/q"` with optional sign, exactly.
impl FromStr for Scalar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
        let q = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Scalar(BigRational::new(p, q)))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_parse() {
        assert_eq!(Scalar::frac(2, 4), Scalar::frac(1, 2));
        assert_eq!(Scalar::frac(1, -2), Scalar::frac(-1, 2));
        assert_eq!("3/6".parse::<Scalar>().unwrap(), Scalar::frac(1, 2));
        assert_eq!("-7".parse::<Scalar>().unwrap(), Scalar::int(-7));
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in [Scalar::int(0), Scalar::int(5), Scalar::frac(-3, 7)] {
            let printed = s.to_string();
            assert_eq!(printed.parse::<Scalar>().unwrap(), s);
        }
        assert_eq!(Scalar::frac(-3, 7).to_string(), "-3/7");
        assert_eq!(Scalar::int(4).to_string(), "4");
    }

    #[test]
    fn field_ops() {
        let a = Scalar::frac(2, 3);
        let b = Scalar::frac(-1, 6);
        assert_eq!(&a + &b, Scalar::frac(1, 2));
        assert_eq!(&a * &b, Scalar::frac(-1, 9));
        assert_eq!(&a / &a, Scalar::one());
        assert_eq!(Scalar::binomial(5, 2), Scalar::int(10));
        assert_eq!(Scalar::factorial(5), Scalar::int(120));
        assert_eq!(Scalar::sign_pow(-3), Scalar::int(-1));
    }
}

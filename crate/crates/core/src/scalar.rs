//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in reduced canonical form
/// (gcd(num, den) = 1, den > 0). This is guaranteed by `BigRational`.
pub type Scalar = num_rational::BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// The scalar operations the linear algebra layer needs, on top of the
/// `num_traits` zero/one structure.
///
/// Implemented by [`Scalar`] (the rationals) and [`CScalar`] (the Gaussian
/// rationals). All operations are exact; `inv` returns `None` for zero.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> std::ops::AddAssign<&'a Self>
    + for<'a> std::ops::SubAssign<&'a Self>
    + for<'a> std::ops::MulAssign<&'a Self>
{
    fn inv(&self) -> Option<Self>;

    fn ref_add(&self, rhs: &Self) -> Self {
        let mut x = self.clone();
        x += rhs;
        x
    }
    fn ref_sub(&self, rhs: &Self) -> Self {
        let mut x = self.clone();
        x -= rhs;
        x
    }
    fn ref_mul(&self, rhs: &Self) -> Self {
        let mut x = self.clone();
        x *= rhs;
        x
    }
    fn ref_neg(&self) -> Self {
        -self.clone()
    }
}

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Gaussian rational: `re + im * i` with exact rational parts.
///
/// Conjugation is an involution and all field axioms hold exactly; this is
/// the coefficient field for complexified period data.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl CScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        CScalar { re, im }
    }

    pub fn from_real(re: Scalar) -> Self {
        CScalar {
            re,
            im: Scalar::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        CScalar {
            re: Scalar::zero(),
            im: Scalar::one(),
        }
    }

    pub fn conj(&self) -> Self {
        CScalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    /// `|z|^2 = re^2 + im^2`, an exact rational.
    pub fn norm_sq(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Zero for CScalar {
    fn zero() -> Self {
        CScalar {
            re: Scalar::zero(),
            im: Scalar::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
}

impl One for CScalar {
    fn one() -> Self {
        CScalar::from_real(Scalar::one())
    }
}

impl Field for CScalar {
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(CScalar {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }
}

fn c_add(a: &CScalar, b: &CScalar) -> CScalar {
    CScalar {
        re: &a.re + &b.re,
        im: &a.im + &b.im,
    }
}

fn c_sub(a: &CScalar, b: &CScalar) -> CScalar {
    CScalar {
        re: &a.re - &b.re,
        im: &a.im - &b.im,
    }
}

fn c_mul(a: &CScalar, b: &CScalar) -> CScalar {
    CScalar {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

macro_rules! cscalar_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident, $f:ident) => {
        impl $trait for CScalar {
            type Output = CScalar;
            fn $method(self, rhs: CScalar) -> CScalar {
                $f(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a CScalar> for &'a CScalar {
            type Output = CScalar;
            fn $method(self, rhs: &'a CScalar) -> CScalar {
                $f(self, rhs)
            }
        }
        impl<'a> std::ops::$assign_trait<&'a CScalar> for CScalar {
            fn $assign_method(&mut self, rhs: &'a CScalar) {
                *self = $f(self, rhs);
            }
        }
    };
}

cscalar_binop!(Add, add, AddAssign, add_assign, c_add);
cscalar_binop!(Sub, sub, SubAssign, sub_assign, c_sub);
cscalar_binop!(Mul, mul, MulAssign, mul_assign, c_mul);

impl Div for CScalar {
    type Output = CScalar;
    fn div(self, rhs: CScalar) -> CScalar {
        c_mul(&self, &rhs.inv().expect("division by zero"))
    }
}

impl Neg for CScalar {
    type Output = CScalar;
    fn neg(self) -> CScalar {
        CScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Entrywise complexification of a rational vector.
pub fn complexify_vec(v: &[Scalar]) -> Vec<CScalar> {
    v.iter().map(|x| CScalar::from_real(x.clone())).collect()
}

/// Entrywise conjugate of a Gaussian-rational vector.
pub fn conj_vec(v: &[CScalar]) -> Vec<CScalar> {
    v.iter().map(CScalar::conj).collect()
}

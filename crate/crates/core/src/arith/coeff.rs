use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring elements usable as polynomial coefficients.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        let n = v.unsigned_abs();
        // only used for small derivative factors
        for _ in 0..n {
            acc = acc.add(&one);
        }
        if v < 0 {
            acc.neg()
        } else {
            acc
        }
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Integral domains with a division that succeeds exactly when the quotient exists.
pub trait ExactDiv: Coeff {
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

/// Fields.
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Self;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn pow(&self, e: u32) -> Self {
        num_traits::Pow::pow(self, e)
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn pow(&self, e: u32) -> Self {
        num_traits::Pow::pow(self, e as i32)
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

impl FieldCoeff for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Number of bits of `|n|`; zero has bitsize 0.
pub fn int_bitsize(n: &BigInt) -> u64 {
    n.abs().bits()
}

/// Bitsize of a rational: the larger of numerator and denominator bitsizes.
pub fn rat_bitsize(q: &BigRational) -> u64 {
    int_bitsize(q.numer()).max(int_bitsize(q.denom()))
}

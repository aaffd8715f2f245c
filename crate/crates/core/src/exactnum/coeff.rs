use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Coefficient ring for [`Poly`](super::Poly).
///
/// The arithmetic methods take references so that big-number coefficients are
/// not cloned on every operation.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Coefficient ring in which every nonzero element is invertible.
pub trait FieldCoeff: Coeff {
    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;
}

/// A prime field, with enough structure for factoring over it.
pub trait FiniteField: FieldCoeff {
    const CHARACTERISTIC: u64;

    fn from_u64(v: u64) -> Self;
    fn to_u64(&self) -> u64;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl FieldCoeff for BigRational {
    fn inverse(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}

/// Element of the prime field `Z/PZ`. `P` must be prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Zp<const P: u64>(u64);

/// The field with two elements.
pub type Gf2 = Zp<2>;

impl<const P: u64> Zp<P> {
    pub const fn new(v: u64) -> Self {
        Zp(v % P)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Zp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = Zp(mulmod(acc.0, base.0, P));
            }
            base = Zp(mulmod(base.0, base.0, P));
            e >>= 1;
        }
        acc
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl<const P: u64> fmt::Debug for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> FromStr for Zp<P> {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: i64 = s.trim().parse()?;
        Ok(Self::from_i64(v))
    }
}

impl<const P: u64> Coeff for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn one() -> Self {
        Zp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Zp(v.rem_euclid(P as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, other: &Self) -> Self {
        Zp(((self.0 as u128 + other.0 as u128) % P as u128) as u64)
    }
    fn minus(&self, other: &Self) -> Self {
        Zp(((self.0 as u128 + P as u128 - other.0 as u128) % P as u128) as u64)
    }
    fn times(&self, other: &Self) -> Self {
        Zp(mulmod(self.0, other.0, P))
    }
    fn negated(&self) -> Self {
        Zp((P - self.0) % P)
    }
}

impl<const P: u64> FieldCoeff for Zp<P> {
    fn inverse(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(P - 2)
    }
}

impl<const P: u64> FiniteField for Zp<P> {
    const CHARACTERISTIC: u64 = P;

    fn from_u64(v: u64) -> Self {
        Zp(v % P)
    }
    fn to_u64(&self) -> u64 {
        self.0
    }
}

/// Reduces an integer modulo the prime `P`.
pub fn reduce_int<const P: u64>(v: &BigInt) -> Zp<P> {
    let m = BigInt::from(P);
    let mut r = v % &m;
    if r.is_negative() {
        r += &m;
    }
    Zp(u64::try_from(r).expect("residue fits in u64"))
}

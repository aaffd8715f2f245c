use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::coeff::{reduce_int, Coeff, FieldCoeff, Zp};
use crate::error::{Error, Result};

/// Univariate polynomial with coefficients stored constant-first.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector and `coeffs.len() - 1` is the degree of anything else.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;
pub type Gf2Poly = Poly<Zp<2>>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn x() -> Self {
        Poly::monomial(C::one(), 1)
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| C::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&C::from_i64(i as i64)))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        )
    }

    /// `x^n p(1/x)` for `n = deg p`; trailing zeros of `p` become leading
    /// zeros and are stripped, so the degree drops when `p(0) = 0`.
    pub fn reverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Poly::new(self.coeffs.iter().rev().cloned().collect()))
    }

    /// Reciprocity in the sense `p(x) = x^n p(1/x) / a_n` where `a_n = p(0)`.
    ///
    /// Equivalent to `reverse(p) = p(0) * p`, which avoids division and so
    /// works over any coefficient ring.
    pub fn is_reciprocal(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let a_n = self.constant_term();
        if a_n.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(self.reverse()? == self.scale(&a_n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Human-readable rendering such as `x^3 - x^2 - x - 1`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag == "1";
            match i {
                0 => out.push_str(&mag),
                _ => {
                    if !unit {
                        out.push_str(&mag);
                        out.push('*');
                    }
                    out.push('x');
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<C: FieldCoeff> Poly<C> {
    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let lead_inv = divisor.coeffs[dd].inverse();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].times(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&c.times(d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inverse()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inverse();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `base^e mod self`.
    pub fn powmod(&self, base: &Self, mut e: u64) -> Self {
        let mut b = base.rem(self).expect("nonzero modulus");
        let mut acc = Poly::one().rem(self).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &b).rem(self).expect("nonzero modulus");
            }
            e >>= 1;
            if e > 0 {
                b = (&b * &b).rem(self).expect("nonzero modulus");
            }
        }
        acc
    }
}

impl IntPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn reduce_mod<const P: u64>(&self) -> Poly<Zp<P>> {
        self.map(reduce_int::<P>)
    }

    /// Largest absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl RatPoly {
    /// The same polynomial over the integers, if every coefficient is integral.
    pub fn to_integer(&self) -> Result<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotIntegral)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }
}

impl Poly<Zp<2>> {
    /// Lifts a GF(2) polynomial to the integer polynomial with 0/1 coefficients.
    pub fn lift_01(&self) -> IntPoly {
        self.map(|c| BigInt::from(c.value()))
    }

    /// Polynomial whose coefficients are the bits of `bits`, bit `i` at `x^i`.
    pub fn from_bits(bits: u64) -> Self {
        Poly::new((0..64).map(|i| Zp::new((bits >> i) & 1)).collect())
    }

    pub fn to_bits(&self) -> u64 {
        assert!(self.coeffs.len() <= 64, "degree too large for a bit mask");
        self.coeffs
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, c)| acc | (c.value() << i))
    }

    pub fn is_palindromic(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Constant-first comma list, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

impl<C: Coeff + FromStr> FromStr for Poly<C> {
    type Err = Error;

    /// Parses a constant-first comma list such as `-1,-1,-1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut column = 1;
        for part in s.split(',') {
            let trimmed = part.trim();
            let c = trimmed.parse::<C>().map_err(|_| Error::Parse {
                line: 1,
                column,
                message: format!("invalid coefficient `{trimmed}`"),
            })?;
            coeffs.push(c);
            column += part.len() + 1;
        }
        Ok(Poly::new(coeffs))
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).plus(&rhs.coeff(i))).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).minus(&rhs.coeff(i))).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|c| c.negated()).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Gf2;

    fn qp(cs: &[i64]) -> RatPoly {
        Poly::from_i64s(cs)
    }

    #[test]
    fn gcd_of_common_linear_factor() {
        let g = qp(&[-1, 0, 1]).gcd(&qp(&[-1, 1]));
        assert_eq!(g, qp(&[-1, 1]));
    }

    #[test]
    fn divrem_by_x() {
        let (q, r) = qp(&[1, -3, 1]).divrem(&qp(&[0, 1])).unwrap();
        assert_eq!(q, qp(&[-3, 1]));
        assert_eq!(r, qp(&[1]));
    }

    #[test]
    fn divrem_by_zero_fails() {
        assert_eq!(qp(&[1, 2]).divrem(&Poly::zero()), Err(Error::DivisionByZeroPolynomial));
    }

    #[test]
    fn gf2_reduction_then_product() {
        let m: IntPoly = Poly::from_i64s(&[-1, -1, -1, 1]);
        let prod = &m.reduce_mod::<2>() * &Poly::<Gf2>::from_i64s(&[1, 1]);
        // (x + 1)^3 (x + 1) = (x + 1)^4 = x^4 + 1 over GF(2)
        assert_eq!(prod, Poly::from_i64s(&[1, 0, 0, 0, 1]));
        // brute-force convolution of the bit patterns
        let (a, b) = (0b1111u64, 0b11u64);
        let mut conv = 0u64;
        for i in 0..4 {
            if (a >> i) & 1 == 1 {
                conv ^= b << i;
            }
        }
        assert_eq!(prod.to_bits(), conv);
    }

    #[test]
    fn reverse_examples() {
        let p: IntPoly = Poly::from_i64s(&[-1, -1, -1, 1]);
        let r = p.reverse().unwrap();
        assert_eq!(r, Poly::from_i64s(&[1, -1, -1, -1]));
        // x^3 p(1/x) at x = 2 equals 8 * p(1/2)
        let two = BigRational::from_integer(2.into());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            r.to_rational().eval(&two),
            BigRational::from_integer(8.into()) * p.to_rational().eval(&half)
        );
        let pal: IntPoly = Poly::from_i64s(&[1, -3, 1]);
        assert_eq!(pal.reverse().unwrap(), pal);
        let x: IntPoly = Poly::x();
        assert_eq!(x.reverse().unwrap(), Poly::one());
        assert_eq!(IntPoly::zero().reverse(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reciprocity_examples() {
        let rec = |cs: &[i64]| Poly::<BigInt>::from_i64s(cs).is_reciprocal();
        assert_eq!(rec(&[1, -3, 1]), Ok(true));
        assert_eq!(rec(&[-1, -1, -1, 1]), Ok(false));
        assert_eq!(rec(&[-1, 1]), Ok(true));
        assert_eq!(rec(&[-2, 1]), Ok(false));
        assert_eq!(rec(&[1, 2]), Err(Error::NotMonic));
        assert_eq!(rec(&[0, 1]), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = qp(&[-1, -1, 1, 1, 2]);
        let b = qp(&[3, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(g.is_one());
    }

    #[test]
    fn parse_and_display_constant_first() {
        let p: RatPoly = "1/2, -3,0,1".parse().unwrap();
        assert_eq!(p.to_string(), "1/2,-3,0,1");
        assert_eq!(p.degree(), Some(3));
        assert_eq!(qp(&[-1, -1, -1, 1]).to_pretty(), "x^3 - x^2 - x - 1");
        assert!("1,a".parse::<IntPoly>().is_err());
    }
}

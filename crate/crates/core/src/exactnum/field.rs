use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::coeff::Rational;
use super::finite::irreducibility_witness;
use super::poly::{IntPoly, Poly, RatPoly};
use super::sturm::{count_open, sign_of, strict_bracket, SturmSequence};
use crate::error::{Error, Result};

/// Bisection budget for a single sign determination.
pub const MAX_SIGN_BISECTIONS: usize = 1_000_000;

/// Working precision for the cached root bracket, as a power of two.
const APPROX_BITS: u64 = 64;

/// The real number field `Q(alpha) = Q[x]/(m)`, with `alpha` the unique root
/// of `m` inside a rational isolating interval.
///
/// Cloning is cheap; the data is shared.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

struct FieldData {
    modulus: IntPoly,
    qmod: RatPoly,
    root_interval: (Rational, Rational),
    /// `root_interval` bisected to width at most `2^-APPROX_BITS`.
    approx: (Rational, Rational),
    /// Sign of the modulus at `approx.0`.
    low_sign: i8,
    irreducible_mod: Option<u64>,
    /// Float shadow of `alpha^k` for `k < d`, for the fast sign path.
    powers: Option<FloatPowers>,
}

/// `approx[k]` is within `err[k]` of `alpha^k`.
struct FloatPowers {
    approx: Vec<f64>,
    err: Vec<f64>,
}

impl FloatPowers {
    fn new(d: usize, bracket: &(Rational, Rational)) -> Option<Self> {
        let (a, b) = bracket;
        let w = (b - a).to_f64()? * 2.0;
        let m = a.abs().max(b.abs()).to_f64()? * (1.0 + 1e-12);
        let p = ((a + b) / Rational::from_integer(2.into())).to_f64()?;
        let mut approx = Vec::with_capacity(d);
        let mut err = Vec::with_capacity(d);
        let (mut pk, mut mk) = (1.0f64, 1.0f64);
        for k in 0..d {
            // bracket width plus accumulated rounding of the repeated product
            let e = (k as f64) * (mk / m.max(f64::MIN_POSITIVE)) * w + (k as f64 + 2.0) * 4.0 * f64::EPSILON * mk;
            if !(pk.is_finite() && e.is_finite()) {
                return None;
            }
            approx.push(pk);
            err.push(if k == 0 { 0.0 } else { e * 2.0 });
            pk *= p;
            mk *= m;
        }
        Some(FloatPowers { approx, err })
    }
}

impl NumberField {
    /// Builds `Q(alpha)` for the root of `modulus` lying in `(lo, hi)`.
    ///
    /// The modulus must be monic, integral and squarefree, and the open
    /// interval must contain exactly one of its real roots. Irreducibility is
    /// certified when the modulus stays irreducible modulo one of the
    /// [`TRIAL_PRIMES`](super::finite::TRIAL_PRIMES); otherwise the field is
    /// flagged and zero divisors surface as errors from [`AlgNum::inv`].
    pub fn new(modulus: &IntPoly, lo: &Rational, hi: &Rational) -> Result<Self> {
        let d = modulus.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Err(Error::InvalidArgument("modulus must have positive degree".into()));
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        let qmod = modulus.to_rational();
        if !qmod.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let sturm = SturmSequence::new(&qmod)?;
        let found = count_open(&sturm, lo, hi);
        if found != 1 {
            return Err(Error::RootCount { found });
        }
        let (a, b) = strict_bracket(&sturm, lo, hi);
        let low_sign = sign_of(&qmod.eval(&a));
        let mut data = FieldData {
            modulus: modulus.clone(),
            qmod,
            root_interval: (a.clone(), b.clone()),
            approx: (a, b),
            low_sign,
            irreducible_mod: irreducibility_witness(modulus),
            powers: None,
        };
        let target = Rational::new(BigInt::one(), BigInt::one() << APPROX_BITS);
        data.approx = refine(&data.qmod, data.low_sign, data.approx.clone(), &target);
        data.powers = FloatPowers::new(d, &data.approx);
        Ok(NumberField(Arc::new(data)))
    }

    /// Same field with its stored isolating interval bisected to width at
    /// most `width`.
    pub fn with_refined_interval(&self, width: &Rational) -> Self {
        let data = &self.0;
        let root_interval = refine(&data.qmod, data.low_sign, data.root_interval.clone(), width);
        NumberField(Arc::new(FieldData {
            modulus: data.modulus.clone(),
            qmod: data.qmod.clone(),
            root_interval,
            approx: data.approx.clone(),
            low_sign: data.low_sign,
            irreducible_mod: data.irreducible_mod,
            powers: FloatPowers::new(self.degree(), &data.approx),
        }))
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.degree().expect("nonzero modulus")
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.0.modulus
    }

    pub fn root_interval(&self) -> &(Rational, Rational) {
        &self.0.root_interval
    }

    /// A prime modulo which the modulus is irreducible, if one was found.
    pub fn irreducibility_certificate(&self) -> Option<u64> {
        self.0.irreducible_mod
    }

    pub fn is_irreducibility_verified(&self) -> bool {
        self.0.irreducible_mod.is_some()
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<AlgNum> {
        if coords.len() != self.degree() {
            return Err(Error::CoordinateCount {
                expected: self.degree(),
                found: coords.len(),
            });
        }
        Ok(AlgNum {
            field: self.clone(),
            coords,
        })
    }

    /// Element from a polynomial in `alpha` of any degree, reduced.
    pub fn from_poly(&self, p: &RatPoly) -> AlgNum {
        let r = p.rem(&self.0.qmod).expect("nonzero modulus");
        let mut coords = r.into_coeffs();
        coords.resize(self.degree(), Rational::zero());
        AlgNum {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_rational(&self, q: Rational) -> AlgNum {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = q;
        AlgNum {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_int(&self, n: i64) -> AlgNum {
        self.from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero(&self) -> AlgNum {
        self.from_int(0)
    }

    pub fn one(&self) -> AlgNum {
        self.from_int(1)
    }

    /// The distinguished root `alpha`.
    pub fn generator(&self) -> AlgNum {
        self.from_poly(&Poly::x())
    }

    /// Parses a comma list of exactly `degree` rationals.
    pub fn parse_element(&self, s: &str) -> Result<AlgNum> {
        let coords = parse_rationals(s)?;
        self.element(coords)
    }

    /// Bracket of width at most `2^-64` around `alpha`.
    pub fn root_approx(&self) -> &(Rational, Rational) {
        &self.0.approx
    }

    fn same_root(&self, other: &NumberField) -> bool {
        let lo = (&self.0.approx.0).max(&other.0.approx.0);
        let hi = (&self.0.approx.1).min(&other.0.approx.1);
        if lo >= hi {
            return false;
        }
        let q = &self.0.qmod;
        sign_of(&q.eval(lo)) * sign_of(&q.eval(hi)) < 0
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.modulus == other.0.modulus && self.same_root(other))
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = &self.0.root_interval;
        write!(f, "Q[x]/({}) @ ({lo}, {hi})", self.0.modulus.to_pretty())
    }
}

/// Parses a comma-separated list of rationals (`p` or `p/q`).
pub fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut column = 1;
    for part in s.split(',') {
        let t = part.trim();
        let v = t.parse::<Rational>().map_err(|_| Error::Parse {
            line: 1,
            column,
            message: format!("invalid rational `{t}`"),
        })?;
        out.push(v);
        column += part.len() + 1;
    }
    Ok(out)
}

/// Bisects a sign-changing bracket of `p` until its width is at most `width`.
fn refine(p: &RatPoly, low_sign: i8, (mut a, mut b): (Rational, Rational), width: &Rational) -> (Rational, Rational) {
    let two = Rational::from_integer(2.into());
    while &(&b - &a) > width {
        let mid = (&a + &b) / &two;
        match sign_of(&p.eval(&mid)) {
            0 => {
                // rational root: keep it strictly inside, endpoints off it
                a = (&a + &mid) / &two;
                b = (&mid + &b) / &two;
            }
            s if s == low_sign => a = mid,
            _ => b = mid,
        }
    }
    (a, b)
}

/// Element of a [`NumberField`] in the power basis `1, alpha, ..., alpha^(d-1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgNum {
    field: NumberField,
    coords: Vec<Rational>,
}

impl AlgNum {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    pub fn to_poly(&self) -> RatPoly {
        Poly::new(self.coords.clone())
    }

    fn check_field(&self, other: &AlgNum) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &AlgNum) -> Result<AlgNum> {
        self.check_field(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &AlgNum) -> Result<AlgNum> {
        self.check_field(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn try_mul(&self, other: &AlgNum) -> Result<AlgNum> {
        self.check_field(other)?;
        let d = self.coords.len();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        // alpha^d = -(m_0 + m_1 alpha + ... + m_{d-1} alpha^{d-1})
        let m = self.field.modulus().coeffs();
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in m[..d].iter().enumerate() {
                if !mj.is_zero() {
                    prod[k - d + j] -= &c * Rational::from_integer(mj.clone());
                }
            }
        }
        prod.truncate(d);
        Ok(AlgNum {
            field: self.field.clone(),
            coords: prod,
        })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// modulus. A nontrivial gcd proves the modulus reducible and is reported.
    pub fn inv(&self) -> Result<AlgNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.to_poly().ext_gcd(&self.field.0.qmod);
        if !g.is_one() {
            return Err(Error::ReducibleModulus { factor: g.to_pretty() });
        }
        Ok(self.field.from_poly(&s))
    }

    pub fn try_div(&self, other: &AlgNum) -> Result<AlgNum> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> AlgNum {
        AlgNum {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn add_rational(&self, q: &Rational) -> AlgNum {
        let mut coords = self.coords.clone();
        coords[0] += q;
        AlgNum {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn pow(&self, e: u32) -> AlgNum {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn zip_with(&self, other: &AlgNum, f: impl Fn(&Rational, &Rational) -> Rational) -> AlgNum {
        AlgNum {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Exact sign of the real value at the distinguished root.
    ///
    /// Tries a float evaluation with a forward error bound first. Otherwise
    /// evaluates the coordinate polynomial over a rational bracket of the root
    /// with interval arithmetic and bisects the bracket until the enclosure
    /// excludes zero.
    pub fn sign(&self) -> Result<Ordering> {
        if let Some(q) = self.as_rational() {
            return Ok(q.cmp(&Rational::zero()));
        }
        match self.float_sign() {
            Some(o) => Ok(o),
            None => self.exact_sign(),
        }
    }

    /// Interval Horner evaluation on ever finer brackets of the root.
    fn exact_sign(&self) -> Result<Ordering> {
        let data = &self.field.0;
        let (mut a, mut b) = data.approx.clone();
        let two = Rational::from_integer(2.into());
        for _ in 0..MAX_SIGN_BISECTIONS {
            let (lo, hi) = interval_eval(&self.coords, &a, &b);
            if lo.is_positive() {
                return Ok(Ordering::Greater);
            }
            if hi.is_negative() {
                return Ok(Ordering::Less);
            }
            let mid = (&a + &b) / &two;
            match sign_of(&data.qmod.eval(&mid)) {
                0 => {
                    // the root is `mid` itself, so the value is exact
                    let v = Poly::new(self.coords.clone()).eval(&mid);
                    if v.is_zero() {
                        return Err(Error::ReducibleModulus {
                            factor: format!("x - {mid}"),
                        });
                    }
                    return Ok(v.cmp(&Rational::zero()));
                }
                s if s == data.low_sign => a = mid,
                _ => b = mid,
            }
        }
        Err(Error::SignUndetermined(MAX_SIGN_BISECTIONS))
    }

    /// Sign from the float shadow when it is decided by a margin well above
    /// the forward error bound.
    fn float_sign(&self) -> Option<Ordering> {
        let fp = self.field.0.powers.as_ref()?;
        let n = self.coords.len() as f64;
        let (mut sum, mut bound) = (0.0f64, 0.0f64);
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = c.to_f64()?;
            if !cf.is_finite() || cf == 0.0 || cf.abs() < f64::MIN_POSITIVE {
                return None;
            }
            let term = cf * fp.approx[k];
            sum += term;
            bound += cf.abs() * fp.err[k] + (n + 4.0) * 4.0 * f64::EPSILON * term.abs();
        }
        let bound = bound * 2.0 + f64::MIN_POSITIVE;
        if !(sum.is_finite() && bound.is_finite()) || sum.abs() <= bound {
            return None;
        }
        Some(if sum > 0.0 { Ordering::Greater } else { Ordering::Less })
    }

    pub fn cmp_value(&self, other: &AlgNum) -> Result<Ordering> {
        self.try_sub(other)?.sign()
    }

    pub fn is_positive(&self) -> Result<bool> {
        Ok(self.sign()? == Ordering::Greater)
    }

    pub fn is_negative(&self) -> Result<bool> {
        Ok(self.sign()? == Ordering::Less)
    }

    /// Floating approximation from the cached root bracket. Display only.
    pub fn to_f64(&self) -> f64 {
        let (a, b) = &self.field.0.approx;
        let mid = (a + b) / Rational::from_integer(2.into());
        Poly::new(self.coords.clone()).eval(&mid).to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal approximation with `digits` significant digits in scientific
    /// notation, computed from a rigorous enclosure. Display only.
    pub fn to_decimal(&self, digits: usize) -> String {
        let (mut a, mut b) = self.field.0.approx.clone();
        let two = Rational::from_integer(2.into());
        let scale = Rational::from_integer(BigInt::from(10).pow(digits as u32 + 4));
        let data = &self.field.0;
        let mut value;
        loop {
            let (lo, hi) = interval_eval(&self.coords, &a, &b);
            value = (&lo + &hi) / &two;
            let width = &hi - &lo;
            let mag = value.abs();
            if width.is_zero() || (!mag.is_zero() && &width * &scale < mag) {
                break;
            }
            if mag.is_zero() && width < Rational::new(BigInt::one(), BigInt::from(10).pow(200)) {
                break;
            }
            let mid = (&a + &b) / &two;
            match sign_of(&data.qmod.eval(&mid)) {
                0 => {
                    value = Poly::new(self.coords.clone()).eval(&mid);
                    break;
                }
                s if s == data.low_sign => a = mid,
                _ => b = mid,
            }
        }
        format_scientific(&value, digits)
    }
}

/// Enclosure of `sum c_i x^i` for `x` in `[a, b]` by interval Horner.
fn interval_eval(coords: &[Rational], a: &Rational, b: &Rational) -> (Rational, Rational) {
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    for c in coords.iter().rev() {
        let products = [&lo * a, &lo * b, &hi * a, &hi * b];
        let min = products.iter().min().expect("nonempty").clone();
        let max = products.iter().max().expect("nonempty").clone();
        lo = min + c;
        hi = max + c;
    }
    (lo, hi)
}

fn format_scientific(v: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if v.is_zero() {
        return "0".to_string();
    }
    let neg = v.is_negative();
    let mag = v.abs();
    let ten = Rational::from_integer(10.into());
    let mut exp: i64 = 0;
    let mut scaled = mag.clone();
    while scaled >= ten {
        scaled /= &ten;
        exp += 1;
    }
    while scaled < Rational::one() {
        scaled *= &ten;
        exp -= 1;
    }
    let shift = Rational::from_integer(BigInt::from(10).pow(digits as u32 - 1));
    let mut mantissa = (scaled * shift).round().to_integer();
    if mantissa >= BigInt::from(10).pow(digits as u32) {
        mantissa = mantissa.div_floor(&BigInt::from(10));
        exp += 1;
    }
    let s = mantissa.to_string();
    let (head, tail) = s.split_at(1);
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{exp}")
    } else {
        format!("{sign}{head}.{tail}e{exp}")
    }
}

impl fmt::Display for AlgNum {
    /// Comma list of power-basis coordinates in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgNum[{self}]")
    }
}

// Operator forms panic on a field mismatch; use the `try_*` methods when the
// operands may come from different fields.
impl Add for &AlgNum {
    type Output = AlgNum;
    fn add(self, rhs: &AlgNum) -> AlgNum {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for &AlgNum {
    type Output = AlgNum;
    fn sub(self, rhs: &AlgNum) -> AlgNum {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &AlgNum {
    type Output = AlgNum;
    fn mul(self, rhs: &AlgNum) -> AlgNum {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ay(g: usize) -> NumberField {
        let mut cs = vec![1i64; g + 1];
        cs[0] = -1;
        NumberField::new(&Poly::from_i64s(&cs), &q(0, 1), &q(1, 1)).unwrap()
    }

    #[test]
    fn float_sign_agrees_with_bisection() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for g in [3, 5, 8] {
            let k = ay(g);
            for _ in 0..200 {
                let coords = (0..g)
                    .map(|_| q(rng.gen_range(-50..=50), rng.gen_range(1..=9)))
                    .collect();
                let x = k.element(coords).unwrap();
                if let Some(o) = x.float_sign() {
                    assert_eq!(Ok(o), x.exact_sign());
                }
            }
            // a rational bracket end within 2^-90 of alpha: beyond float reach
            let fine = k.with_refined_interval(&Rational::new(1.into(), BigInt::one() << 90));
            let (lo, hi) = fine.root_interval().clone();
            let below = k.generator().neg().add_rational(&lo);
            let above = k.generator().neg().add_rational(&hi);
            assert_eq!(below.float_sign(), None);
            assert_eq!(below.sign(), Ok(Ordering::Less));
            assert_eq!(above.sign(), Ok(Ordering::Greater));
        }
    }

    #[test]
    fn field_construction_errors() {
        let sq: IntPoly = Poly::from_i64s(&[1, -2, 1]);
        assert_eq!(
            NumberField::new(&sq, &q(0, 1), &q(2, 1)).err(),
            Some(Error::NotSquarefree)
        );
        let two_roots: IntPoly = Poly::from_i64s(&[-2, 0, 1]);
        assert_eq!(
            NumberField::new(&two_roots, &q(-2, 1), &q(2, 1)).err(),
            Some(Error::RootCount { found: 2 })
        );
        let nm: IntPoly = Poly::from_i64s(&[-1, 2]);
        assert_eq!(NumberField::new(&nm, &q(0, 1), &q(1, 1)).err(), Some(Error::NotMonic));
        assert_eq!(
            NumberField::new(&two_roots, &q(1, 1), &q(1, 1)).err(),
            Some(Error::EmptyInterval)
        );
    }

    #[test]
    fn ay_cubic_relation() {
        let k = ay(3);
        assert_eq!(k.degree(), 3);
        assert!(k.is_irreducibility_verified());
        let a = k.generator();
        let s = &(&a + &a.pow(2)) + &a.pow(3);
        assert_eq!(s, k.one());
        assert_eq!(a.pow(3).coords(), &[q(1, 1), q(-1, 1), q(-1, 1)]);
        assert_eq!(&a * &a.inv().unwrap(), k.one());
    }

    #[test]
    fn golden_square_trace() {
        let m: IntPoly = Poly::from_i64s(&[1, -3, 1]);
        let k = NumberField::new(&m, &q(2, 1), &q(3, 1)).unwrap();
        let l = k.generator();
        assert_eq!(&l + &l.inv().unwrap(), k.from_int(3));
    }

    #[test]
    fn signs() {
        let k3 = ay(3);
        assert_eq!(k3.zero().sign(), Ok(Ordering::Equal));
        let a = k3.generator();
        assert_eq!(a.add_rational(&q(-1, 2)).sign(), Ok(Ordering::Greater));
        let k4 = ay(4);
        assert_eq!(k4.generator().add_rational(&q(-1, 1)).sign(), Ok(Ordering::Less));
        // alpha_3 ~ 0.5437, alpha_4 ~ 0.5188
        assert!((a.to_f64() - 0.543689).abs() < 1e-6);
        assert!((k4.generator().to_f64() - 0.518790).abs() < 1e-6);
    }

    #[test]
    fn reducible_modulus_detected_on_inversion() {
        // (x^2 - 2)(x^2 - 3), root sqrt 2
        let m: IntPoly = Poly::from_i64s(&[6, 0, -5, 0, 1]);
        let k = NumberField::new(&m, &q(1, 1), &q(3, 2)).unwrap();
        assert!(!k.is_irreducibility_verified());
        let a = k.generator();
        let zero_divisor = &(&a * &a) - &k.from_int(3);
        assert!(matches!(zero_divisor.inv(), Err(Error::ReducibleModulus { .. })));
        assert_eq!(k.zero().inv().err(), Some(Error::DivisionByZero));
    }

    #[test]
    fn field_identity_by_root() {
        let k = ay(3);
        let k2 = NumberField::new(k.modulus(), &q(1, 2), &q(3, 5)).unwrap();
        assert_eq!(k, k2);
        let m: IntPoly = Poly::from_i64s(&[-2, 0, 1]);
        let pos = NumberField::new(&m, &q(0, 1), &q(2, 1)).unwrap();
        let neg = NumberField::new(&m, &q(-2, 1), &q(0, 1)).unwrap();
        assert_ne!(pos, neg);
        assert_eq!(
            pos.generator().try_add(&neg.generator()).err(),
            Some(Error::FieldMismatch)
        );
        assert_eq!(neg.generator().sign(), Ok(Ordering::Less));
    }

    #[test]
    fn decimal_display() {
        let k = ay(3);
        assert_eq!(k.generator().to_decimal(10), "5.436890127e-1");
        assert_eq!(k.from_int(-3).to_decimal(3), "-3.00e0");
    }

    #[test]
    fn parse_element_checks_length() {
        let k = ay(3);
        assert_eq!(k.parse_element("1/2,0,1").unwrap().coords()[0], q(1, 2));
        assert_eq!(
            k.parse_element("1,2").err(),
            Some(Error::CoordinateCount { expected: 3, found: 2 })
        );
    }
}

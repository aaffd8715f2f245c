//! Real root counting and isolation with Sturm sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::Rational;
use super::poly::RatPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<RatPoly>,
}

impl SturmSequence {
    /// Builds `p, p', -rem(p, p'), ...`. Requires `p` nonzero.
    pub fn new(p: &RatPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut seq = vec![p.clone()];
        let mut prev = p.clone();
        let mut cur = p.derivative();
        while !cur.is_zero() {
            let r = prev.rem(&cur)?;
            seq.push(cur.clone());
            prev = cur;
            cur = -&r;
        }
        Ok(SturmSequence { seq })
    }

    pub fn sign_changes(&self, x: &Rational) -> usize {
        let mut changes = 0;
        let mut last = 0i8;
        for p in &self.seq {
            let v = p.eval(x);
            let s = sign_of(&v);
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.sign_changes(lo).saturating_sub(self.sign_changes(hi))
    }

    pub fn poly(&self) -> &RatPoly {
        &self.seq[0]
    }
}

pub(crate) fn sign_of(v: &Rational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Every real root has absolute value below this bound (Cauchy).
pub fn root_bound(p: &RatPoly) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Disjoint intervals `(a, b]`, ascending, each containing exactly one real
/// root of the squarefree polynomial `p` inside `(lo, hi]`, covering all of
/// them.
pub fn sturm_isolate(p: &RatPoly, lo: &Rational, hi: &Rational) -> Result<Vec<(Rational, Rational)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let sturm = SturmSequence::new(p)?;
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    let two = Rational::from_integer(BigInt::from(2));
    while let Some((a, b)) = stack.pop() {
        match sturm.count(&a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Number of distinct roots in the open interval `(lo, hi)`.
pub fn count_open(sturm: &SturmSequence, lo: &Rational, hi: &Rational) -> usize {
    let half_open = sturm.count(lo, hi);
    if sturm.poly().eval(hi).is_zero() {
        half_open - 1
    } else {
        half_open
    }
}

/// Shrinks an interval holding exactly one root in its interior until neither
/// endpoint is a root, so the polynomial changes sign across it.
pub(crate) fn strict_bracket(sturm: &SturmSequence, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let p = sturm.poly();
    let two = BigRational::from_integer(BigInt::from(2));
    let (mut a, mut b) = (lo.clone(), hi.clone());
    while p.eval(&a).is_zero() || p.eval(&b).is_zero() {
        let mid = (&a + &b) / &two;
        if p.eval(&mid).is_zero() {
            let quarter = (&b - &a) / BigRational::from_integer(BigInt::from(4));
            return (&mid - &quarter, &mid + &quarter);
        }
        if count_open(sturm, &a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Poly;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn ay_cubic_has_one_root_in_unit_interval() {
        let p: RatPoly = Poly::from_i64s(&[-1, 1, 1, 1]);
        let roots = sturm_isolate(&p, &q(0), &q(1)).unwrap();
        assert_eq!(roots.len(), 1);
        let (a, b) = &roots[0];
        assert!(p.eval(a) * p.eval(b) <= q(0));
    }

    #[test]
    fn sqrt_two() {
        let p: RatPoly = Poly::from_i64s(&[-2, 0, 1]);
        let roots = sturm_isolate(&p, &q(0), &q(2)).unwrap();
        assert_eq!(roots.len(), 1);
        let (a, b) = &roots[0];
        assert!(a * a < q(2) && q(2) <= b * b);
    }

    #[test]
    fn no_real_roots() {
        let p: RatPoly = Poly::from_i64s(&[1, 0, 1]);
        assert!(sturm_isolate(&p, &q(-10), &q(10)).unwrap().is_empty());
    }

    #[test]
    fn separates_close_roots() {
        // (x - 1)(x - 1001/1000)(x + 3)
        let a: RatPoly = Poly::from_i64s(&[-1, 1]);
        let b = Poly::new(vec![Rational::new((-1001).into(), 1000.into()), q(1)]);
        let c: RatPoly = Poly::from_i64s(&[3, 1]);
        let p = &(&a * &b) * &c;
        let roots = sturm_isolate(&p, &q(-10), &q(10)).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.windows(2).all(|w| w[0].1 <= w[1].0));
    }

    #[test]
    fn rejects_non_squarefree() {
        let p: RatPoly = Poly::from_i64s(&[1, -2, 1]);
        assert_eq!(sturm_isolate(&p, &q(0), &q(2)), Err(Error::NotSquarefree));
    }

    #[test]
    fn strict_bracket_moves_off_rational_roots() {
        // roots 0, 1, 2; (0, 2) holds only 1, but 0 and 2 are roots
        let p: RatPoly = &(&Poly::from_i64s(&[0, 1]) * &Poly::from_i64s(&[-1, 1])) * &Poly::from_i64s(&[-2, 1]);
        let s = SturmSequence::new(&p).unwrap();
        assert_eq!(count_open(&s, &q(0), &q(2)), 1);
        let (a, b) = strict_bracket(&s, &q(0), &q(2));
        assert!(!p.eval(&a).is_zero() && !p.eval(&b).is_zero());
        assert!(a < q(1) && q(1) < b);
    }
}

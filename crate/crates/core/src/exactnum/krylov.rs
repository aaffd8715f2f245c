use num_traits::{One, Zero};

use super::coeff::Rational;
use super::field::AlgNum;
use super::poly::{Poly, RatPoly};

/// Monic minimal polynomial of `a` over `Q`.
///
/// Finds the first power `a^k` that is a rational combination of
/// `1, a, ..., a^(k-1)` by incremental Gaussian elimination on the
/// power-basis coordinate vectors, carrying the combination alongside.
pub fn krylov_min_poly(a: &AlgNum) -> RatPoly {
    let d = a.field().degree();
    // rows of (pivot column, reduced vector, combination of powers)
    let mut rows: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut power = a.field().one();
    for k in 0..=d {
        let mut v = power.coords().to_vec();
        let mut comb = vec![Rational::zero(); d + 1];
        comb[k] = Rational::one();
        for (pivot, rv, rc) in &rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = &v[*pivot] / &rv[*pivot];
            for (x, y) in v.iter_mut().zip(rv) {
                *x -= &f * y;
            }
            for (x, y) in comb.iter_mut().zip(rc) {
                *x -= &f * y;
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => {
                comb.truncate(k + 1);
                return Poly::new(comb);
            }
            Some(pivot) => rows.push((pivot, v, comb)),
        }
        power = &power * a;
    }
    unreachable!("d + 1 vectors in a d-dimensional space are dependent")
}

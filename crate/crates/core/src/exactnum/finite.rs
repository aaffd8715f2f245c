//! Polynomials over prime fields: irreducibility testing and complete
//! factorization (squarefree, distinct-degree, equal-degree).

use num_bigint::BigUint;
use num_traits::One;

use super::coeff::{FiniteField, Gf2};
use super::poly::{IntPoly, Poly};
use crate::error::{Error, Result};

/// Factorization into monic irreducibles with multiplicities, sorted by
/// degree and then by coefficients.
pub type Factorization<F> = Vec<(Poly<F>, usize)>;

/// Ben-Or test: `f` of degree `d` is irreducible iff
/// `gcd(x^(p^i) - x, f) = 1` for every `1 <= i <= d/2`.
pub fn is_irreducible<F: FiniteField>(f: &Poly<F>) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    let f = f.monic();
    let x = Poly::<F>::x();
    let mut h = x.rem(&f).expect("nonzero");
    for _ in 1..=d / 2 {
        h = f.powmod(&h, F::CHARACTERISTIC);
        if !f.gcd(&(&h - &x)).is_one() {
            return false;
        }
    }
    true
}

/// `f^(1/p)` for a polynomial whose derivative vanishes, i.e. one in `x^p`.
fn pth_root<F: FiniteField>(f: &Poly<F>) -> Poly<F> {
    let p = F::CHARACTERISTIC as usize;
    Poly::new(f.coeffs().iter().step_by(p).cloned().collect())
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with each
/// `g` squarefree, pairwise coprime, and `f = prod g^e`.
pub fn squarefree_decomposition<F: FiniteField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    sqf_rec(&f.monic(), 1, &mut out);
    out
}

fn sqf_rec<F: FiniteField>(f: &Poly<F>, mult: usize, out: &mut Vec<(Poly<F>, usize)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i * mult));
        }
        c = c.exact_div(&y);
        w = y;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        // what is left is a p-th power
        sqf_rec(&pth_root(&c), mult * F::CHARACTERISTIC as usize, out);
    }
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal
/// degree, returned as `(product, degree)`.
pub fn distinct_degree<F: FiniteField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = Poly::<F>::x();
    let mut h = x.clone();
    let mut d = 0;
    while let Some(deg) = rest.degree().filter(|&k| k > 0) {
        d += 1;
        if deg < 2 * d {
            out.push((rest.clone(), deg));
            break;
        }
        h = rest.powmod(&h, F::CHARACTERISTIC);
        let g = rest.gcd(&(&h - &x));
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
    }
    out
}

/// Polynomial whose coefficients are the base-`p` digits of `k`.
fn enumerate_poly<F: FiniteField>(mut k: u64) -> Poly<F> {
    let p = F::CHARACTERISTIC;
    let mut cs = Vec::new();
    while k > 0 {
        cs.push(F::from_u64(k % p));
        k /= p;
    }
    Poly::new(cs)
}

/// Splits a squarefree monic product of irreducibles all of degree `d`.
///
/// Cantor–Zassenhaus with the trace map in characteristic 2. Trial elements
/// are enumerated deterministically rather than drawn at random, so the
/// output is reproducible.
pub fn equal_degree<F: FiniteField>(f: &Poly<F>, d: usize) -> Vec<Poly<F>> {
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return vec![f.monic()];
    }
    let p = F::CHARACTERISTIC;
    let mut k = p;
    loop {
        let a = enumerate_poly::<F>(k);
        k += 1;
        let splitter = if p == 2 {
            // a + a^2 + a^4 + ... + a^(2^(d-1))
            let mut term = a.rem(f).expect("nonzero");
            let mut acc = term.clone();
            for _ in 1..d {
                term = (&term * &term).rem(f).expect("nonzero");
                acc = &acc + &term;
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
            &powmod_big(f, &a, &e) - &Poly::one()
        };
        let g = f.gcd(&splitter);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&f.exact_div(&g), d));
            return out;
        }
    }
}

fn powmod_big<F: FiniteField>(m: &Poly<F>, base: &Poly<F>, e: &BigUint) -> Poly<F> {
    let mut acc = Poly::one();
    for i in (0..e.bits()).rev() {
        acc = (&acc * &acc).rem(m).expect("nonzero");
        if e.bit(i) {
            acc = (&acc * base).rem(m).expect("nonzero");
        }
    }
    acc
}

fn sort_key<F: FiniteField>(p: &Poly<F>) -> (usize, Vec<u64>) {
    (
        p.degree().unwrap_or(0),
        p.coeffs().iter().rev().map(|c| c.to_u64()).collect(),
    )
}

/// Complete factorization of a nonzero polynomial into monic irreducibles.
/// The unit (leading coefficient) is dropped.
pub fn factor<F: FiniteField>(f: &Poly<F>) -> Result<Factorization<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out: Factorization<F> = Vec::new();
    for (sqf, mult) in squarefree_decomposition(f) {
        for (block, d) in distinct_degree(&sqf) {
            for irr in equal_degree(&block, d) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by_key(|(p, _)| sort_key(p));
    Ok(out)
}

/// Factorization over GF(2).
pub fn gf2_factor(p: &Poly<Gf2>) -> Result<Factorization<Gf2>> {
    factor(p)
}

/// Primes used for best-effort irreducibility certification over `Q`.
pub const TRIAL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Finds a prime from [`TRIAL_PRIMES`] modulo which the monic integer
/// polynomial `m` stays irreducible, which certifies irreducibility over `Q`.
pub fn irreducibility_witness(m: &IntPoly) -> Option<u64> {
    if !m.is_monic() {
        return None;
    }
    if m.degree() == Some(1) {
        return Some(2);
    }
    macro_rules! try_prime {
        ($p:literal) => {
            if is_irreducible(&m.reduce_mod::<$p>()) {
                return Some($p);
            }
        };
    }
    try_prime!(2);
    try_prime!(3);
    try_prime!(5);
    try_prime!(7);
    try_prime!(11);
    try_prime!(13);
    None
}

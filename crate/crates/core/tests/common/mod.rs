#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use saf_core::exactnum::{sturm::root_bound, sturm_isolate, IntPoly};
use saf_core::{AlgNum, Iet, NumberField, Poly, Rational};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_poly(cs: &[i64]) -> IntPoly {
    Poly::from_i64s(cs)
}

/// Monic cubic with no rational root, hence irreducible.
pub fn random_irreducible_cubic(rng: &mut impl Rng) -> IntPoly {
    loop {
        let c0: i64 = rng.gen_range(-7..=7);
        let c1: i64 = rng.gen_range(-7..=7);
        let c2: i64 = rng.gen_range(-7..=7);
        if c0 == 0 {
            continue;
        }
        let rational_root = (1..=c0.abs())
            .filter(|d| c0 % d == 0)
            .flat_map(|d| [d, -d])
            .any(|r| r * r * r + c2 * r * r + c1 * r + c0 == 0);
        if !rational_root {
            return int_poly(&[c0, c1, c2, 1]);
        }
    }
}

/// A field `Q(theta)` for a random real root `theta` of `m`.
pub fn field_at_random_root(m: &IntPoly, rng: &mut impl Rng) -> NumberField {
    let b = root_bound(&m.to_rational());
    let roots = sturm_isolate(&m.to_rational(), &-b.clone(), &b).unwrap();
    let (lo, hi) = roots.choose(rng).unwrap().clone();
    NumberField::new(m, &lo, &hi).unwrap()
}

pub fn random_cubic_field(rng: &mut impl Rng) -> NumberField {
    let m = random_irreducible_cubic(rng);
    field_at_random_root(&m, rng)
}

pub fn random_element(k: &NumberField, rng: &mut impl Rng) -> AlgNum {
    let coords = (0..k.degree())
        .map(|_| q(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
        .collect();
    k.element(coords).unwrap()
}

/// Random element with positive value.
pub fn random_positive(k: &NumberField, rng: &mut impl Rng) -> AlgNum {
    loop {
        let x = random_element(k, rng);
        match x.is_positive() {
            Ok(true) => return x,
            Ok(false) if !x.is_zero() => return -x,
            _ => continue,
        }
    }
}

pub fn random_perm(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random exchange with `n` pieces whose lengths sum to `total`.
pub fn random_iet_with_total(k: &NumberField, total: &AlgNum, n: usize, rng: &mut impl Rng) -> Iet {
    let raw: Vec<AlgNum> = (0..n).map(|_| random_positive(k, rng)).collect();
    let sum = raw.iter().fold(k.zero(), |a, b| &a + b);
    let factor = total.try_div(&sum).unwrap();
    let lengths: Vec<AlgNum> = raw.iter().map(|l| l * &factor).collect();
    Iet::new(k, total.clone(), lengths, random_perm(n, rng), true).unwrap()
}

pub fn random_iet(k: &NumberField, rng: &mut impl Rng) -> Iet {
    let n = rng.gen_range(1..=5);
    let total = random_positive(k, rng);
    random_iet_with_total(k, &total, n, rng)
}

/// Pair-involution on random equal-length block pairs, plus optional fixed blocks.
pub fn random_pair_involution(k: &NumberField, rng: &mut impl Rng) -> Iet {
    let pairs = rng.gen_range(1..=4);
    let fixed = rng.gen_range(0..=2);
    let mut blocks = Vec::new();
    for _ in 0..pairs {
        let l = random_positive(k, rng);
        blocks.push(l.clone());
        blocks.push(l);
    }
    for _ in 0..fixed {
        blocks.push(random_positive(k, rng));
    }
    // shuffle block positions, keeping track of partners
    let n = blocks.len();
    let order = random_perm(n, rng);
    let partner_of = |i: usize| -> usize {
        if i < 2 * pairs {
            i ^ 1
        } else {
            i
        }
    };
    let mut position = vec![0; n];
    for (pos, &b) in order.iter().enumerate() {
        position[b] = pos;
    }
    let placed: Vec<AlgNum> = order.iter().map(|&b| blocks[b].clone()).collect();
    let pairing: Vec<usize> = order.iter().map(|&b| position[partner_of(b)]).collect();
    Iet::pair_involution(k, placed, &pairing).unwrap()
}

/// The fields behind the AY family and a couple of fixed cubics.
pub fn corpus_fields() -> Vec<NumberField> {
    let mut out: Vec<NumberField> = (3..=8).map(|g| saf_core::ayfamily::ay_alpha(g).unwrap()).collect();
    out.push(NumberField::new(&int_poly(&[-1, -1, 0, 1]), &q(1, 1), &q(2, 1)).unwrap());
    out.push(NumberField::new(&int_poly(&[-2, 0, 0, 1]), &q(1, 1), &q(2, 1)).unwrap());
    out
}

/// Floating-point evaluation on the shadow `(starts, translations)` of an exchange.
pub fn float_eval((starts, translations): (&[f64], &[f64]), x: f64) -> f64 {
    let i = starts.iter().rposition(|&s| s <= x).unwrap_or(0);
    x + translations[i]
}

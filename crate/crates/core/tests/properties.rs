mod common;

use std::cmp::Ordering;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use saf_core::certificates::{nonlift_certificate, CertOutcome};
use saf_core::exactnum::{gf2_factor, krylov_min_poly, Gf2Poly};
use saf_core::iet::saf;
use saf_core::Iet;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complex roots by Durand–Kerner, as `(re, im)` pairs.
fn complex_roots(monic: &[f64]) -> Vec<(f64, f64)> {
    let n = monic.len() - 1;
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let div = |a: (f64, f64), b: (f64, f64)| {
        let d = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
    };
    let eval = |z: (f64, f64)| {
        monic.iter().rev().fold((0.0, 0.0), |acc, &c| {
            let m = mul(acc, z);
            (m.0 + c, m.1)
        })
    };
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let t = 0.4 + 0.9 * i as f64;
            (1.1 * t.cos(), 1.1 * t.sin())
        })
        .collect();
    for _ in 0..2000 {
        for i in 0..n {
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den = mul(den, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            let step = div(eval(z[i]), den);
            z[i] = (z[i].0 - step.0, z[i].1 - step.1);
        }
    }
    z
}

/// Root multiset closed under inversion, matched greedily.
fn roots_closed_under_inversion(cs: &[i64]) -> bool {
    let roots = complex_roots(&cs.iter().map(|&c| c as f64).collect::<Vec<_>>());
    let mut used = vec![false; roots.len()];
    for &(re, im) in &roots {
        let d = re * re + im * im;
        let inv = (re / d, -im / d);
        let hit = (0..roots.len())
            .filter(|&j| !used[j])
            .find(|&j| (roots[j].0 - inv.0).hypot(roots[j].1 - inv.1) < 1e-6);
        match hit {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}

fn gf2_irreducible_by_trial(f: &Gf2Poly) -> bool {
    let d = f.degree().unwrap();
    if d == 0 {
        return false;
    }
    (2u64..1 << (d / 2 + 1))
        .map(Gf2Poly::from_bits)
        .filter(|g| g.degree().is_some_and(|e| e >= 1 && e <= d / 2))
        .all(|g| !f.rem(&g).unwrap().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_cubic_field(&mut r);
        let (a, b, c) = (random_element(&k, &mut r), random_element(&k, &mut r), random_element(&k, &mut r));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &a), &k.zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), k.one());
        }
    }

    #[test]
    fn sign_matches_float(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_cubic_field(&mut r);
        let x = random_element(&k, &mut r);
        let f = x.to_f64();
        if f.abs() > 1e-6 {
            let expected = if f > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(x.sign().unwrap(), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn saf_is_a_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_cubic_field(&mut r);
        let f = random_iet(&k, &mut r);
        let n = r.gen_range(1..=5);
        let g = random_iet_with_total(&k, f.total(), n, &mut r);
        let lhs = saf(&f.compose(&g).unwrap());
        prop_assert_eq!(lhs, saf(&f).try_add(&saf(&g)).unwrap());
        prop_assert_eq!(saf(&f.inverse().unwrap()), saf(&f).neg());
        prop_assert!(f.check_bijection().unwrap());
    }

    #[test]
    fn involutions_and_rational_rotations_vanish(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_cubic_field(&mut r);
        let inv = random_pair_involution(&k, &mut r);
        prop_assert_eq!(inv.compose(&inv).unwrap(), Iet::identity(&k, inv.total().clone(), true).unwrap());
        prop_assert!(saf(&inv).is_zero());

        let theta = k.from_rational(q(r.gen_range(1..7), 7));
        let rot = Iet::rotation(&k, k.one(), theta).unwrap();
        prop_assert!(saf(&rot).is_zero());

        let half = inv.total().scale(&q(1, 2));
        let lifted = inv.rotate(&half).unwrap();
        prop_assert!(saf(&lifted).is_zero());
    }

    #[test]
    fn krylov_min_poly_annihilates(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_cubic_field(&mut r);
        let a = random_element(&k, &mut r);
        let m = krylov_min_poly(&a);
        prop_assert!(m.is_monic());
        prop_assert_eq!(k.degree() % m.degree().unwrap(), 0);
        let value = m.coeffs().iter().rev().fold(k.zero(), |acc, c| (&acc * &a).add_rational(c));
        prop_assert!(value.is_zero());
    }

    #[test]
    fn first_return_to_whole_domain_is_identity_on_maps(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_cubic_field(&mut r);
        let f = random_iet(&k, &mut r);
        let full = f.first_return_with_cap(f.total(), 10_000).unwrap();
        prop_assert_eq!(&full.map, &f);
        prop_assert_eq!(full.return_measure(), f.total().clone());
    }

    #[test]
    fn reverse_is_an_involution(cs in proptest::collection::vec(-9i64..=9, 1..7), c0 in prop_oneof![-9i64..=-1, 1i64..=9]) {
        let mut all = vec![c0];
        all.extend(cs);
        all.push(1);
        let p = int_poly(&all);
        prop_assert_eq!(p.reverse().unwrap().reverse().unwrap(), p);
    }

    #[test]
    fn reciprocity_matches_root_inversion(inner in proptest::collection::vec(-4i64..=4, 1..4), kind in 0u8..3) {
        // degree <= 4 monic with unit or arbitrary constant; sometimes forced palindromic
        let mut cs = vec![0i64; inner.len() + 2];
        let n = cs.len() - 1;
        cs[n] = 1;
        for (i, &c) in inner.iter().enumerate() {
            cs[i + 1] = c;
        }
        match kind {
            0 => {
                for i in 0..=n / 2 {
                    cs[i] = cs[n - i];
                }
            }
            1 => cs[0] = if inner[0] >= 0 { 1 } else { -1 },
            _ => cs[0] = inner[0] + 2,
        }
        prop_assume!(cs[0] != 0);
        let p = int_poly(&cs);
        prop_assume!(p.to_rational().is_squarefree());
        prop_assert_eq!(p.is_reciprocal().unwrap(), roots_closed_under_inversion(&cs));
    }

    #[test]
    fn gf2_factorization_is_complete(bits in 2u64..(1 << 13)) {
        let p = Gf2Poly::from_bits(bits);
        let fs = gf2_factor(&p).unwrap();
        let product = fs.iter().fold(Gf2Poly::one(), |acc, (f, e)| &acc * &f.pow(*e as u32));
        prop_assert_eq!(product, p);
        for (f, _) in &fs {
            prop_assert!(gf2_irreducible_by_trial(f));
        }
    }
}

#[test]
fn eval_matches_float_simulation() {
    let mut r = rng(5);
    let mut instances: Vec<Iet> = (3..=8).map(|g| saf_core::ayfamily::ay_lift(g).unwrap()).collect();
    for k in corpus_fields() {
        instances.push(random_iet(&k, &mut r));
    }
    for f in &instances {
        let (starts, translations, _) = f.to_f64();
        for _ in 0..1000 {
            let t = q(r.gen_range(0..1_000_000), 1_000_000);
            let x = f.total().scale(&t);
            let exact = f.eval(&x).unwrap().to_f64();
            let float = float_eval((&starts, &translations), x.to_f64());
            assert!(
                (exact - float).abs() <= 1e-9 * exact.abs() + 1e-12,
                "{exact} vs {float}"
            );
        }
    }
}

#[test]
fn certificate_inconclusive_is_monotone_in_genus() {
    let mut corpus: Vec<Vec<i64>> = vec![
        vec![-1, -1, 0, 1],
        vec![-1, -1, -1, 1],
        vec![1, -3, 1],
        vec![-1, -1, 1],
        vec![1, -1, -1, -1, 1],
    ];
    corpus.extend((3..=8).map(|g| {
        let mut cs = vec![-1i64; g + 1];
        cs[g] = 1;
        cs
    }));
    let mut r = rng(11);
    for _ in 0..20 {
        let mut cs: Vec<i64> = (0..4).map(|_| r.gen_range(-3..=3)).collect();
        cs[0] = if r.gen_bool(0.5) { 1 } else { -1 };
        cs.push(1);
        corpus.push(cs);
    }
    for cs in &corpus {
        let m = int_poly(cs);
        let d = cs.len() - 1;
        for g in d..=14 {
            let here = nonlift_certificate(&m, g).unwrap();
            let later = nonlift_certificate(&m, g + 2).unwrap();
            if matches!(here.outcome, CertOutcome::Inconclusive { .. }) {
                assert!(
                    matches!(later.outcome, CertOutcome::Inconclusive { .. }),
                    "{m} inconclusive at g={g} but certified at g={}",
                    g + 2
                );
            }
        }
    }
}

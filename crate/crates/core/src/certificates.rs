//! Polynomial criteria: SAF vanishing for a stretch factor and the mod-2
//! certificate excluding nonorientable lifts.
//!
//! Vanishing is decided two ways. With `m` the minimal polynomial of a
//! stretch factor `lambda > 1`, `[Q(lambda) : Q(lambda + 1/lambda)]` is 1 or 2,
//! and the SAF invariant vanishes exactly when it is 1. It is 2 exactly when
//! `1/lambda` is a Galois conjugate of `lambda`, i.e. when `m` is reciprocal.
//! So the invariant vanishes iff `m` is *not* reciprocal.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{
    gf2_factor, irreducibility_witness, krylov_min_poly, sturm::root_bound, sturm_isolate, Gf2Poly, IntPoly,
    NumberField, RatPoly, Rational,
};

/// Largest `k` accepted by [`gf2_completion_bruteforce`].
pub const BRUTEFORCE_MAX_K: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VanishingMethod {
    Reciprocity,
    FieldDegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingVerdict {
    pub vanishes: bool,
    pub method: VanishingMethod,
    /// The reversal of `m` for [`VanishingMethod::Reciprocity`], the minimal
    /// polynomial of `lambda + 1/lambda` for [`VanishingMethod::FieldDegree`].
    pub details: RatPoly,
    pub notes: Vec<String>,
}

const DEGENERATE_NOTE: &str = "degree-1 input: lambda is rational, which no pseudo-Anosov stretch factor is";

fn check_stretch_input(m: &IntPoly) -> Result<usize> {
    let d = m.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::InvalidArgument(
            "minimal polynomial must have positive degree".into(),
        ));
    }
    if !m.is_monic() {
        return Err(Error::NotMonic);
    }
    if m.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if !m.to_rational().is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(d)
}

/// Isolating interval `(lo, hi)` for the largest real root of `m`, which must
/// exceed 1. `m` must be squarefree.
pub fn largest_root_above_one(m: &IntPoly) -> Result<(Rational, Rational)> {
    let qm = m.to_rational();
    let one = Rational::one();
    let bound = root_bound(&qm);
    if bound <= one {
        return Err(Error::NoRootAboveOne);
    }
    let roots = sturm_isolate(&qm, &one, &bound)?;
    // every root lies below the Cauchy bound, so (a, bound) holds only the top one
    let (a, _) = roots.last().ok_or(Error::NoRootAboveOne)?;
    Ok((a.clone(), bound))
}

fn field_above_one(m: &IntPoly, root_interval: Option<&(Rational, Rational)>) -> Result<NumberField> {
    let (lo, hi) = match root_interval {
        Some(iv) => iv.clone(),
        None => largest_root_above_one(m)?,
    };
    let k = NumberField::new(m, &lo, &hi)?;
    if !k.generator().add_rational(&-Rational::one()).is_positive()? {
        return Err(Error::NoRootAboveOne);
    }
    Ok(k)
}

fn irreducibility_note(m: &IntPoly) -> Option<String> {
    match irreducibility_witness(m) {
        Some(_) => None,
        None => Some("irreducibility over Q not certified by any trial prime".into()),
    }
}

/// `vanishes = !is_reciprocal(m)`.
pub fn vanishing_by_reciprocity(m: &IntPoly) -> Result<VanishingVerdict> {
    let d = check_stretch_input(m)?;
    largest_root_above_one(m)?;
    let reciprocal = m.is_reciprocal()?;
    let mut notes = Vec::new();
    if d == 1 {
        notes.push(DEGENERATE_NOTE.to_string());
    }
    notes.extend(irreducibility_note(m));
    Ok(VanishingVerdict {
        vanishes: !reciprocal,
        method: VanishingMethod::Reciprocity,
        details: m.reverse()?.to_rational(),
        notes,
    })
}

/// `vanishes = (deg minpoly(lambda + 1/lambda) = deg m)`, computed in
/// `Q[x]/(m)`. Without an interval the largest real root is used.
pub fn vanishing_by_field_degree(
    m: &IntPoly,
    root_interval: Option<&(Rational, Rational)>,
) -> Result<VanishingVerdict> {
    let d = check_stretch_input(m)?;
    let k = field_above_one(m, root_interval)?;
    let lambda = k.generator();
    let beta = &lambda + &lambda.inv()?;
    let mp = krylov_min_poly(&beta);
    let e = mp.degree().expect("minimal polynomial is nonzero");
    let mut notes = vec![format!("[Q(lambda) : Q(lambda + 1/lambda)] = {}", d / e.max(1))];
    if d == 1 {
        notes.push(DEGENERATE_NOTE.to_string());
    }
    notes.extend(irreducibility_note(m));
    Ok(VanishingVerdict {
        vanishes: e == d,
        method: VanishingMethod::FieldDegree,
        details: mp,
        notes,
    })
}

/// Whether `p mod 2` equals its own reversal. Needs `p(0)` odd.
pub fn reciprocal_mod2(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term().is_even() {
        return Err(Error::EvenConstantTerm);
    }
    Ok(p.reduce_mod::<2>().is_palindromic())
}

fn check_completion_input(mbar: &Gf2Poly) -> Result<()> {
    if mbar.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if mbar.constant_term().value() == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

/// Minimal `q` with `mbar * q` self-reciprocal: every irreducible factor `f`
/// that is not its own reversal `f*` must occur as often as `f*`.
fn minimal_completion(mbar: &Gf2Poly) -> Result<Gf2Poly> {
    let factors = gf2_factor(mbar)?;
    let mult: HashMap<&Gf2Poly, usize> = factors.iter().map(|(f, e)| (f, *e)).collect();
    let mut q = Gf2Poly::one();
    for (f, e) in &factors {
        let rev = f.reverse()?;
        if &rev == f {
            continue;
        }
        let have = mult.get(&rev).copied().unwrap_or(0);
        if *e > have {
            q = &q * &rev.pow((e - have) as u32);
        }
    }
    Ok(q)
}

/// A monic `q` of degree `k` with `q(0) = 1` and `mbar * q` self-reciprocal,
/// if one exists: the minimal completion padded by powers of `x + 1`.
pub fn gf2_completion_exists(mbar: &Gf2Poly, k: usize) -> Result<Option<Gf2Poly>> {
    check_completion_input(mbar)?;
    let q0 = minimal_completion(mbar)?;
    let k0 = q0.degree().expect("nonzero");
    if k0 > k {
        return Ok(None);
    }
    let pad = Gf2Poly::from_i64s(&[1, 1]).pow((k - k0) as u32);
    Ok(Some(&q0 * &pad))
}

/// Exhaustive search for [`gf2_completion_exists`]: candidates are tried in
/// increasing order of their coefficient bit pattern, so the first witness
/// found is deterministic.
pub fn gf2_completion_bruteforce(mbar: &Gf2Poly, k: usize) -> Result<Option<Gf2Poly>> {
    check_completion_input(mbar)?;
    if k > BRUTEFORCE_MAX_K {
        return Err(Error::SearchTooLarge(format!(
            "completion degree {k} exceeds {BRUTEFORCE_MAX_K}"
        )));
    }
    if k == 0 {
        return Ok(mbar.is_palindromic().then(Gf2Poly::one));
    }
    let ends = 1u64 | (1u64 << k);
    for middle in 0..(1u64 << (k - 1)) {
        let q = Gf2Poly::from_bits(ends | (middle << 1));
        if (mbar * &q).is_palindromic() {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Which completion search backs [`nonlift_certificate_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CompletionOracle {
    Factorization,
    BruteForce,
}

/// Monic normalizations of the polynomials having `1/lambda` or `-lambda`
/// style roots, tried in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// `m(x)`
    Original,
    /// `(-1)^d m(-x)`
    NegatedVariable,
    /// `x^d m(1/x) / m(0)`
    Reversal,
    /// `(-1)^d x^d m(-1/x) / m(0)`
    NegatedReversal,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Original,
        Variant::NegatedVariable,
        Variant::Reversal,
        Variant::NegatedReversal,
    ];

    /// The monic integer variant of `m`; `None` for the reversals when
    /// `m(0)` is not a unit.
    pub fn apply(self, m: &IntPoly) -> Option<IntPoly> {
        let d = m.degree()?;
        let sign = |p: IntPoly| if d % 2 == 1 { -&p } else { p };
        let c = m.constant_term();
        let unit = c.abs().is_one();
        match self {
            Variant::Original => Some(m.clone()),
            Variant::NegatedVariable => Some(sign(m.negate_variable())),
            Variant::Reversal if unit => Some(m.reverse().ok()?.scale(&c)),
            Variant::NegatedReversal if unit => Some(sign(m.reverse().ok()?.negate_variable()).scale(&c)),
            _ => None,
        }
    }

    /// Variants 0 and 1 agree with `m` mod 2, variants 2 and 3 with its
    /// reversal.
    fn reduces_to_reversal(self) -> bool {
        matches!(self, Variant::Reversal | Variant::NegatedReversal)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NonliftReason {
    DegreeExceedsGenus,
    ConstantNotUnit,
    NoMod2Completion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertOutcome {
    CertifiedNotLift(NonliftReason),
    /// Every necessary condition holds; `completion` times the reduction of
    /// `variant_poly` is self-reciprocal of degree `g`.
    Inconclusive {
        variant: Variant,
        variant_poly: IntPoly,
        completion: Gf2Poly,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertVerdict {
    pub minpoly: IntPoly,
    pub genus: usize,
    pub outcome: CertOutcome,
    /// Prime certifying irreducibility of the input, if one was found.
    pub irreducible_mod: Option<u64>,
}

impl CertVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self.outcome, CertOutcome::CertifiedNotLift(_))
    }
}

/// Whether a stretch factor with minimal polynomial `m` can come from a
/// nonorientable lift on the closed genus-`g` surface, using the
/// factorization oracle.
pub fn nonlift_certificate(m: &IntPoly, g: usize) -> Result<CertVerdict> {
    nonlift_certificate_with(m, g, CompletionOracle::Factorization)
}

/// A lift needs a monic integer `p` of degree `g` with `p(0) = ±1`, reciprocal
/// mod 2, that one of the variants of `m` divides. Checks, in order: the
/// degree, the constant term, and a mod-2 completion of the variant.
pub fn nonlift_certificate_with(m: &IntPoly, g: usize, oracle: CompletionOracle) -> Result<CertVerdict> {
    let d = m.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::InvalidArgument(
            "minimal polynomial must have positive degree".into(),
        ));
    }
    if g == 0 {
        return Err(Error::InvalidArgument("genus must be at least 1".into()));
    }
    if !m.is_monic() {
        return Err(Error::NotMonic);
    }
    let verdict = |outcome| CertVerdict {
        minpoly: m.clone(),
        genus: g,
        outcome,
        irreducible_mod: irreducibility_witness(m),
    };
    if d > g {
        return Ok(verdict(CertOutcome::CertifiedNotLift(
            NonliftReason::DegreeExceedsGenus,
        )));
    }
    if !m.constant_term().abs().is_one() {
        return Ok(verdict(CertOutcome::CertifiedNotLift(NonliftReason::ConstantNotUnit)));
    }
    let mbar = m.reduce_mod::<2>();
    let rbar = mbar.reverse()?;
    for variant in Variant::ALL {
        let Some(vp) = variant.apply(m) else { continue };
        let target = if variant.reduces_to_reversal() { &rbar } else { &mbar };
        debug_assert_eq!(&vp.reduce_mod::<2>(), target);
        let found = match oracle {
            CompletionOracle::Factorization => gf2_completion_exists(target, g - d)?,
            CompletionOracle::BruteForce => gf2_completion_bruteforce(target, g - d)?,
        };
        if let Some(q) = found {
            return Ok(verdict(CertOutcome::Inconclusive {
                variant,
                variant_poly: vp,
                completion: q,
            }));
        }
    }
    Ok(verdict(CertOutcome::CertifiedNotLift(NonliftReason::NoMod2Completion)))
}

/// Plain-data form of a [`VanishingVerdict`] for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingRecord {
    pub method: VanishingMethod,
    pub vanishes: bool,
    pub details: String,
    pub notes: Vec<String>,
}

impl From<&VanishingVerdict> for VanishingRecord {
    fn from(v: &VanishingVerdict) -> Self {
        VanishingRecord {
            method: v.method,
            vanishes: v.vanishes,
            details: v.details.to_pretty(),
            notes: v.notes.clone(),
        }
    }
}

/// Plain-data form of a [`CertVerdict`] for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertRecord {
    pub minpoly: String,
    pub genus: usize,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<NonliftReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<Variant>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant_poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completion: Option<String>,
    pub irreducible_mod: Option<u64>,
}

impl From<&CertVerdict> for CertRecord {
    fn from(v: &CertVerdict) -> Self {
        let mut r = CertRecord {
            minpoly: v.minpoly.to_pretty(),
            genus: v.genus,
            outcome: "",
            reason: None,
            variant: None,
            variant_poly: None,
            completion: None,
            irreducible_mod: v.irreducible_mod,
        };
        match &v.outcome {
            CertOutcome::CertifiedNotLift(reason) => {
                r.outcome = "CertifiedNotLift";
                r.reason = Some(*reason);
            }
            CertOutcome::Inconclusive {
                variant,
                variant_poly,
                completion,
            } => {
                r.outcome = "Inconclusive";
                r.variant = Some(*variant);
                r.variant_poly = Some(variant_poly.to_pretty());
                r.completion = Some(completion.to_pretty());
            }
        }
        r
    }
}

impl fmt::Display for NonliftReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NonliftReason::DegreeExceedsGenus => "degree of the minimal polynomial exceeds the genus",
            NonliftReason::ConstantNotUnit => "constant term is not ±1",
            NonliftReason::NoMod2Completion => "no completion that is reciprocal mod 2",
        })
    }
}

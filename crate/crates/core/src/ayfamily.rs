//! The Arnoux–Yoccoz family.
//!
//! For `g >= 3` let `alpha` be the root in `(0, 1)` of
//! `x^g + ... + x - 1`. The boundary of a Moebius band whose core curve has
//! length 1 is a circle of length 2, cut into blocks
//! `alpha, alpha, alpha^2, alpha^2, ..., alpha^g, alpha^g`; gluing each
//! adjacent equal pair by translation gives the boundary involution. Scaling
//! by 1/2 and rotating by 1/2 gives the exchange induced on the lift of the
//! core curve to the orientation double cover, normalized to length 1.
//!
//! The genus-3 lift of the thrice-punctured projective plane map and the
//! Arnoux–Rauzy maps belong to the same story but have no construction here.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{IntPoly, NumberField, Poly, Rational};
use crate::iet::Iet;

/// `x^g + x^(g-1) + ... + x - 1`.
pub fn alpha_modulus(g: usize) -> IntPoly {
    let mut cs = vec![BigInt::from(1); g + 1];
    cs[0] = BigInt::from(-1);
    Poly::new(cs)
}

/// `Q(alpha_g)` with the root isolated in `(0, 1)` and the stored interval
/// refined below width `10^-6`.
pub fn ay_alpha(g: usize) -> Result<NumberField> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("alpha needs g >= 2, got {g}")));
    }
    let k = NumberField::new(
        &alpha_modulus(g),
        &Rational::from_integer(0.into()),
        &Rational::from_integer(1.into()),
    )?;
    Ok(k.with_refined_interval(&Rational::new(1.into(), 1_000_000.into())))
}

fn require_genus(g: usize) -> Result<()> {
    if g < 3 {
        return Err(Error::InvalidArgument(format!(
            "the Arnoux-Yoccoz construction needs g >= 3, got {g}"
        )));
    }
    Ok(())
}

/// Block lengths `alpha^k` (each listed twice) in the given order of powers.
fn doubled_blocks(k: &NumberField, powers: &[u32]) -> Vec<crate::exactnum::AlgNum> {
    let a = k.generator();
    powers
        .iter()
        .flat_map(|&p| {
            let b = a.pow(p);
            [b.clone(), b]
        })
        .collect()
}

fn adjacent_pairing(n: usize) -> Vec<usize> {
    (0..n).map(|i| i ^ 1).collect()
}

/// Boundary involution on the circle of length 2.
pub fn ay_boundary_involution(g: usize) -> Result<Iet> {
    require_genus(g)?;
    let k = ay_alpha(g)?;
    let powers: Vec<u32> = (1..=g as u32).collect();
    Iet::pair_involution(&k, doubled_blocks(&k, &powers), &adjacent_pairing(2 * g))
}

/// `rotate(scale(involution, 1/2), 1/2)`: the involution moved to the circle
/// of length 1 and composed with the half-turn.
pub fn lift_of_involution(involution: &Iet) -> Result<Iet> {
    let half = Rational::new(1.into(), 2.into());
    let scaled = involution.scale_rational(&half)?;
    let shift = scaled.total().scale(&half);
    scaled.rotate(&shift)
}

/// Arnoux–Yoccoz exchange on the circle of length 1.
pub fn ay_lift(g: usize) -> Result<Iet> {
    lift_of_involution(&ay_boundary_involution(g)?)
}

/// Lift built with the `alpha` and `alpha^2` pairs in swapped order; a
/// negative control for [`ay_self_similarity_check`].
pub fn ay_perturbed_lift(g: usize) -> Result<Iet> {
    require_genus(g)?;
    let k = ay_alpha(g)?;
    let mut powers: Vec<u32> = (1..=g as u32).collect();
    powers.swap(0, 1);
    let inv = Iet::pair_involution(&k, doubled_blocks(&k, &powers), &adjacent_pairing(2 * g))?;
    lift_of_involution(&inv)
}

/// Whether the first return of `lift` to `[0, alpha)` equals `lift` scaled
/// by `alpha` with the origin kept fixed.
///
/// False for the family as constructed: the two maps agree only after a
/// rotation, see [`self_similarity_shift`].
pub fn induced_equals_scaled(lift: &Iet) -> Result<bool> {
    let alpha = lift.field().generator();
    Ok(lift.first_return(&alpha)? == lift.scale(&alpha)?)
}

/// The smallest `c` in `[0, alpha)` with
/// `induced(x + c) - c = alpha * lift(x / alpha)` on the circle of length
/// `alpha`, where `induced` is the first return to `[0, alpha)`.
///
/// For the Arnoux–Yoccoz lifts this is `(3 alpha - 1) / 2`.
pub fn self_similarity_shift(lift: &Iet) -> Result<Option<crate::exactnum::AlgNum>> {
    let alpha = lift.field().generator();
    let induced = lift.first_return(&alpha)?.with_circle(true);
    let scaled = lift.scale(&alpha)?.with_circle(true);
    induced.rotation_conjugator(&scaled)
}

/// First return to `[0, alpha)` and the `alpha`-scaled map agree as
/// exchanges of a circle, i.e. up to the choice of origin.
pub fn is_self_similar(lift: &Iet) -> Result<bool> {
    Ok(self_similarity_shift(lift)?.is_some())
}

pub fn ay_self_similarity_check(g: usize) -> Result<bool> {
    is_self_similar(&ay_lift(g)?)
}

/// `x^g - x^(g-1) - ... - x - 1`; its root above 1 is `1/alpha_g`.
pub fn ay_stretch_minpoly(g: usize) -> Result<IntPoly> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("stretch factor needs g >= 2, got {g}")));
    }
    let mut cs = vec![BigInt::from(-1); g + 1];
    cs[g] = BigInt::from(1);
    Ok(Poly::new(cs))
}

/// The objects attached to one member of the family.
#[derive(Clone, Debug)]
pub struct AySystem {
    pub g: usize,
    pub field: NumberField,
    pub boundary_involution: Iet,
    pub lift: Iet,
    pub stretch_minpoly: IntPoly,
}

impl AySystem {
    pub fn new(g: usize) -> Result<Self> {
        let boundary_involution = ay_boundary_involution(g)?;
        let lift = lift_of_involution(&boundary_involution)?;
        Ok(AySystem {
            g,
            field: boundary_involution.field().clone(),
            boundary_involution,
            lift,
            stretch_minpoly: ay_stretch_minpoly(g)?,
        })
    }
}

//! Exact arithmetic: rationals, polynomials over `Z`, `Q` and prime fields,
//! Sturm root isolation, and real number fields with exact sign determination.

mod coeff;
pub mod field;
pub mod finite;
mod krylov;
mod poly;
pub mod sturm;

pub use coeff::{reduce_int, Coeff, FieldCoeff, FiniteField, Gf2, Rational, Zp};
pub use field::{parse_rationals, AlgNum, NumberField};
pub use finite::{gf2_factor, irreducibility_witness, is_irreducible};
pub use krylov::krylov_min_poly;
pub use poly::{Gf2Poly, IntPoly, Poly, RatPoly};
pub use sturm::{sturm_isolate, SturmSequence};

/// Parses an interval `"lo,hi"` of rationals.
pub fn parse_interval(s: &str) -> crate::Result<(Rational, Rational)> {
    let v = parse_rationals(s)?;
    match <[Rational; 2]>::try_from(v) {
        Ok([lo, hi]) => Ok((lo, hi)),
        Err(v) => Err(crate::Error::Parse {
            line: 1,
            column: 1,
            message: format!("interval needs exactly 2 endpoints, got {}", v.len()),
        }),
    }
}

//! Exact computation of Sah–Arnoux–Fathi invariants for interval exchange
//! transformations over real number fields, polynomial criteria for SAF
//! vanishing, a certificate excluding nonorientable lifts, and the
//! Arnoux–Yoccoz family.
//!
//! Everything is exact: lengths and translations are elements of a number
//! field `Q(alpha)` stored in the power basis, and ordering questions are
//! settled by interval refinement of the distinguished real root.

pub mod ayfamily;
pub mod certificates;
pub mod error;
pub mod exactnum;
pub mod iet;

pub use error::{Error, Result};
pub use exactnum::{AlgNum, Gf2, NumberField, Poly, Rational};
pub use iet::{Iet, IetFile, WedgeClass};

//! The IET file format: one JSON object
//!
//! ```text
//! { "modulus": "c0,...,cn", "root_interval": "lo,hi", "total": "coords",
//!   "lengths": ["coords", ...], "perm": [1-based ints], "circle": bool }
//! ```
//!
//! where polynomials are constant-first and `coords` lists the `d` power-basis
//! coordinates as reduced fractions.

use serde::{Deserialize, Serialize};

use super::Iet;
use crate::error::{Error, Result};
use crate::exactnum::{parse_interval, IntPoly, NumberField};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IetFile {
    pub modulus: String,
    pub root_interval: String,
    pub total: String,
    pub lengths: Vec<String>,
    pub perm: Vec<usize>,
    pub circle: bool,
}

fn field_error(field: &str, e: Error) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse {
            line: 0,
            column: 0,
            message: format!("{field}: {message}"),
        },
        other => other,
    }
}

impl IetFile {
    pub fn from_iet(f: &Iet) -> Self {
        let k = f.field();
        let (lo, hi) = k.root_interval();
        IetFile {
            modulus: k.modulus().to_string(),
            root_interval: format!("{lo},{hi}"),
            total: f.total().to_string(),
            lengths: f.lengths().iter().map(ToString::to_string).collect(),
            perm: f.perm().iter().map(|p| p + 1).collect(),
            circle: f.is_circle(),
        }
    }

    pub fn field(&self) -> Result<NumberField> {
        let modulus: IntPoly = self.modulus.parse().map_err(|e| field_error("modulus", e))?;
        let (lo, hi) = parse_interval(&self.root_interval).map_err(|e| field_error("root_interval", e))?;
        NumberField::new(&modulus, &lo, &hi)
    }

    pub fn to_iet(&self) -> Result<Iet> {
        let k = self.field()?;
        let total = k.parse_element(&self.total).map_err(|e| field_error("total", e))?;
        let lengths = self
            .lengths
            .iter()
            .map(|s| k.parse_element(s).map_err(|e| field_error("lengths", e)))
            .collect::<Result<Vec<_>>>()?;
        if self.perm.contains(&0) {
            return Err(Error::NotBijection);
        }
        let perm = self.perm.iter().map(|p| p - 1).collect();
        Iet::new(&k, total, lengths, perm, self.circle)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain strings serialize");
        s.push('\n');
        s
    }
}

impl Iet {
    pub fn to_file_string(&self) -> String {
        IetFile::from_iet(self).emit()
    }

    pub fn from_file_str(text: &str) -> Result<Iet> {
        IetFile::parse(text)?.to_iet()
    }
}

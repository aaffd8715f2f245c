use std::fmt;

use num_traits::Zero;

use super::Iet;
use crate::error::{Error, Result};
use crate::exactnum::{AlgNum, NumberField, Rational};

/// Element of `K ∧_Q K` as an antisymmetric `d x d` rational matrix in the
/// power basis: `u ∧ v` is `u vᵀ - v uᵀ` on coordinate vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct WedgeClass {
    field: NumberField,
    matrix: Vec<Vec<Rational>>,
}

impl WedgeClass {
    pub fn zero(field: &NumberField) -> Self {
        let d = field.degree();
        WedgeClass {
            field: field.clone(),
            matrix: vec![vec![Rational::zero(); d]; d],
        }
    }

    /// `u ∧ v`.
    pub fn wedge(u: &AlgNum, v: &AlgNum) -> Result<Self> {
        if u.field() != v.field() {
            return Err(Error::FieldMismatch);
        }
        let mut w = WedgeClass::zero(u.field());
        w.accumulate(u, v);
        Ok(w)
    }

    fn accumulate(&mut self, u: &AlgNum, v: &AlgNum) {
        let (a, b) = (u.coords(), v.coords());
        let d = a.len();
        for i in 0..d {
            for j in (i + 1)..d {
                let e = &a[i] * &b[j] - &b[i] * &a[j];
                if !e.is_zero() {
                    self.matrix[j][i] -= &e;
                    self.matrix[i][j] += e;
                }
            }
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.matrix[row][col]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.matrix.len();
        (0..d).all(|i| (0..d).all(|j| self.matrix[i][j] == -&self.matrix[j][i]))
    }

    pub fn try_add(&self, other: &WedgeClass) -> Result<WedgeClass> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        Ok(WedgeClass {
            field: self.field.clone(),
            matrix,
        })
    }

    pub fn neg(&self) -> WedgeClass {
        WedgeClass {
            field: self.field.clone(),
            matrix: self.matrix.iter().map(|r| r.iter().map(|a| -a).collect()).collect(),
        }
    }
}

impl fmt::Display for WedgeClass {
    /// One row per line, entries comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for WedgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WedgeClass[{}]", self.to_string().replace('\n', "; "))
    }
}

/// `SAF(f) = sum_i (a_i - a_{i-1}) ∧ t_i`.
pub fn saf(f: &Iet) -> WedgeClass {
    let mut w = WedgeClass::zero(f.field());
    for (len, t) in f.lengths().iter().zip(f.translations()) {
        w.accumulate(len, t);
    }
    w
}

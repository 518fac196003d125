//! Points of projective space.

use std::fmt;

use num_rational::BigRational;

use super::poly::Ring;
use super::scalar::{Field, Scalar};
use crate::error::{Error, ParseError, Result};

/// Homogeneous coordinates, not all zero; equality ignores overall scaling.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<ProjPoint> {
        if coords.iter().all(Scalar::is_zero) {
            return Err(Error::ZeroPoint);
        }
        let field = coords[0].field();
        if coords.iter().any(|c| c.field() != field) {
            return Err(Error::RingMismatch);
        }
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(field: Field, coords: &[i64]) -> Result<ProjPoint> {
        ProjPoint::new(coords.iter().map(|&c| Scalar::from_i64(field, c)).collect())
    }

    /// Reads `a,b,c,...` with integer or `p/q` entries.
    pub fn parse(text: &str, field: Field) -> Result<ProjPoint> {
        let mut coords = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let trimmed = part.trim();
            let value: BigRational = trimmed.parse().map_err(|_| {
                Error::Parse(ParseError::Syntax {
                    pos: offset,
                    message: format!("`{trimmed}` is not a rational number"),
                })
            })?;
            coords.push(Scalar::from_rational(field, &value)?);
            offset += part.len() + 1;
        }
        ProjPoint::new(coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn first_nonzero(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("nonzero point")
    }

    /// Same coordinates with the first nonzero one scaled to 1.
    pub fn normalized(&self) -> ProjPoint {
        let inv = self.coords[self.first_nonzero()].inv().expect("nonzero");
        ProjPoint {
            coords: self.coords.iter().map(|c| c.mul(&inv)).collect(),
        }
    }

    /// Checks the coordinate count against a ring.
    pub fn check_in(&self, ring: &Ring) -> Result<()> {
        if self.dim() != ring.nvars() {
            return Err(Error::PointDimension {
                expected: ring.nvars(),
                found: self.dim(),
            });
        }
        if self.field() != ring.field() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        if self.dim() != other.dim() || self.field() != other.field() {
            return false;
        }
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.coords[i].mul(&other.coords[j]) == self.coords[j].mul(&other.coords[i])))
            && (0..n).all(|i| self.coords[i].is_zero() == other.coords[i].is_zero())
    }
}

impl Eq for ProjPoint {}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(Scalar::to_string).collect();
        write!(f, "({})", parts.join(":"))
    }
}

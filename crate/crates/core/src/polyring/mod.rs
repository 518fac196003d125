//! Exact polynomial arithmetic: fields, sparse polynomials, text form,
//! determinants, resultants and valuations.

pub mod matrix;
pub mod parse;
pub mod point;
pub mod poly;
pub mod resultant;
pub mod scalar;

pub use matrix::Matrix;
pub use parse::parse_poly;
pub use point::ProjPoint;
pub use poly::{ExtNat, Monomial, Operand, Poly, Ring, RingOp};
pub use resultant::{resultant_univariate, resultant_with_degrees, sylvester_matrix};
pub use scalar::{factorial, Field, Scalar};

/// Valuation of a polynomial in a single series parameter `T`; the zero
/// polynomial has infinite valuation.
pub fn series_valuation(f: &Poly, parameter: &str) -> crate::Result<ExtNat> {
    let i = f
        .ring()
        .index_of(parameter)
        .ok_or_else(|| crate::Error::UnknownVariable(parameter.to_string()))?;
    Ok(f.valuation_in(i))
}

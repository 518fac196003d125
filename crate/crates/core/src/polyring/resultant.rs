//! Sylvester resultants.

use super::matrix::Matrix;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` in the `var`-th variable, treating them
/// as having formal degrees `df` and `dg`.
pub fn sylvester_matrix(f: &Poly, g: &Poly, var: usize, df: usize, dg: usize) -> Result<Matrix> {
    let ring = f.ring();
    if g.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let fc = f.coefficients_in(var);
    let gc = g.coefficients_in(var);
    if fc.len() > df + 1 || gc.len() > dg + 1 {
        return Err(Error::Inconsistent("formal degree below actual degree".into()));
    }
    let coeff = |c: &[Poly], deg: usize, k: usize| -> Poly {
        // k counts down from the leading coefficient
        deg.checked_sub(k)
            .and_then(|e| c.get(e).cloned())
            .unwrap_or_else(|| ring.zero())
    };
    let n = df + dg;
    let mut rows = Vec::with_capacity(n);
    for r in 0..dg {
        rows.push(
            (0..n)
                .map(|c| match c.checked_sub(r) {
                    Some(k) if k <= df => coeff(&fc, df, k),
                    _ => ring.zero(),
                })
                .collect(),
        );
    }
    for r in 0..df {
        rows.push(
            (0..n)
                .map(|c| match c.checked_sub(r) {
                    Some(k) if k <= dg => coeff(&gc, dg, k),
                    _ => ring.zero(),
                })
                .collect(),
        );
    }
    Matrix::new(ring, rows)
}

/// Resultant with explicit formal degrees; used for binary forms whose
/// leading coefficient may vanish.
pub fn resultant_with_degrees(f: &Poly, g: &Poly, var: usize, df: usize, dg: usize) -> Result<Poly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroResultantInput);
    }
    sylvester_matrix(f, g, var, df, dg)?.determinant()
}

/// `Res_var(f, g)`: determinant of the standard Sylvester matrix.
pub fn resultant_univariate(f: &Poly, g: &Poly, var: &str) -> Result<Poly> {
    let i = f
        .ring()
        .index_of(var)
        .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroResultantInput);
    }
    let df = f.degree_in(i).unwrap_or(0) as usize;
    let dg = g.degree_in(i).unwrap_or(0) as usize;
    if df == 0 && dg == 0 {
        return Err(Error::ConstantInVariable(var.to_string()));
    }
    resultant_with_degrees(f, g, i, df, dg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse::parse_poly;
    use crate::polyring::poly::Ring;
    use crate::polyring::scalar::Field;

    fn ring() -> Ring {
        Ring::new(&["x", "a", "u", "v"], Field::Rational).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ring()).unwrap()
    }

    #[test]
    fn square_root_pair() {
        // Sylvester layout [[1,0,-a],[2,0,0],[0,2,0]] has determinant -4a
        let r = resultant_univariate(&p("x^2 - a"), &p("2*x"), "x").unwrap();
        assert_eq!(r, p("-4*a"));
    }

    #[test]
    fn linear_pair() {
        let r = resultant_univariate(&p("x - u"), &p("x - v"), "x").unwrap();
        assert!(r == p("u - v") || r == p("v - u"));
    }

    #[test]
    fn common_factor_vanishes() {
        let f = p("x^3 - a*x + u");
        assert!(resultant_univariate(&f, &f, "x").unwrap().is_zero());
    }

    #[test]
    fn errors() {
        assert_eq!(
            resultant_univariate(&p("0"), &p("x"), "x"),
            Err(Error::ZeroResultantInput)
        );
        assert_eq!(
            resultant_univariate(&p("a"), &p("u"), "x"),
            Err(Error::ConstantInVariable("x".into()))
        );
    }
}

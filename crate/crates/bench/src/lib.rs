//! Fixtures shared by the benchmarks.

use dualsurf_core::{parse_poly, Field, Poly, ProjPoint, Ring};

/// A dense quartic surface with small coefficients.
pub fn quartic(field: Field) -> Poly {
    let text = "x^4 + 2*y^4 - z^4 + 3*w^4 + x*y*z*w - 5*x^2*y*w + 7*y^2*z^2 - x*z^3 + 4*y*w^3";
    parse_poly(text, &Ring::space(field)).expect("fixture parses")
}

/// A point off the quartic.
pub fn base_point(field: Field) -> ProjPoint {
    ProjPoint::from_ints(field, &[1, 2, -1, 3]).expect("nonzero point")
}

//! Closed-form invariant tables of a general smooth surface in projective
//! 3-space, of its dual, and of surfaces with ordinary singularities, with
//! the identities tying them together.
//!
//! Every table is computed over `Q[n]` (or `Q[n, pi, p_a, K2]`), so the same
//! code produces integer values from constant inputs and polynomials from
//! the indeterminates.

mod branch;
mod dual;
mod projected;

pub use branch::branch_curve_characters;
pub use dual::{
    dual_surface_table, hessian_developable_characters, nodecouple_characters, verify_dual_relations, DualSurfaceTable,
    HessianDevelopable,
};
pub use projected::{
    noether_equivalence, projected_ring, projected_surface_table, smooth_projection_agreement, ProjectedSurfaceTable,
};

use crate::error::{Error, Result};
use crate::polyring::{Field, Poly, Ring};

/// `Q[n]`, the home of symbolic surface degrees.
pub fn degree_ring() -> Ring {
    Ring::new(&["n"], Field::Rational).expect("valid name")
}

/// The indeterminate surface degree `n`.
pub fn symbolic_degree() -> Poly {
    degree_ring().gen(0)
}

/// A fixed surface degree as a constant of `Q[n]`.
pub fn degree(value: i64) -> Poly {
    degree_ring().int(value)
}

/// Rejects constant degrees below `min`; symbolic degrees pass.
fn require_degree(n: &Poly, min: i64) -> Result<()> {
    if !n.is_constant() {
        return Ok(());
    }
    let value = n
        .to_bigint()
        .ok_or_else(|| Error::Inconsistent(format!("degree {n} is not an integer")))?;
    let found = i64::try_from(&value).unwrap_or(i64::MIN);
    if value < min.into() {
        return Err(Error::DegreeTooSmall { found, min });
    }
    Ok(())
}

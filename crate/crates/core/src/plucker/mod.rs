//! Plücker systems: plane curves and their duals, developables of space
//! curves, osculating ranks and de Jonquières counts.
//!
//! Characters are carried as polynomials so the same code evaluates plain
//! numbers (constants of [`Ring::numbers`]) and symbolic families.

mod dejonquieres;
mod developable;
mod plane;
mod ranks;

pub use dejonquieres::{dejonquieres_count, DeJonquieresProblem};
pub use developable::{complete_developable, DevelopableCharacters, DevelopableNumber, PartialDevelopable};
pub use plane::{
    complete_plane_characters, complete_plane_characters_poly, solve_from_genus, solve_from_genus_poly,
    verify_plucker_relations, GenusSolution, PlaneCurveCharacters,
};
pub use ranks::{rank_profile, RankProfile};

use crate::error::{Error, Result};
use crate::polyring::{Field, Poly, Ring};

/// Constant `v` in the plain-number ring over the rationals.
pub fn number(v: i64) -> Poly {
    Ring::numbers(Field::Rational).int(v)
}

/// Rejects a constant that is fractional or negative; symbolic values pass.
pub(crate) fn require_count(name: &str, value: &Poly) -> Result<()> {
    if !value.is_constant() {
        return Ok(());
    }
    match value.to_bigint() {
        Some(v) if v.sign() != num_bigint::Sign::Minus => Ok(()),
        Some(_) => Err(Error::Inconsistent(format!("{name} = {value} is negative"))),
        None => Err(Error::Inconsistent(format!("{name} = {value} is not an integer"))),
    }
}

use super::require_degree;
use crate::error::{Error, Result};
use crate::plucker::{solve_from_genus_poly, PlaneCurveCharacters};
use crate::polyring::Poly;
use crate::report::{Check, Report};

/// Characters of the branch curve of a general projection of a smooth
/// degree-`n` surface to the plane.
///
/// The closed forms are cross-checked against a second route: the contour
/// is a complete intersection of degrees `n` and `n - 1`, which fixes its
/// genus, and degree, class and genus then determine the singularities.
pub fn branch_curve_characters(n: &Poly) -> Result<(PlaneCurveCharacters, Report)> {
    require_degree(n, 2)?;
    let n1 = n - 1;
    let n2 = n - 2;
    let cubic = &(&(n * n) * n) - &(n * n) + n - 12;
    let degree = n * &n1;
    let class = &degree * &n1;
    let nodes = (&(&degree * &n2) * &(n - 3)).scale_ratio(1, 2);
    let cusps = &degree * &n2;
    let bitangents = (&(&degree * &n2) * &cubic).scale_ratio(1, 2);
    let flexes = cusps.scale_int(4);
    let chars = PlaneCurveCharacters::new(degree, class, nodes, cusps, bitangents, flexes)?;

    let genus = (&chars.degree * &(n.scale_int(2) - 5)).scale_ratio(1, 2) + 1;
    let solved = solve_from_genus_poly(&chars.degree, &chars.class, &genus)?;
    let mut report = Report::new();
    report.push(Check::equal("genus of contour", &chars.genus(), &genus));
    for (name, closed, derived) in [
        ("nodes from genus", &chars.nodes, &solved.nodes),
        ("cusps from genus", &chars.cusps, &solved.cusps),
        ("bitangents from genus", &chars.bitangents, &solved.bitangents),
        ("flexes from genus", &chars.flexes, &solved.flexes),
    ] {
        report.push(Check::equal(name, derived, closed));
    }
    if let Some(bad) = report.failures().next() {
        return Err(Error::Inconsistent(format!(
            "{} disagrees: {} vs {}",
            bad.name, bad.lhs, bad.rhs
        )));
    }
    Ok((chars, report))
}

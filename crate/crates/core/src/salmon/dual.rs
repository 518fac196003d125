use super::require_degree;
use crate::error::{Error, Result};
use crate::plucker::{complete_developable, DevelopableCharacters, DevelopableNumber, PartialDevelopable};
use crate::polyring::{Poly, Ring};
use crate::report::{Check, Report};

/// Developable swept by the tangent planes along the parabolic curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianDevelopable {
    pub rank: Poly,
    pub class: Poly,
    /// The swallowtail count of the dual surface.
    pub stationary_planes: Poly,
    pub order: Poly,
    pub stationary_points: Poly,
    /// The apparent double points of the cuspidal curve of the dual.
    pub dual_apparent_doubles: Poly,
    pub apparent_doubles: Poly,
}

/// Singularities of the dual of a general smooth degree-`n` surface, seen
/// as a surface of degree `class` with the standard dual package: a nodal
/// curve, a cuspidal curve and finitely many special points on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSurfaceTable {
    pub degree: Poly,
    pub class: Poly,
    /// Degree of the apparent contour from a general point.
    pub contour_degree: Poly,
    pub node_curve_degree: Poly,
    pub cusp_curve_degree: Poly,
    /// Cuspidal edges of the circumscribed cone.
    pub cone_cusps: Poly,
    /// Contour points on the nodal curve.
    pub node_contacts: Poly,
    /// Contour points on the cuspidal curve.
    pub cusp_contacts: Poly,
    pub swallowtails: Poly,
    /// Points where the nodal curve is cuspidal and meets the cuspidal curve.
    pub gamma_points: Poly,
    /// Triple points of the nodal curve: tritangent planes of the surface.
    pub tritangents: Poly,
    /// Ordinary double edges of the circumscribed cone.
    pub cone_bitangents: Poly,
    pub node_curve_apparent_doubles: Poly,
    pub cusp_curve_apparent_doubles: Poly,
    /// Transverse crossings of the two curves; none for a dual surface.
    pub curve_crossings: Poly,
    pub hessian: HessianDevelopable,
    /// Rank of the developable of bitangent planes.
    pub node_couple_rank: Poly,
    /// Parabolic points of the two Kulikov kinds.
    pub h3_points: Poly,
    pub h4_points: Poly,
}

fn product(factors: &[&Poly]) -> Poly {
    let ring = factors[0].ring().clone();
    factors.iter().fold(ring.one(), |acc, f| &acc * *f)
}

/// `c_k n^k + ... + c_0` with integer coefficients listed from the top.
fn horner(n: &Poly, coeffs: &[i64]) -> Poly {
    coeffs.iter().fold(n.ring().zero(), |acc, &c| &acc * n + c)
}

pub fn dual_surface_table(n: &Poly) -> Result<DualSurfaceTable> {
    require_degree(n, 3)?;
    let n1 = n - 1;
    let n2 = n - 2;
    let n3 = n - 3;
    let nn2 = n * &n2;
    // Degree of the node-couple surface cutting the bitangency locus.
    let cubic = horner(n, &[1, -1, 1, -12]);

    let class = product(&[n, &n1, &n1]);
    let contour_degree = n * &n1;
    let node_curve_degree = product(&[n, &n1, &n2, &cubic]).scale_ratio(1, 2);
    let cusp_curve_degree = product(&[n, &n1, &n2]).scale_int(4);
    let cone_cusps = nn2.scale_int(3);
    let node_contacts = &nn2 * &cubic;
    let cusp_contacts = nn2.scale_int(4);
    let swallowtails = (&nn2 * &horner(n, &[11, -24])).scale_int(2);
    let gamma_points = product(&[&nn2, &n3, &horner(n, &[1, 0, 3, -16])]).scale_int(4);
    let tritangents = (&nn2 * &horner(n, &[1, -4, 7, -45, 114, -111, 548, -960])).scale_ratio(1, 6);
    let cone_bitangents = product(&[&nn2, &n3, &(n + 3)]).scale_ratio(1, 2);
    let node_curve_apparent_doubles =
        (&nn2 * &horner(n, &[1, -6, 16, -54, 164, -288, 547, -1058, 1068, -1214, 1464])).scale_ratio(1, 8);
    let cusp_curve_apparent_doubles = (&nn2 * &horner(n, &[4, -16, 20, -27, 39])).scale_int(2);

    let hessian = HessianDevelopable {
        rank: (&nn2 * &horner(n, &[3, -4])).scale_int(2),
        class: cusp_curve_degree.clone(),
        stationary_planes: swallowtails.clone(),
        order: (&nn2 * &horner(n, &[7, -15])).scale_int(4),
        stationary_points: (&nn2 * &horner(n, &[7, -16])).scale_int(10),
        dual_apparent_doubles: cusp_curve_apparent_doubles.clone(),
        apparent_doubles: (&nn2 * &horner(n, &[196, -1232, 2580, -1861, 137])).scale_int(2),
    };

    Ok(DualSurfaceTable {
        degree: n.clone(),
        class,
        contour_degree,
        node_curve_degree,
        cusp_curve_degree,
        cone_cusps,
        node_contacts,
        cusp_contacts,
        swallowtails,
        gamma_points,
        tritangents,
        cone_bitangents,
        node_curve_apparent_doubles,
        cusp_curve_apparent_doubles,
        curve_crossings: n.ring().zero(),
        hessian,
        node_couple_rank: product(&[&nn2, &n3, &horner(n, &[1, 2, -4])]),
        h3_points: (n * &horner(n, &[7, -28, 30])).scale_int(5),
        h4_points: product(&[n, &(n - 4), &horner(n, &[7, -12])]).scale_int(5),
    })
}

impl DualSurfaceTable {
    pub fn ring(&self) -> &Ring {
        self.degree.ring()
    }

    /// Every number with a stable key, in display order.
    pub fn entries(&self) -> Vec<(&'static str, &Poly)> {
        let h = &self.hessian;
        vec![
            ("degree", &self.degree),
            ("class", &self.class),
            ("contour_degree", &self.contour_degree),
            ("node_curve_degree", &self.node_curve_degree),
            ("cusp_curve_degree", &self.cusp_curve_degree),
            ("cone_cusps", &self.cone_cusps),
            ("node_contacts", &self.node_contacts),
            ("cusp_contacts", &self.cusp_contacts),
            ("swallowtails", &self.swallowtails),
            ("gamma_points", &self.gamma_points),
            ("tritangent", &self.tritangents),
            ("cone_bitangents", &self.cone_bitangents),
            ("node_curve_apparent_doubles", &self.node_curve_apparent_doubles),
            ("cusp_curve_apparent_doubles", &self.cusp_curve_apparent_doubles),
            ("curve_crossings", &self.curve_crossings),
            ("hessian_rank", &h.rank),
            ("hessian_class", &h.class),
            ("hessian_stationary_planes", &h.stationary_planes),
            ("hessian_order", &h.order),
            ("hessian_stationary_points", &h.stationary_points),
            ("hessian_dual_apparent_doubles", &h.dual_apparent_doubles),
            ("hessian_apparent_doubles", &h.apparent_doubles),
            ("node_couple_rank", &self.node_couple_rank),
            ("h3_points", &self.h3_points),
            ("h4_points", &self.h4_points),
        ]
    }

    /// Flags counts that degenerate at a constant degree: negative values
    /// and classical counts that vanish identically there.
    pub fn warnings(&self) -> Vec<Check> {
        if !self.degree.is_constant() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (name, value) in self.entries() {
            let Some(v) = value.to_bigint() else { continue };
            if v.sign() == num_bigint::Sign::Minus {
                out.push(Check::warn(format!("{name} is negative"), value, "0"));
            }
        }
        if self.gamma_points.is_zero() {
            out.push(Check::warn("gamma_points vanishes", &self.gamma_points, "0"));
        }
        out
    }
}

/// Checks every incidence relation of the dual package with the dual
/// surface's own degree in place of `n`, and re-derives the tritangent and
/// apparent-double counts from them.
pub fn verify_dual_relations(n: &Poly) -> Result<Report> {
    let t = dual_surface_table(n)?;
    let big = &t.class;
    let big2 = big - 2;
    let big23 = &big2 * &(big - 3);
    let (a, b, c) = (&t.contour_degree, &t.node_curve_degree, &t.cusp_curve_degree);
    let (kappa, rho, sigma) = (&t.cone_cusps, &t.node_contacts, &t.cusp_contacts);
    let (beta, gamma, triple) = (&t.swallowtails, &t.gamma_points, &t.tritangents);
    let (delta, k, h, i) = (
        &t.cone_bitangents,
        &t.node_curve_apparent_doubles,
        &t.cusp_curve_apparent_doubles,
        &t.curve_crossings,
    );

    let mut report = Report::new();
    report.push(Check::equal(
        "polar cone degree",
        &(big * &(big - 1)),
        &(a + &b.scale_int(2) + c.scale_int(3)),
    ));
    report.push(Check::equal(
        "contour on second polar",
        &(a * &big2),
        &(kappa + rho + sigma.scale_int(2)),
    ));
    report.push(Check::equal(
        "node curve on second polar",
        &(b * &big2),
        &(rho + &beta.scale_int(2) + gamma.scale_int(3) + triple.scale_int(3)),
    ));
    report.push(Check::equal(
        "cusp curve on second polar",
        &(c * &big2),
        &(sigma.scale_int(2) + beta.scale_int(4) + gamma),
    ));
    let n2 = n - 2;
    let cubic = horner(n, &[1, -1, 1, -12]);
    report.push(Check::equal(
        "node-couple curve meets parabolic curve",
        &product(&[n, &n2, &n2, &cubic]).scale_int(4),
        &(beta.scale_int(2) + gamma),
    ));
    report.push(Check::equal(
        "contour on node-couple polar",
        &(a * &big23),
        &(delta.scale_int(2) + (a * b).scale_int(2) + (a * c).scale_int(3) - rho.scale_int(4) - sigma.scale_int(9)),
    ));
    report.push(Check::equal(
        "node curve on node-couple polar",
        &(b * &big23),
        &(k.scale_int(4) + a * b + (b * c).scale_int(3)
            - beta.scale_int(9)
            - gamma.scale_int(6)
            - i.scale_int(3)
            - rho.scale_int(2)),
    ));
    report.push(Check::equal(
        "cusp curve on node-couple polar",
        &(c * &big23),
        &(h.scale_int(6) + a * c + (b * c).scale_int(2)
            - beta.scale_int(6)
            - gamma.scale_int(4)
            - i.scale_int(2)
            - sigma.scale_int(3)),
    ));

    let derived_triple = (b * &big2 - rho - beta.scale_int(2) - gamma.scale_int(3)).scale_ratio(1, 3);
    report.push(Check::equal("tritangents from second polar", &derived_triple, triple));
    let derived_k = (b * &big23 - a * b - (b * c).scale_int(3)
        + beta.scale_int(9)
        + gamma.scale_int(6)
        + i.scale_int(3)
        + rho.scale_int(2))
    .scale_ratio(1, 4);
    report.push(Check::equal(
        "node curve apparent doubles from node-couple polar",
        &derived_k,
        k,
    ));
    for w in t.warnings() {
        report.push(w);
    }
    Ok(report)
}

/// Completes the Hessian developable from its rank, class and stationary
/// planes, and compares the result with the closed forms.
pub fn hessian_developable_characters(n: &Poly) -> Result<(DevelopableCharacters, Report)> {
    let t = dual_surface_table(n)?;
    let h = &t.hessian;
    let known = PartialDevelopable::new()
        .with(DevelopableNumber::Rank, h.rank.clone())
        .with(DevelopableNumber::Class, h.class.clone())
        .with(DevelopableNumber::StationaryPlanes, h.stationary_planes.clone());
    let (chars, mut report) = complete_developable(&known)?;
    let mut closure = Report::new();
    for (name, solved, closed) in [
        ("hessian order", &chars.order, &h.order),
        (
            "hessian stationary points",
            &chars.stationary_points,
            &h.stationary_points,
        ),
        (
            "hessian dual apparent doubles",
            &chars.dual_apparent_doubles,
            &h.dual_apparent_doubles,
        ),
        ("hessian apparent doubles", &chars.apparent_doubles, &h.apparent_doubles),
    ] {
        closure.push(Check::equal(name, solved, closed));
    }
    // The edge of regression is the parabolic curve, a complete
    // intersection of degrees n and 4(n - 2).
    let parabolic_genus = (&(n * &(n - 2)) * &(n.scale_int(10) - 24)) + 1;
    if let Some(genus) = &chars.genus {
        closure.push(Check::equal("hessian genus", genus, &parabolic_genus));
    }
    if let Some(bad) = closure.failures().next() {
        return Err(Error::Inconsistent(format!(
            "{} solves to {}, closed form {}",
            bad.name, bad.lhs, bad.rhs
        )));
    }
    report.extend(closure);
    Ok((chars, report))
}

/// Known numbers of the developable of bitangent planes: its class is the
/// nodal curve degree, its apparent doubles and stationary planes come from
/// the dual table, and its rank is checked two ways.
pub fn nodecouple_characters(n: &Poly) -> Result<(PartialDevelopable, Report)> {
    let t = dual_surface_table(n)?;
    let b = &t.node_curve_degree;
    let adapted = b * &(b - 1)
        - t.node_curve_apparent_doubles.scale_int(2)
        - t.tritangents.scale_int(6)
        - t.gamma_points.scale_int(3);
    let mut report = Report::new();
    report.push(Check::equal("node-couple rank", &adapted, &t.node_couple_rank));
    if let Some(bad) = report.failures().next() {
        return Err(Error::Inconsistent(format!("{}: {} vs {}", bad.name, bad.lhs, bad.rhs)));
    }
    let partial = PartialDevelopable::new()
        .with(DevelopableNumber::Class, b.clone())
        .with(
            DevelopableNumber::DualApparentDoubles,
            t.node_curve_apparent_doubles.clone(),
        )
        .with(DevelopableNumber::StationaryPlanes, t.gamma_points.clone())
        .with(DevelopableNumber::Rank, adapted);
    Ok((partial, report))
}

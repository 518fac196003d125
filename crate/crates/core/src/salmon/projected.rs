use super::branch_curve_characters;
use crate::error::{Error, Result};
use crate::plucker::{verify_plucker_relations, PlaneCurveCharacters};
use crate::polyring::{Field, Poly, Ring};
use crate::report::{Check, Report};

/// `Q[n, pi, p_a, K2]`: section degree, sectional genus, arithmetic genus
/// and canonical self-intersection as indeterminates.
pub fn projected_ring() -> Ring {
    Ring::new(&["n", "pi", "p_a", "K2"], Field::Rational).expect("valid names")
}

/// Numbers of a smooth surface mapped birationally onto a surface with
/// ordinary singularities in projective 3-space, together with the branch
/// curve of a further general projection to the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedSurfaceTable {
    /// Self-intersection of a hyperplane section, the degree of the image.
    pub degree: Poly,
    pub sectional_genus: Poly,
    pub arithmetic_genus: Poly,
    pub canonical_square: Poly,
    /// Topological Euler number, from Noether's formula.
    pub euler_number: Poly,
    pub class: Poly,
    pub double_curve_degree: Poly,
    pub double_curve_genus: Poly,
    /// Genus of the preimage of the double curve.
    pub double_cover_genus: Poly,
    pub triple_points: Poly,
    pub pinch_points: Poly,
    /// Branch curve of the net of plane sections.
    pub branch: PlaneCurveCharacters,
    pub branch_genus: Poly,
}

/// Evaluates the closed forms and the branch-curve characters.
pub fn projected_surface_table(n: &Poly, pi: &Poly, pa: &Poly, ksq: &Poly) -> Result<ProjectedSurfaceTable> {
    let ring = n.ring();
    if [pi, pa, ksq].iter().any(|p| p.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let class = n + &pi.scale_int(4) + pa.scale_int(12) - ksq + 8;
    let double_curve_degree = (&(n - 1) * &(n - 2)).scale_ratio(1, 2) - pi;
    let double_curve_genus =
        (&(n * n) - &n.scale_int(7)).scale_ratio(1, 2) + pi * &(n - 12) + pa.scale_int(9) - ksq.scale_int(2) + 22;
    let double_cover_genus =
        &(n * n) - &n.scale_int(6) + (pi * &(n - 10)).scale_int(2) + pa.scale_int(12) - ksq.scale_int(3) + 33;
    let cube = &(&(n * n) * n) - &(n * n).scale_int(9) + n.scale_int(26);
    let triple_points = cube.scale_ratio(1, 6) - pi * &(n - 8) - pa.scale_int(4) + ksq - 12;
    let pinch_points = n.scale_int(2) + pi.scale_int(8) - pa.scale_int(12) + ksq.scale_int(2) - 20;
    let euler_number = (pa + 1).scale_int(12) - ksq;

    let npi = n + pi;
    let branch_degree = n.scale_int(2) + pi.scale_int(2) - 2;
    let branch_genus = pi.scale_int(9) + ksq - 8;
    let nodes =
        (&npi * &npi - n.scale_int(5) - pi.scale_int(17) - ksq.scale_int(2) + pa.scale_int(6) + 22).scale_int(2);
    let cusps = (n + &pi.scale_int(6) + ksq - pa.scale_int(4) - 10).scale_int(3);
    let lead = n + &pi.scale_int(4) - ksq + pa.scale_int(12) - 1;
    let bitangents = (&lead * &lead + n.scale_int(15) - pi.scale_int(6) - ksq.scale_int(17) + pa.scale_int(132) + 57)
        .scale_ratio(1, 2);
    let flexes = (pi + pa).scale_int(24);
    let branch = PlaneCurveCharacters {
        degree: branch_degree,
        class: class.clone(),
        nodes,
        cusps,
        bitangents,
        flexes,
    };

    Ok(ProjectedSurfaceTable {
        degree: n.clone(),
        sectional_genus: pi.clone(),
        arithmetic_genus: pa.clone(),
        canonical_square: ksq.clone(),
        euler_number,
        class,
        double_curve_degree,
        double_curve_genus,
        double_cover_genus,
        triple_points,
        pinch_points,
        branch,
        branch_genus,
    })
}

impl ProjectedSurfaceTable {
    pub fn ring(&self) -> &Ring {
        self.degree.ring()
    }

    pub fn entries(&self) -> Vec<(&'static str, &Poly)> {
        let b = &self.branch;
        vec![
            ("degree", &self.degree),
            ("sectional_genus", &self.sectional_genus),
            ("arithmetic_genus", &self.arithmetic_genus),
            ("canonical_square", &self.canonical_square),
            ("euler_number", &self.euler_number),
            ("class", &self.class),
            ("double_curve_degree", &self.double_curve_degree),
            ("double_curve_genus", &self.double_curve_genus),
            ("double_cover_genus", &self.double_cover_genus),
            ("triple_points", &self.triple_points),
            ("pinch_points", &self.pinch_points),
            ("branch_degree", &b.degree),
            ("branch_genus", &self.branch_genus),
            ("branch_nodes", &b.nodes),
            ("branch_cusps", &b.cusps),
            ("branch_bitangents", &b.bitangents),
            ("branch_flexes", &b.flexes),
        ]
    }

    /// The relations the closed forms were solved from, the pencil class,
    /// the cuspidal-member count and the Plücker relations of the branch
    /// curve.
    pub fn verify(&self) -> Report {
        let (n, pi, pa, ksq) = (
            &self.degree,
            &self.sectional_genus,
            &self.arithmetic_genus,
            &self.canonical_square,
        );
        let (d, rho, cover, t, tau) = (
            &self.double_curve_degree,
            &self.double_curve_genus,
            &self.double_cover_genus,
            &self.triple_points,
            &self.pinch_points,
        );
        let mut report = Report::new();
        report.push(Check::equal(
            "class and pinch points",
            &(&self.class + tau),
            &(ksq + &n.scale_int(3) + pi.scale_int(12) - 12),
        ));
        report.push(Check::equal(
            "triple points on the double cover",
            &(cover + &t.scale_int(3)),
            &(&(n - 4) * d + 1),
        ));
        report.push(Check::equal(
            "double cover as branched double curve",
            &(cover.scale_int(2) - 2),
            &((rho.scale_int(2) - 2).scale_int(2) + tau),
        ));
        report.push(Check::equal(
            "contour meets double curve",
            &(tau + &(&(n - 2) * d) - t.scale_int(3)),
            &(-ksq + &(pi * &(n - 7)).scale_int(2) + (n * n).scale_int(2) - n.scale_int(7) + 14),
        ));
        let binom = (&(&(n - 1) * &(n - 2)) * &(n - 3)).scale_ratio(1, 6);
        report.push(Check::equal(
            "postulation",
            pa,
            &(binom - &(n - 4) * d + rho + t.scale_int(2) - 1),
        ));
        report.push(Check::equal(
            "cuspidal members",
            &(ksq.scale_int(4) + (pi.scale_int(2) - 2 - n).scale_int(20) + n.scale_int(24)),
            &(&self.branch.flexes + &tau.scale_int(2)),
        ));
        report.push(Check::equal(
            "pencil class",
            &(&self.euler_number + n + pi.scale_int(4) - 4),
            &self.class,
        ));
        report.push(Check::equal("branch genus", &self.branch.genus(), &self.branch_genus));
        for check in verify_plucker_relations(&self.branch).checks {
            report.push(Check {
                name: format!("branch {}", check.name),
                ..check
            });
        }
        report
    }
}

/// Equating the pencil class `c2 + n + 4 pi - 4` with the tabulated class
/// is the same as Noether's formula `12(1 + p_a) = K2 + c2`: the two
/// differences agree identically with `c2` left free.
pub fn noether_equivalence() -> Check {
    let ring = Ring::new(&["n", "pi", "p_a", "K2", "c2"], Field::Rational).expect("valid names");
    let [n, pi, pa, ksq, c2] = [0, 1, 2, 3, 4].map(|i| ring.gen(i));
    let table = projected_surface_table(&n, &pi, &pa, &ksq).expect("one ring");
    let class_gap = &c2 + &n + pi.scale_int(4) - 4 - &table.class;
    let noether_gap = &ksq + &c2 - (&pa + 1).scale_int(12);
    Check::equal("class equation is Noether", &class_gap, &noether_gap)
}

/// For a smooth surface of degree `n` in 3-space, substituting its genera
/// and canonical square into the branch characters reproduces the direct
/// branch curve closed forms.
pub fn smooth_projection_agreement(n: &Poly) -> Result<Report> {
    let (direct, _) = branch_curve_characters(n)?;
    let ring = n.ring();
    let pi = (&(n - 1) * &(n - 2)).scale_ratio(1, 2);
    let pa = (&(&(n - 1) * &(n - 2)) * &(n - 3)).scale_ratio(1, 6);
    let ksq = n * &(&(n - 4) * &(n - 4));
    let table = projected_surface_table(n, &pi, &pa, &ksq)?;
    let mut report = Report::new();
    for ((name, via_net), (_, direct)) in table.branch.fields().iter().zip(direct.fields()) {
        report.push(Check::equal(format!("smooth branch {name}"), via_net, direct));
    }
    report.push(Check::equal(
        "smooth branch genus",
        &table.branch_genus,
        &direct.genus(),
    ));
    let dual_class = &(n * &(n - 1)) * &(n - 1);
    report.push(Check::equal("smooth class", &table.class, &dual_class));
    report.push(Check::equal(
        "smooth double curve",
        &table.double_curve_degree,
        &ring.zero(),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plucker::number;
    use crate::salmon::{degree, symbolic_degree};

    fn table(values: [i64; 4]) -> ProjectedSurfaceTable {
        let [n, pi, pa, k] = values.map(number);
        projected_surface_table(&n, &pi, &pa, &k).unwrap()
    }

    fn int(p: &Poly) -> i64 {
        i64::try_from(&p.to_bigint().unwrap()).unwrap()
    }

    #[test]
    fn smooth_quartic() {
        let t = table([4, 3, 1, 0]);
        let got = [
            &t.class,
            &t.double_curve_degree,
            &t.double_curve_genus,
            &t.double_cover_genus,
            &t.triple_points,
            &t.pinch_points,
        ]
        .map(int);
        assert_eq!(got, [36, 0, 1, 1, 0, 0]);
        assert_eq!(int(&t.euler_number), 24);
        let b = &t.branch;
        let net = [&b.degree, &t.branch_genus, &b.nodes, &b.cusps, &b.bitangents, &b.flexes].map(int);
        assert_eq!(net, [12, 19, 12, 24, 480, 96]);
        assert!(t.verify().all_passed());
    }

    #[test]
    fn steiner_roman_surface() {
        let t = table([4, 0, 0, 9]);
        let got = [&t.class, &t.double_curve_degree, &t.triple_points, &t.pinch_points].map(int);
        assert_eq!(got, [3, 3, 1, 6]);
        assert_eq!(int(&t.double_curve_genus), -2);
        assert!(t.verify().all_passed());
    }

    #[test]
    fn symbolic_identities() {
        let ring = projected_ring();
        let [n, pi, pa, k] = [0, 1, 2, 3].map(|i| ring.gen(i));
        let report = projected_surface_table(&n, &pi, &pa, &k).unwrap().verify();
        let fails: Vec<_> = report.failures().collect();
        assert!(fails.is_empty(), "{fails:?}");
        assert!(noether_equivalence().passed());
    }

    #[test]
    fn smooth_substitution() {
        for n in [symbolic_degree(), degree(5)] {
            let report = smooth_projection_agreement(&n).unwrap();
            let fails: Vec<_> = report.failures().collect();
            assert!(fails.is_empty(), "{fails:?}");
        }
    }
}

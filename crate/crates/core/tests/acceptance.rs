//! End-to-end acceptance: one line per criterion, every comparison exact.

use std::collections::BTreeMap;

use dualsurf_core::localmodels::{
    contact_order, deformation_ring, stratum_check, stratum_model, tacnode_discriminant, StratumId,
};
use dualsurf_core::plucker::{
    complete_developable, complete_plane_characters, dejonquieres_count, rank_profile, DeJonquieresProblem,
    DevelopableNumber as D, PartialDevelopable,
};
use dualsurf_core::properties::{
    contact_routes, curvature_suite, euler_polar_identity, flecnodal_suite, listed_surface_suite, polar_symmetry,
    taylor_newton, PropertyConfig,
};
use dualsurf_core::salmon::{
    branch_curve_characters, degree, dual_surface_table, hessian_developable_characters, nodecouple_characters,
    noether_equivalence, projected_ring, projected_surface_table, smooth_projection_agreement, symbolic_degree,
    verify_dual_relations,
};
use dualsurf_core::{parse_poly, Field, Poly, Report, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Randomized instances per property and field.
const PROPERTY_COUNT: usize = 100;
/// Points sampled on the Fermat cubic and on the ruled quadric.
const FLECNODAL_POINTS: usize = 12;
const SEED: u64 = 20_240_601;
const PRIME: u64 = 2_147_483_647;

/// Named sub-checks of one criterion.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    checked: usize,
}

impl Outcome {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures.push(name.into());
        }
    }

    fn equal<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, want: T) {
        let ok = got == want;
        self.check(
            if ok {
                name.to_string()
            } else {
                format!("{name}: {got:?} != {want:?}")
            },
            ok,
        );
    }

    fn report(&mut self, name: &str, report: &Report) {
        for c in &report.checks {
            let ok = c.passed();
            self.check(format!("{name} / {}: {} vs {}", c.name, c.lhs, c.rhs), ok);
        }
    }
}

fn int(p: &Poly) -> BigInt {
    p.to_bigint().expect("integer constant")
}

fn ints(values: &[&Poly]) -> Vec<BigInt> {
    values.iter().map(|p| int(p)).collect()
}

fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn tritangent_counts(out: &mut Outcome) {
    for (n, want) in [(3, 45), (4, 3200)] {
        let table = dual_surface_table(&degree(n)).unwrap();
        out.equal(
            &format!("tritangents({n})"),
            int(&table.tritangents),
            BigInt::from(want),
        );
        let relations = verify_dual_relations(&degree(n)).unwrap();
        let derived = relations.get("tritangents from second polar").unwrap();
        out.equal(
            &format!("derived tritangents({n})"),
            derived.lhs.clone(),
            want.to_string(),
        );
    }
}

fn classical_anchors(out: &mut Outcome) {
    let table = dual_surface_table(&degree(4)).unwrap();
    out.equal("cone bitangents(4)", int(&table.cone_bitangents), BigInt::from(28));
    let quartic = complete_plane_characters(4, 0, 0).unwrap();
    out.equal(
        "plane quartic (class, flexes, bitangents)",
        ints(&[&quartic.class, &quartic.flexes, &quartic.bitangents]),
        big(&[12, 24, 28]),
    );
    for (n, want) in [(3, [6, 12, 0, 6, 27, 24]), (4, [12, 36, 12, 24, 480, 96])] {
        let (chars, report) = branch_curve_characters(&degree(n)).unwrap();
        let got = ints(&[
            &chars.degree,
            &chars.class,
            &chars.nodes,
            &chars.cusps,
            &chars.bitangents,
            &chars.flexes,
        ]);
        out.equal(&format!("branch curve({n})"), got, big(&want));
        out.report(&format!("branch curve({n}) genus route"), &report);
    }
}

fn node_couple_chain(out: &mut Outcome) {
    for (n, doubles, rank) in [(3, 216, 0), (4, 102_400, 160)] {
        let table = dual_surface_table(&degree(n)).unwrap();
        out.equal(
            &format!("node curve apparent doubles({n})"),
            int(&table.node_curve_apparent_doubles),
            BigInt::from(doubles),
        );
        let relations = verify_dual_relations(&degree(n)).unwrap();
        let derived = relations
            .get("node curve apparent doubles from node-couple polar")
            .unwrap();
        out.equal(
            &format!("derived apparent doubles({n})"),
            derived.lhs.clone(),
            doubles.to_string(),
        );
        out.equal(
            &format!("closed node-couple rank({n})"),
            int(&table.node_couple_rank),
            BigInt::from(rank),
        );
        let (partial, report) = nodecouple_characters(&degree(n)).unwrap();
        out.equal(
            &format!("adapted node-couple rank({n})"),
            int(partial.get(D::Rank).unwrap()),
            BigInt::from(rank),
        );
        out.report(&format!("node-couple({n})"), &report);
    }
}

fn hessian_closure(out: &mut Outcome) {
    let n = symbolic_degree();
    let (chars, report) = hessian_developable_characters(&n).unwrap();
    out.report("symbolic hessian developable", &report);
    let closed = dual_surface_table(&n).unwrap().hessian;
    for (name, solved, table) in [
        ("order", &chars.order, &closed.order),
        ("stationary points", &chars.stationary_points, &closed.stationary_points),
        (
            "dual apparent doubles",
            &chars.dual_apparent_doubles,
            &closed.dual_apparent_doubles,
        ),
        ("apparent doubles", &chars.apparent_doubles, &closed.apparent_doubles),
    ] {
        out.check(format!("{name} residual is zero"), (solved - table).is_zero());
    }
    for (n, want) in [(3, [72, 150, 180, 2316]), (4, [416, 960, 4016, 84816])] {
        let (chars, _) = hessian_developable_characters(&degree(n)).unwrap();
        let got = ints(&[
            &chars.order,
            &chars.stationary_points,
            &chars.dual_apparent_doubles,
            &chars.apparent_doubles,
        ]);
        out.equal(&format!("hessian developable({n})"), got, big(&want));
    }
}

fn symbolic_suite(out: &mut Outcome) {
    out.report("dual relations", &verify_dual_relations(&symbolic_degree()).unwrap());
    let ring = projected_ring();
    let [n, pi, pa, ksq] = [0, 1, 2, 3].map(|i| ring.gen(i));
    out.report(
        "projected",
        &projected_surface_table(&n, &pi, &pa, &ksq).unwrap().verify(),
    );
    let noether = noether_equivalence();
    out.check(
        format!("{}: {} vs {}", noether.name, noether.lhs, noether.rhs),
        noether.passed(),
    );
}

fn projected_anchors(out: &mut Outcome) {
    let numbers = Ring::numbers(Field::Rational);
    let table = |v: [i64; 4]| {
        let [n, pi, pa, k] = v.map(|x| numbers.int(x));
        projected_surface_table(&n, &pi, &pa, &k).unwrap()
    };
    let quartic = table([4, 3, 1, 0]);
    out.equal(
        "smooth quartic",
        ints(&[
            &quartic.class,
            &quartic.double_curve_degree,
            &quartic.double_curve_genus,
            &quartic.double_cover_genus,
            &quartic.triple_points,
            &quartic.pinch_points,
        ]),
        big(&[36, 0, 1, 1, 0, 0]),
    );
    out.equal(
        "smooth quartic class is n(n-1)^2",
        int(&quartic.class),
        BigInt::from(4 * 3 * 3),
    );
    out.report("smooth quartic", &quartic.verify());
    let steiner = table([4, 0, 0, 9]);
    out.equal(
        "Steiner",
        ints(&[
            &steiner.class,
            &steiner.double_curve_degree,
            &steiner.triple_points,
            &steiner.pinch_points,
        ]),
        big(&[3, 3, 1, 6]),
    );
    out.report(
        "smooth substitution",
        &smooth_projection_agreement(&symbolic_degree()).unwrap(),
    );
}

fn local_models(out: &mut Outcome) {
    let disc = tacnode_discriminant().unwrap();
    let abc = deformation_ring();
    let expected = parse_poly(
        "256*c^3 - 128*a^2*c^2 + 144*a*b^2*c - 27*b^4 + 16*a^4*c - 4*a^3*b^2",
        &abc,
    )
    .unwrap();
    out.equal("tacnode discriminant terms", disc.discriminant.num_terms(), 6);
    out.check("tacnode discriminant coefficients", disc.discriminant == expected);
    for id in StratumId::ALL {
        out.report(id.name(), &stratum_check(id).unwrap());
    }
    let swallowtail = stratum_model(StratumId::Swallowtail).unwrap();
    let binode = &swallowtail.ordinary_curve.branches[0];
    let cusp_ideal = &swallowtail.cuspidal_curve.as_ref().unwrap().ideal;
    out.equal(
        "binode contact with cuspidal curve",
        contact_order(binode, cusp_ideal, 2).unwrap(),
        BigRational::from_integer(2.into()),
    );
}

fn space_curves(out: &mut Outcome) {
    let cubic = rank_profile(3, 3, 0, &[0, 0, 0]).unwrap();
    out.equal("twisted cubic ranks", cubic.ranks.clone(), big(&[3, 4, 3]));
    let quartic = rank_profile(3, 4, 1, &[0, 0, 16]).unwrap();
    out.equal("elliptic quartic ranks", quartic.ranks.clone(), big(&[4, 8, 12]));
    out.report("elliptic quartic", &quartic.relations());
    let known = PartialDevelopable::new()
        .with_int(D::Order, 3)
        .with_int(D::Genus, 0)
        .with_int(D::StationaryPlanes, 0)
        .with_int(D::StationaryPoints, 0);
    let (chars, report) = complete_developable(&known).unwrap();
    let got = ints(&[
        &chars.class,
        &chars.rank,
        &chars.double_curve,
        &chars.dual_double_curve,
        &chars.dual_apparent_doubles,
        &chars.apparent_doubles,
    ]);
    out.equal("twisted cubic developable", got, big(&[3, 4, 0, 0, 1, 1]));
    out.equal("double curve is r - 4", int(&chars.double_curve), int(&chars.rank) - 4);
    out.report("twisted cubic developable", &report);
}

fn de_jonquieres(out: &mut Outcome) {
    for m in 2..=12i64 {
        for g in 0..=5i64 {
            for mult in 2..=4u32 {
                let i = i64::from(mult) - 1;
                if m < i + 1 {
                    continue;
                }
                let want = if mult == 2 {
                    2 * m + 2 * g - 2
                } else {
                    (i + 1) * (m + (g - 1) * i)
                };
                let problem = DeJonquieresProblem::new(m as u32, g as u32, BTreeMap::from([(mult, 1)])).unwrap();
                out.equal(
                    &format!("m={m} g={g} point of multiplicity {mult}"),
                    dejonquieres_count(&problem),
                    BigInt::from(want),
                );
            }
        }
    }
}

fn property_suites(out: &mut Outcome) {
    for field in [Field::Rational, Field::prime(PRIME).unwrap()] {
        let cfg = PropertyConfig::new(SEED, PROPERTY_COUNT, field);
        for check in [
            polar_symmetry(&cfg).unwrap(),
            euler_polar_identity(&cfg).unwrap(),
            taylor_newton(&cfg).unwrap(),
            contact_routes(&cfg).unwrap(),
        ] {
            out.check(format!("{}: {}", check.name, check.lhs), check.passed());
        }
    }
    let cfg = PropertyConfig::new(SEED, PROPERTY_COUNT, Field::Rational);
    out.report("framed surfaces", &curvature_suite(&cfg).unwrap());
    out.report("listed surfaces", &listed_surface_suite(&cfg).unwrap());
    let cfg = PropertyConfig::new(SEED, FLECNODAL_POINTS, Field::Rational);
    out.report("flecnodal", &flecnodal_suite(&cfg).unwrap());
}

type Criterion = (&'static str, fn(&mut Outcome));

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("tritangent counts", tritangent_counts),
        ("classical cross-anchors", classical_anchors),
        ("node-couple chain", node_couple_chain),
        ("Hessian-developable closure", hessian_closure),
        ("symbolic identity suite", symbolic_suite),
        ("projected-surface anchors", projected_anchors),
        ("local models", local_models),
        ("space curves", space_curves),
        ("de Jonquieres counts", de_jonquieres),
        ("property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let mut out = Outcome::default();
        run(&mut out);
        let status = if out.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {name} ({} checks, exact)", i + 1, out.checked);
        for f in &out.failures {
            println!("    failed: {f}");
        }
        if !out.failures.is_empty() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

use num_bigint::BigInt;

use super::{number, require_count};
use crate::error::{Error, Result};
use crate::polyring::{Poly, Ring};
use crate::report::{Check, Report};

/// Degree, class and singularity counts of a plane curve whose dual also
/// has only nodes and cusps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurveCharacters {
    pub degree: Poly,
    pub class: Poly,
    pub nodes: Poly,
    pub cusps: Poly,
    /// Bitangent lines, the nodes of the dual curve.
    pub bitangents: Poly,
    /// Inflection points, the cusps of the dual curve.
    pub flexes: Poly,
}

/// The four Plücker relations as `formula - value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerResiduals {
    pub class: Poly,
    pub flexes: Poly,
    pub dual_class: Poly,
    pub dual_flexes: Poly,
}

impl PluckerResiduals {
    pub fn as_array(&self) -> [&Poly; 4] {
        [&self.class, &self.flexes, &self.dual_class, &self.dual_flexes]
    }
}

impl PlaneCurveCharacters {
    pub fn new(degree: Poly, class: Poly, nodes: Poly, cusps: Poly, bitangents: Poly, flexes: Poly) -> Result<Self> {
        let chars = PlaneCurveCharacters {
            degree,
            class,
            nodes,
            cusps,
            bitangents,
            flexes,
        };
        let ring = chars.ring();
        if chars.fields().iter().any(|(_, p)| p.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        for (name, value) in chars.fields() {
            require_count(name, value)?;
        }
        Ok(chars)
    }

    /// Characters in the order degree, class, nodes, cusps, bitangents, flexes.
    pub fn from_ints(values: [i64; 6]) -> Result<Self> {
        let [n, c, d, k, b, i] = values.map(number);
        PlaneCurveCharacters::new(n, c, d, k, b, i)
    }

    pub fn ring(&self) -> &Ring {
        self.degree.ring()
    }

    pub fn fields(&self) -> [(&'static str, &Poly); 6] {
        [
            ("degree", &self.degree),
            ("class", &self.class),
            ("nodes", &self.nodes),
            ("cusps", &self.cusps),
            ("bitangents", &self.bitangents),
            ("flexes", &self.flexes),
        ]
    }

    /// Integer values, when every character is a constant integer.
    pub fn to_integers(&self) -> Option<[BigInt; 6]> {
        let [a, b, c, d, e, f] = self.fields().map(|(_, p)| p.to_bigint());
        Some([a?, b?, c?, d?, e?, f?])
    }

    /// Characters of the dual curve.
    pub fn dual(&self) -> PlaneCurveCharacters {
        PlaneCurveCharacters {
            degree: self.class.clone(),
            class: self.degree.clone(),
            nodes: self.bitangents.clone(),
            cusps: self.flexes.clone(),
            bitangents: self.nodes.clone(),
            flexes: self.cusps.clone(),
        }
    }

    /// Geometric genus by adjunction on the curve itself.
    pub fn genus(&self) -> Poly {
        arithmetic_genus(&self.degree) - &self.nodes - &self.cusps
    }

    /// Geometric genus by adjunction on the dual curve.
    pub fn dual_genus(&self) -> Poly {
        self.dual().genus()
    }

    pub fn residuals(&self) -> PluckerResiduals {
        let side = |c: &PlaneCurveCharacters| {
            let n = &c.degree;
            let class = n * &(n - 1) - c.nodes.scale_int(2) - c.cusps.scale_int(3) - &c.class;
            let flexes = (n * &(n - 2)).scale_int(3) - c.nodes.scale_int(6) - c.cusps.scale_int(8) - &c.flexes;
            (class, flexes)
        };
        let (class, flexes) = side(self);
        let (dual_class, dual_flexes) = side(&self.dual());
        PluckerResiduals {
            class,
            flexes,
            dual_class,
            dual_flexes,
        }
    }

    /// The three symmetric generators as `lhs - rhs`.
    pub fn generator_residuals(&self) -> [Poly; 3] {
        let (n, nd) = (&self.degree, &self.class);
        let (d, k, b, i) = (&self.nodes, &self.cusps, &self.bitangents, &self.flexes);
        let first = n.scale_int(3) - k - nd.scale_int(3) + i;
        let second = n * &(n - 2) + nd * &(nd - 2) - d.scale_int(2) - k.scale_int(3) - b.scale_int(2) - i.scale_int(3);
        let gap = k - i;
        let third = (d - b).scale_int(18) - &gap * &(&gap + &nd.scale_int(6) - 27);
        [first, second, third]
    }

    /// Rows expressing the four relations through the three generators.
    fn generator_matrix(&self) -> [[Poly; 3]; 4] {
        let sum = &self.degree + &self.class;
        let gap = &self.cusps - &self.flexes;
        let lead = sum.scale_ratio(1, 6) + gap.scale_ratio(1, 18);
        let ring = self.ring();
        let q = |num, den| ring.one().scale_ratio(num, den);
        [
            [lead.clone(), q(1, 2), q(-1, 18)],
            [lead.scale_int(3) - 1, q(3, 2), q(-1, 6)],
            [-lead.clone(), q(1, 2), q(1, 18)],
            [-lead.scale_int(3) + 1, q(3, 2), q(1, 6)],
        ]
    }
}

/// `(d - 1)(d - 2) / 2`.
fn arithmetic_genus(degree: &Poly) -> Poly {
    (&(degree - 1) * &(degree - 2)).scale_ratio(1, 2)
}

/// Fills in class, flexes and bitangents from degree, nodes and cusps.
pub fn complete_plane_characters(degree: i64, nodes: i64, cusps: i64) -> Result<PlaneCurveCharacters> {
    if degree < 2 {
        return Err(Error::DegreeTooSmall { found: degree, min: 2 });
    }
    if nodes < 0 || cusps < 0 {
        return Err(Error::Inconsistent("node and cusp counts must be nonnegative".into()));
    }
    complete_plane_characters_poly(&number(degree), &number(nodes), &number(cusps))
}

pub fn complete_plane_characters_poly(degree: &Poly, nodes: &Poly, cusps: &Poly) -> Result<PlaneCurveCharacters> {
    let n = degree;
    let class = n * &(n - 1) - nodes.scale_int(2) - cusps.scale_int(3);
    let flexes = (n * &(n - 2)).scale_int(3) - nodes.scale_int(6) - cusps.scale_int(8);
    let bitangents = (&class * &(&class - 1) - n - flexes.scale_int(3)).scale_ratio(1, 2);
    PlaneCurveCharacters::new(n.clone(), class, nodes.clone(), cusps.clone(), bitangents, flexes)
}

/// Singularity counts on both sides recovered from degree, class and genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusSolution {
    pub nodes: Poly,
    pub cusps: Poly,
    pub bitangents: Poly,
    pub flexes: Poly,
}

impl GenusSolution {
    pub fn into_characters(self, degree: Poly, class: Poly) -> Result<PlaneCurveCharacters> {
        PlaneCurveCharacters::new(degree, class, self.nodes, self.cusps, self.bitangents, self.flexes)
    }
}

pub fn solve_from_genus(degree: i64, class: i64, genus: i64) -> Result<GenusSolution> {
    solve_from_genus_poly(&number(degree), &number(class), &number(genus))
}

pub fn solve_from_genus_poly(degree: &Poly, class: &Poly, genus: &Poly) -> Result<GenusSolution> {
    // nodes + cusps = a and 2 nodes + 3 cusps = b on each side.
    let side = |own: &Poly, other: &Poly| {
        let a = arithmetic_genus(own) - genus;
        let b = own * &(own - 1) - other;
        (a.scale_int(3) - &b, &b - &a.scale_int(2))
    };
    let (nodes, cusps) = side(degree, class);
    let (bitangents, flexes) = side(class, degree);
    let solution = GenusSolution {
        nodes,
        cusps,
        bitangents,
        flexes,
    };
    for (name, value) in [
        ("nodes", &solution.nodes),
        ("cusps", &solution.cusps),
        ("bitangents", &solution.bitangents),
        ("flexes", &solution.flexes),
    ] {
        require_count(name, value)?;
    }
    Ok(solution)
}

/// Evaluates every Plücker relation, the generator identities and the genus
/// equality on a character set.
pub fn verify_plucker_relations(chars: &PlaneCurveCharacters) -> Report {
    let zero = chars.ring().zero();
    let mut report = Report::new();
    let res = chars.residuals();
    for (name, value) in [
        ("class formula", &res.class),
        ("flex formula", &res.flexes),
        ("dual class formula", &res.dual_class),
        ("dual flex formula", &res.dual_flexes),
    ] {
        report.push(Check::equal(name, value, &zero));
    }
    let generators = chars.generator_residuals();
    for (name, value) in ["linear generator", "quadratic generator", "cubic generator"]
        .iter()
        .zip(&generators)
    {
        report.push(Check::equal(*name, value, &zero));
    }
    report.push(Check::equal(
        "class sum = flex sum / 3",
        &(&res.class + &res.dual_class),
        &(&res.flexes + &res.dual_flexes).scale_ratio(1, 3),
    ));
    let names = [
        "class formula",
        "flex formula",
        "dual class formula",
        "dual flex formula",
    ];
    for ((row, target), name) in chars.generator_matrix().iter().zip(res.as_array()).zip(names) {
        let rebuilt = row
            .iter()
            .zip(&generators)
            .fold(zero.clone(), |acc, (coef, gen)| acc + coef * gen);
        report.push(Check::equal(format!("generators rebuild {name}"), &rebuilt, target));
    }
    report.push(Check::equal("genus", &chars.genus(), &chars.dual_genus()));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Field;

    fn ints(chars: &PlaneCurveCharacters) -> Vec<i64> {
        chars
            .to_integers()
            .unwrap()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn completes_classical_curves() {
        assert_eq!(
            ints(&complete_plane_characters(4, 0, 0).unwrap()),
            [4, 12, 0, 0, 28, 24]
        );
        assert_eq!(ints(&complete_plane_characters(3, 1, 0).unwrap()), [3, 4, 1, 0, 0, 3]);
        assert_eq!(ints(&complete_plane_characters(3, 0, 1).unwrap()), [3, 3, 0, 1, 0, 1]);
    }

    #[test]
    fn rejects_impossible_inputs() {
        assert!(matches!(
            complete_plane_characters(1, 0, 0),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert!(complete_plane_characters(3, -1, 0).is_err());
        // A cubic with three nodes is reducible; its class would be zero and
        // its flex count negative.
        assert!(complete_plane_characters(3, 3, 0).is_err());
    }

    #[test]
    fn genus_solutions() {
        let s = solve_from_genus(6, 12, 4).unwrap();
        let got: Vec<_> = [s.nodes, s.cusps, s.bitangents, s.flexes]
            .iter()
            .map(|p| p.to_bigint().unwrap())
            .collect();
        assert_eq!(got, [0, 6, 27, 24].map(BigInt::from));
        let s = solve_from_genus(12, 36, 19).unwrap();
        let got: Vec<_> = [s.nodes, s.cusps, s.bitangents, s.flexes]
            .iter()
            .map(|p| p.to_bigint().unwrap())
            .collect();
        assert_eq!(got, [12, 24, 480, 96].map(BigInt::from));
        let s = solve_from_genus(3, 6, 1).unwrap();
        assert!(s.nodes.is_zero() && s.cusps.is_zero());
        assert!(solve_from_genus(3, 6, 5).is_err());
    }

    #[test]
    fn consistent_sets_verify() {
        for chars in [
            PlaneCurveCharacters::from_ints([4, 12, 0, 0, 28, 24]).unwrap(),
            PlaneCurveCharacters::from_ints([3, 4, 1, 0, 0, 3]).unwrap(),
        ] {
            let report = verify_plucker_relations(&chars);
            assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn perturbed_bitangents_fail() {
        let chars = PlaneCurveCharacters::from_ints([4, 12, 0, 0, 29, 24]).unwrap();
        let report = verify_plucker_relations(&chars);
        assert_eq!(report.get("dual class formula").unwrap().lhs, "-2");
        assert_ne!(report.get("cubic generator").unwrap().lhs, "0");
        assert!(report.get("class formula").unwrap().passed());
        // The generator identities hold whatever the values are.
        assert!(report.get("generators rebuild dual class formula").unwrap().passed());
    }

    #[test]
    fn generator_identities_are_polynomial() {
        let ring = Ring::new(&["n", "m", "d", "k", "b", "i"], Field::Rational).unwrap();
        let [n, m, d, k, b, i] = [0, 1, 2, 3, 4, 5].map(|j| ring.gen(j));
        let chars = PlaneCurveCharacters::new(n, m, d, k, b, i).unwrap();
        let report = verify_plucker_relations(&chars);
        for name in [
            "class sum = flex sum / 3",
            "generators rebuild class formula",
            "generators rebuild flex formula",
            "generators rebuild dual class formula",
            "generators rebuild dual flex formula",
        ] {
            assert!(report.get(name).unwrap().passed(), "{name}");
        }
        // The genus difference lies in the ideal through a fixed combination.
        let res = chars.residuals();
        let [g1, _, g3] = chars.generator_residuals();
        let lhs = (-res.class.clone() - res.dual_class.scale_int(2) + &res.dual_flexes).scale_ratio(1, 2);
        let coef =
            (&chars.degree + &chars.class).scale_ratio(1, 3) + (&chars.cusps - &chars.flexes).scale_ratio(1, 9) - 1;
        let rhs = -(&coef * &g1).scale_ratio(1, 2) + g3.scale_ratio(1, 18);
        assert_eq!(lhs, rhs);
    }
}

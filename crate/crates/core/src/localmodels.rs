//! Discriminants of the versal deformations of a tacnode, of a node plus a
//! cusp, and of three nodes, with their double curves.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::polarity::tangent_cone;
use crate::polyring::{parse_poly, resultant_univariate, ExtNat, Field, Poly, ProjPoint, Ring, Scalar};
use crate::report::{Check, Report};

/// Coordinates `(a, b, c)` of the deformation space.
pub fn deformation_ring() -> Ring {
    Ring::new(&["a", "b", "c"], Field::Rational).expect("valid names")
}

fn param_ring(names: &[&str]) -> Ring {
    Ring::new(names, Field::Rational).expect("valid names")
}

fn p(text: &str, ring: &Ring) -> Poly {
    parse_poly(text, ring).expect("well-formed literal")
}

/// Discriminant of `x^4 + a x^2 + b x + c` from a resultant, normalized
/// so that the `c^3` coefficient is 256.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TacnodeDiscriminant {
    /// `Res_x(f, f')` in the Sylvester layout.
    pub resultant: Poly,
    /// Factor taking the resultant to the normalized discriminant.
    pub unit: Scalar,
    pub discriminant: Poly,
    pub reference: Poly,
}

impl TacnodeDiscriminant {
    pub fn matches_reference(&self) -> bool {
        self.discriminant == self.reference
    }
}

/// `256c³ − 128a²c² + 144ab²c − 27b⁴ + 16a⁴c − 4a³b²`.
pub fn swallowtail_reference() -> Poly {
    p(
        "256*c^3 - 128*a^2*c^2 + 144*a*b^2*c - 27*b^4 + 16*a^4*c - 4*a^3*b^2",
        &deformation_ring(),
    )
}

/// Discriminant of a monic univariate family `f` in `x`, as `Res_x(f, f')`
/// moved into the `(a, b, c)` ring.
fn resultant_discriminant(f: &str) -> Result<Poly> {
    let ring = param_ring(&["x", "a", "b", "c"]);
    let f = p(f, &ring);
    let res = resultant_univariate(&f, &f.partial(0), "x")?;
    let target = deformation_ring();
    let images = vec![target.zero(), target.gen(0), target.gen(1), target.gen(2)];
    res.compose(&target, &images)
}

/// Scale `poly` so that its coefficient at `exps` becomes `target`.
fn normalize(poly: &Poly, exps: &[u32], target: i64) -> Result<(Scalar, Poly)> {
    let field = poly.field();
    let unit = Scalar::from_i64(field, target)
        .div(&poly.coefficient(exps))
        .ok_or_else(|| Error::Inconsistent("normalizing coefficient vanishes".into()))?;
    Ok((unit.clone(), poly.scale(&unit)))
}

pub fn tacnode_discriminant() -> Result<TacnodeDiscriminant> {
    let resultant = resultant_discriminant("x^4 + a*x^2 + b*x + c")?;
    let (unit, discriminant) = normalize(&resultant, &[0, 0, 3], 256)?;
    Ok(TacnodeDiscriminant {
        resultant,
        unit,
        discriminant,
        reference: swallowtail_reference(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumId {
    Swallowtail,
    Gamma,
    TripleT,
}

impl StratumId {
    pub const ALL: [StratumId; 3] = [StratumId::Swallowtail, StratumId::Gamma, StratumId::TripleT];

    pub fn name(self) -> &'static str {
        match self {
            StratumId::Swallowtail => "swallowtail",
            StratumId::Gamma => "gamma",
            StratumId::TripleT => "triple_t",
        }
    }
}

/// A curve in the deformation space given by polynomial branches and ideal
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumCurve {
    /// Each branch maps the parameter ring into `(a, b, c)`.
    pub branches: Vec<Vec<Poly>>,
    pub ideal: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumModel {
    pub id: StratumId,
    pub discriminant: Poly,
    /// Two-parameter map onto the discriminant, when one is known.
    pub surface: Option<Vec<Poly>>,
    /// `None` when the stratum is empty.
    pub cuspidal_curve: Option<StratumCurve>,
    pub ordinary_curve: StratumCurve,
}

/// Normalized product of the discriminants of `x^2 + a` and `x^3 + bx + c`.
fn gamma_discriminant() -> Result<Poly> {
    let node = resultant_discriminant("x^2 + a")?;
    let cusp = resultant_discriminant("x^3 + b*x + c")?;
    Ok(normalize(&(node * cusp), &[1, 3, 0], 4)?.1)
}

fn triple_t_discriminant() -> Result<Poly> {
    let factor = |name: &str| resultant_discriminant(&format!("x^2 + {name}"));
    let product = factor("a")? * factor("b")? * factor("c")?;
    Ok(normalize(&product, &[1, 1, 1], 1)?.1)
}

pub fn stratum_model(id: StratumId) -> Result<StratumModel> {
    let abc = deformation_ring();
    let uv = param_ring(&["u", "v"]);
    let u = param_ring(&["u"]);
    let map = |ring: &Ring, parts: [&str; 3]| parts.iter().map(|s| p(s, ring)).collect::<Vec<_>>();
    let gens = |parts: &[&str]| parts.iter().map(|s| p(s, &abc)).collect::<Vec<_>>();
    Ok(match id {
        StratumId::Swallowtail => StratumModel {
            id,
            discriminant: tacnode_discriminant()?.discriminant,
            surface: Some(map(
                &uv,
                [
                    "-3*u^2 - 2*u*v - v^2",
                    "2*u^3 + 4*u^2*v + 2*u*v^2",
                    "-2*u^3*v - u^2*v^2",
                ],
            )),
            cuspidal_curve: Some(StratumCurve {
                branches: vec![map(&u, ["-6*u^2", "8*u^3", "-3*u^4"])],
                ideal: gens(&["a^2 + 12*c", "8*a^3 + 27*b^2"]),
            }),
            ordinary_curve: StratumCurve {
                branches: vec![map(&u, ["-2*u^2", "0", "u^4"])],
                ideal: gens(&["b", "a^2 - 4*c"]),
            },
        },
        StratumId::Gamma => StratumModel {
            id,
            discriminant: gamma_discriminant()?,
            surface: None,
            cuspidal_curve: Some(StratumCurve {
                branches: vec![map(&u, ["u", "0", "0"])],
                ideal: gens(&["b", "c"]),
            }),
            ordinary_curve: StratumCurve {
                branches: vec![map(&u, ["0", "-3*u^2", "2*u^3"])],
                ideal: gens(&["a", "4*b^3 + 27*c^2"]),
            },
        },
        StratumId::TripleT => StratumModel {
            id,
            discriminant: triple_t_discriminant()?,
            surface: None,
            cuspidal_curve: None,
            ordinary_curve: StratumCurve {
                branches: vec![
                    map(&u, ["u", "0", "0"]),
                    map(&u, ["0", "u", "0"]),
                    map(&u, ["0", "0", "u"]),
                ],
                ideal: gens(&["a*b", "a*c", "b*c"]),
            },
        },
    })
}

fn pull_back(f: &Poly, images: &[Poly]) -> Result<Poly> {
    let target = images[0].ring().clone();
    f.compose(&target, images)
}

/// Vanishing checks for one model, all as polynomial identities in the
/// parameters.
pub fn stratum_check(id: StratumId) -> Result<Report> {
    let model = stratum_model(id)?;
    let mut report = Report::new();
    let tag = id.name();
    if let Some(surface) = &model.surface {
        let image = pull_back(&model.discriminant, surface)?;
        report.push(Check::equal(
            format!("{tag}: surface map lies on the discriminant"),
            &image,
            &image.ring().zero(),
        ));
    }
    let mut curves = vec![("ordinary", &model.ordinary_curve)];
    if let Some(c) = &model.cuspidal_curve {
        curves.push(("cuspidal", c));
    }
    for (label, curve) in curves {
        for (k, branch) in curve.branches.iter().enumerate() {
            let on_disc = pull_back(&model.discriminant, branch)?;
            report.push(Check::equal(
                format!("{tag}: {label} branch {k} lies on the discriminant"),
                &on_disc,
                &on_disc.ring().zero(),
            ));
            for (g, gen) in curve.ideal.iter().enumerate() {
                let image = pull_back(gen, branch)?;
                report.push(Check::equal(
                    format!("{tag}: {label} branch {k} annihilates generator {g}"),
                    &image,
                    &image.ring().zero(),
                ));
            }
        }
    }
    Ok(report)
}

/// Minimum parameter valuation of the pulled-back generators, divided by
/// the degree of the parametrization onto its image.
pub fn contact_order(param: &[Poly], ideal_gens: &[Poly], covering_degree: u32) -> Result<BigRational> {
    if covering_degree == 0 {
        return Err(Error::OrderOutOfRange {
            order: 0,
            min: 1,
            max: u32::MAX,
        });
    }
    let mut least = u32::MAX;
    for (i, g) in ideal_gens.iter().enumerate() {
        match pull_back(g, param)?.order() {
            ExtNat::Infinity => return Err(Error::DegeneratePullback(i)),
            ExtNat::Finite(v) => least = least.min(v),
        }
    }
    Ok(BigRational::new(least.into(), covering_degree.into()))
}

/// Multiplicity and tangent cone of the swallowtail at the origin, from the
/// homogenized discriminant.
pub fn swallowtail_cone() -> Result<(u32, Poly)> {
    let disc = tacnode_discriminant()?.discriminant;
    let ring = Ring::new(&["a", "b", "c", "h"], Field::Rational)?;
    let top = disc.degree()?;
    let mut homogenized = ring.zero();
    for (mono, coeff) in disc.terms() {
        let mut exps = mono.exps().to_vec();
        exps.push(top - mono.degree());
        homogenized = homogenized + Poly::from_terms(&ring, [(exps, coeff.clone())]);
    }
    let origin = ProjPoint::from_ints(Field::Rational, &[0, 0, 0, 1])?;
    let cone = tangent_cone(&homogenized, &origin)?;
    let back = cone.cone.compose(
        &deformation_ring(),
        &[
            deformation_ring().gen(0),
            deformation_ring().gen(1),
            deformation_ring().gen(2),
            deformation_ring().zero(),
        ],
    )?;
    Ok((cone.multiplicity, back))
}

//! Polars, polar k-ics, tangent hyperplanes, tangent cones and the contact
//! order of a line with a hypersurface.

use crate::error::{Error, Result};
use crate::polyring::{factorial, ExtNat, Field, Poly, ProjPoint, Ring, Scalar};

/// A polar hypersurface. When every coefficient vanishes the polar is the
/// whole ambient space and `whole_space` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polar {
    pub equation: Poly,
    pub whole_space: bool,
}

impl Polar {
    fn new(equation: Poly) -> Polar {
        Polar {
            whole_space: equation.is_zero(),
            equation,
        }
    }
}

/// Contact of the line through `base_point` and `direction_point` with a
/// hypersurface at `base_point`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineContactReport {
    pub base_point: ProjPoint,
    pub direction_point: ProjPoint,
    /// Order of vanishing of the restriction to the line.
    pub multiplicity: ExtNat,
    /// Entry `k-1` records whether the base point lies on the `k`-th polar
    /// with respect to the direction point, for `k = 1..=d`.
    pub polar_memberships: Vec<bool>,
    /// Whether the memberships predict the same multiplicity.
    pub routes_agree: bool,
}

impl LineContactReport {
    /// Multiplicity read off the polar memberships alone.
    pub fn multiplicity_from_memberships(&self, on_hypersurface: bool) -> ExtNat {
        if !on_hypersurface {
            return ExtNat::Finite(0);
        }
        let leading = self.polar_memberships.iter().take_while(|m| **m).count();
        if leading == self.polar_memberships.len() {
            ExtNat::Infinity
        } else {
            ExtNat::Finite(leading as u32 + 1)
        }
    }
}

/// Local equation of a hypersurface at a point after moving the point to a
/// coordinate vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentConeReport {
    pub multiplicity: u32,
    /// Lowest-order part, free of the pivot variable.
    pub cone: Poly,
    /// Index of the first nonzero coordinate of the point.
    pub pivot: usize,
    /// Images of the coordinates under the change of chart.
    pub chart: Vec<Poly>,
    point: ProjPoint,
}

impl TangentConeReport {
    /// Coordinates of `b` in the chart: the inverse of the recorded change.
    pub fn chart_coordinates(&self, b: &ProjPoint) -> ProjPoint {
        let a = self.point.coords();
        let p = self.pivot;
        let ratio = b.coords()[p].div(&a[p]).expect("nonzero pivot");
        let coords = (0..a.len())
            .map(|j| {
                if j == p {
                    ratio.clone()
                } else {
                    b.coords()[j].sub(&a[j].mul(&ratio))
                }
            })
            .collect::<Vec<_>>();
        if coords.iter().all(Scalar::is_zero) {
            // b equals the point itself, which is the vertex of the chart
            let mut e = vec![Scalar::zero(b.field()); a.len()];
            e[p] = Scalar::one(b.field());
            return ProjPoint::new(e).expect("unit vector");
        }
        ProjPoint::new(coords).expect("nonzero image")
    }
}

fn degree_of(f: &Poly) -> Result<u32> {
    f.homogeneous_degree()
}

/// `Σ a_i ∂_i f`.
pub fn directional_derivative(f: &Poly, a: &ProjPoint) -> Poly {
    let ring = f.ring();
    a.coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(ring.zero(), |acc, (i, c)| acc + f.partial(i).scale(c))
}

/// `D^{a^k} F`, the `k`-th polar of `F` with respect to `a`.
pub fn polar(f: &Poly, a: &ProjPoint, k: u32) -> Result<Polar> {
    let d = degree_of(f)?;
    a.check_in(f.ring())?;
    if k > d {
        return Err(Error::OrderOutOfRange {
            order: k,
            min: 0,
            max: d,
        });
    }
    let mut g = f.clone();
    for _ in 0..k {
        g = directional_derivative(&g, a);
    }
    Ok(Polar::new(g))
}

/// Ring holding two copies of the coordinates: the originals and a
/// second set used as the polarizing point.
fn doubled_ring(ring: &Ring) -> Ring {
    let mut names: Vec<String> = ring.vars().to_vec();
    for i in 0..ring.nvars() {
        let mut name = format!("pt{i}");
        while names.contains(&name) {
            name.insert(0, '_');
        }
        names.push(name);
    }
    Ring::new(&names, ring.field()).expect("fresh identifiers")
}

/// `D_{a^k} Z`: the locus of `x` with `a ∈ D^{x^k} Z`, obtained by
/// polarizing symbolically in a second set of variables and then
/// specializing that set to `a`.
pub fn polar_kic(f: &Poly, a: &ProjPoint, k: u32) -> Result<Polar> {
    let d = degree_of(f)?;
    a.check_in(f.ring())?;
    if k == 0 || k >= d {
        return Err(Error::OrderOutOfRange {
            order: k,
            min: 1,
            max: d.saturating_sub(1),
        });
    }
    let ring = f.ring();
    let n = ring.nvars();
    let big = doubled_ring(ring);
    let moved: Vec<Poly> = (0..n).map(|i| big.gen(n + i)).collect();
    let mut g = f.compose(&big, &moved)?;
    for _ in 0..k {
        let step = (0..n).fold(big.zero(), |acc, i| acc + big.gen(i) * g.partial(n + i));
        g = step;
    }
    let mut images = ring.gens();
    images.extend(a.coords().iter().map(|c| ring.constant(c.clone())));
    Ok(Polar::new(g.compose(ring, &images)?))
}

/// `Σ ∂_iF(q) x_i`.
pub fn tangent_hyperplane(f: &Poly, q: &ProjPoint, require_smooth: bool) -> Result<Poly> {
    q.check_in(f.ring())?;
    if !f.eval(q.coords())?.is_zero() {
        return Err(Error::NotOnHypersurface);
    }
    let grad = f
        .gradient()
        .iter()
        .map(|g| g.eval(q.coords()))
        .collect::<Result<Vec<_>>>()?;
    if require_smooth && grad.iter().all(Scalar::is_zero) {
        return Err(Error::SingularPoint);
    }
    Ok(f.ring().linear_form(&grad))
}

/// Restriction of `f` to the parametrized line `a + T b`, as a polynomial in `T`.
pub fn restrict_to_line(f: &Poly, a: &ProjPoint, b: &ProjPoint) -> Result<Poly> {
    a.check_in(f.ring())?;
    b.check_in(f.ring())?;
    let line = Ring::new(&["T"], f.field())?;
    let t = line.gen(0);
    let images: Vec<Poly> = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(ai, bi)| line.constant(ai.clone()) + t.scale(bi))
        .collect();
    f.compose(&line, &images)
}

/// Intersection multiplicity at `a` of the hypersurface with the line `ab`.
pub fn line_multiplicity(f: &Poly, a: &ProjPoint, b: &ProjPoint) -> Result<LineContactReport> {
    let d = degree_of(f)?;
    if a == b {
        return Err(Error::CoincidentPoints);
    }
    let multiplicity = restrict_to_line(f, a, b)?.valuation_in(0);
    let mut polar_memberships = Vec::with_capacity(d as usize);
    for k in 1..=d {
        let value = polar(f, b, k)?.equation.eval(a.coords())?;
        polar_memberships.push(value.is_zero());
    }
    let mut report = LineContactReport {
        base_point: a.clone(),
        direction_point: b.clone(),
        multiplicity,
        polar_memberships,
        routes_agree: false,
    };
    let on = f.eval(a.coords())?.is_zero();
    report.routes_agree = report.multiplicity_from_memberships(on) == multiplicity;
    Ok(report)
}

/// Change of coordinates sending the pivot vertex to `a` and fixing the
/// other vertices.
fn chart_images(ring: &Ring, a: &ProjPoint) -> (usize, Vec<Poly>) {
    let p = a.first_nonzero();
    let xp = ring.gen(p);
    let images = (0..ring.nvars())
        .map(|j| {
            let moved = xp.scale(&a.coords()[j]);
            if j == p {
                moved
            } else {
                moved + ring.gen(j)
            }
        })
        .collect();
    (p, images)
}

/// Multiplicity and tangent cone of the hypersurface at a point on it.
pub fn tangent_cone(f: &Poly, a: &ProjPoint) -> Result<TangentConeReport> {
    let d = degree_of(f)?;
    a.check_in(f.ring())?;
    if !f.eval(a.coords())?.is_zero() {
        return Err(Error::NotOnHypersurface);
    }
    let ring = f.ring();
    let (pivot, chart) = chart_images(ring, a);
    let local = f.compose(ring, &chart)?;
    let by_power = local.coefficients_in(pivot);
    let top = by_power.iter().rposition(|c| !c.is_zero()).expect("nonzero polynomial");
    Ok(TangentConeReport {
        multiplicity: d - top as u32,
        cone: by_power[top].clone(),
        pivot,
        chart,
        point: a.clone(),
    })
}

/// `k! / (d-k)!` as a field element: the factor relating the polar k-ic to
/// the `(d-k)`-th polar.
pub fn kic_ratio(field: Field, d: u32, k: u32) -> Scalar {
    Scalar::from_bigint(field, &factorial(k))
        .div(&Scalar::from_bigint(field, &factorial(d - k)))
        .expect("factorials are units")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn space() -> Ring {
        Ring::space(Field::Rational)
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &space()).unwrap()
    }

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(Field::Rational, c).unwrap()
    }

    #[test]
    fn first_polars() {
        let q = polar(&p("x^2+y^2+z^2+w^2"), &pt(&[1, 0, 0, 0]), 1).unwrap();
        assert_eq!(q.equation, p("2*x"));
        let c = polar(&p("x^3+y^3+z^3+w^3"), &pt(&[1, 1, 1, 1]), 1).unwrap();
        assert_eq!(c.equation, p("3*x^2+3*y^2+3*z^2+3*w^2"));
    }

    #[test]
    fn full_polarization_is_constant() {
        let f = p("x^3 - 2*x*y*z + w^2*y");
        let a = pt(&[1, 2, -1, 3]);
        let full = polar(&f, &a, 3).unwrap().equation;
        let expected = f.eval(a.coords()).unwrap().mul(&Scalar::from_i64(Field::Rational, 6));
        assert_eq!(full.constant_value().unwrap(), expected);
        assert!(polar(&f, &a, 4).is_err());
    }

    #[test]
    fn whole_space_flag() {
        let f = p("x^3 + y^3");
        let polar_at_z = polar(&f, &pt(&[0, 0, 1, 0]), 1).unwrap();
        assert!(polar_at_z.whole_space);
    }

    #[test]
    fn polar_quadric_of_diagonal_cubic() {
        let f = p("x^3+y^3+z^3-3*w^3");
        let kic = polar_kic(&f, &pt(&[1, 1, 1, 1]), 2).unwrap().equation;
        assert_eq!(kic, p("6*x^2+6*y^2+6*z^2-18*w^2"));
        let first = polar(&f, &pt(&[1, 1, 1, 1]), 1).unwrap().equation;
        assert_eq!(kic, first.scale(&kic_ratio(Field::Rational, 3, 2)));
    }

    #[test]
    fn polar_hyperplane_of_quadric() {
        let f = p("x*w - y*z + 2*x^2");
        let a = pt(&[1, 2, 3, 4]);
        let kic = polar_kic(&f, &a, 1).unwrap().equation;
        // bilinear form B(a, x) with B(x, x) = F
        assert_eq!(kic, p("8*x - 3*y - 2*z + w"));
    }

    #[test]
    fn tangent_planes() {
        let fermat = p("x^3+y^3+z^3+w^3");
        assert_eq!(
            tangent_hyperplane(&fermat, &pt(&[1, -1, 0, 0]), true).unwrap(),
            p("3*x+3*y")
        );
        assert_eq!(
            tangent_hyperplane(&p("x^2-y^2"), &pt(&[1, 1, 0, 0]), true).unwrap(),
            p("2*x-2*y")
        );
        assert_eq!(
            tangent_hyperplane(&p("y^2*w-x^3"), &pt(&[0, 0, 0, 1]), true),
            Err(Error::SingularPoint)
        );
        assert_eq!(
            tangent_hyperplane(&fermat, &pt(&[1, 0, 0, 0]), true),
            Err(Error::NotOnHypersurface)
        );
    }

    #[test]
    fn line_contacts() {
        let fermat = p("x^3+y^3+z^3+w^3");
        let r = line_multiplicity(&fermat, &pt(&[1, -1, 0, 0]), &pt(&[0, 0, 1, 0])).unwrap();
        assert_eq!(r.multiplicity, ExtNat::Finite(3));
        assert_eq!(r.polar_memberships, vec![true, true, false]);
        assert!(r.routes_agree);

        let diag = p("x^3+y^3+z^3-3*w^3");
        let r = line_multiplicity(&diag, &pt(&[1, 1, 1, 1]), &pt(&[1, -1, 0, 0])).unwrap();
        assert_eq!(r.multiplicity, ExtNat::Finite(2));
        assert!(r.routes_agree);

        let r = line_multiplicity(&fermat, &pt(&[1, -1, 1, -1]), &pt(&[1, -1, 0, 0])).unwrap();
        assert_eq!(r.multiplicity, ExtNat::Infinity);
        assert!(r.routes_agree);

        assert_eq!(
            line_multiplicity(&fermat, &pt(&[1, 1, 0, 0]), &pt(&[2, 2, 0, 0])),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn line_restriction_expansions() {
        let line = Ring::new(&["T"], Field::Rational).unwrap();
        let t = line.gen(0);
        let f = restrict_to_line(&p("x^3+y^3+z^3+w^3"), &pt(&[1, -1, 0, 0]), &pt(&[0, 0, 1, 0]));
        assert_eq!(f.unwrap(), t.pow(3));
        let g = restrict_to_line(&p("x^3+y^3+z^3-3*w^3"), &pt(&[1, 1, 1, 1]), &pt(&[1, -1, 0, 0]));
        assert_eq!(g.unwrap(), t.pow(2).scale_int(6));
    }

    #[test]
    fn cones_of_singular_points() {
        let cusp = tangent_cone(&p("y^2*w - x^3"), &pt(&[0, 0, 0, 1])).unwrap();
        assert_eq!((cusp.multiplicity, cusp.cone), (2, p("y^2")));
        let node = tangent_cone(&p("x*y*w - z^3"), &pt(&[0, 0, 0, 1])).unwrap();
        assert_eq!((node.multiplicity, node.cone), (2, p("x*y")));
    }

    #[test]
    fn smooth_cone_is_the_tangent_plane() {
        let fermat = p("x^3+y^3+z^3+w^3");
        let a = pt(&[1, -1, 0, 0]);
        let cone = tangent_cone(&fermat, &a).unwrap();
        assert_eq!(cone.multiplicity, 1);
        // chart x -> x, y -> -x + y: the tangent plane 3x+3y becomes 3y
        let tangent = tangent_hyperplane(&fermat, &a, true).unwrap();
        assert_eq!(tangent.compose(fermat.ring(), &cone.chart).unwrap(), cone.cone);
    }

    #[test]
    fn conic_meets_tangent_line_doubly() {
        // Plane cubic through a = (0:0:1); the polar line and polar conic at a
        // meet there with multiplicity at least two.
        let plane = Ring::plane(Field::Rational);
        let f = parse_poly("y*z^2 + x^2*z - x^3 + y^3", &plane).unwrap();
        let a = ProjPoint::from_ints(Field::Rational, &[0, 0, 1]).unwrap();
        let line = polar_kic(&f, &a, 1).unwrap().equation;
        let conic = polar_kic(&f, &a, 2).unwrap().equation;
        assert_eq!(line, parse_poly("y", &plane).unwrap());
        // On the line y = 0 the conic restricts to a multiple of x^2.
        let images = vec![plane.gen(0), plane.zero(), plane.gen(2)];
        let on_line = conic.compose(&plane, &images).unwrap();
        let res = crate::polyring::resultant_univariate(&line, &conic, "y").unwrap();
        assert_eq!(res, on_line);
        assert_eq!(on_line, parse_poly("2*x^2", &plane).unwrap());
        assert!(on_line.valuation_in(0) >= ExtNat::Finite(2));
    }
}

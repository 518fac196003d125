//! Seeded randomized checks of the polarity and curvature identities.
//!
//! Each suite draws its instances from its own ChaCha stream, so a suite's
//! outcome depends only on the seed, the instance count and the field.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curvature::{
    bordered_hessian, hessian_determinant, scalar_determinant, second_fundamental_form, FundamentalForm,
};
use crate::error::Result;
use crate::flecnodal::flecnodal_member;
use crate::polarity::{kic_ratio, line_multiplicity, polar, polar_kic, tangent_cone};
use crate::polyring::{factorial, ExtNat, Field, Poly, ProjPoint, Ring, Scalar};
use crate::report::{Check, Report};

/// Largest absolute value of a random rational coordinate or coefficient.
const RATIONAL_BOUND: i64 = 6;

/// Random field elements, points and forms.
pub struct Sampler {
    rng: ChaCha8Rng,
    field: Field,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64, field: Field) -> Sampler {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng, field }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Small integers over the rationals, uniform residues over `F_p`.
    pub fn scalar(&mut self) -> Scalar {
        match self.field {
            Field::Rational => Scalar::from_i64(self.field, self.rng.gen_range(-RATIONAL_BOUND..=RATIONAL_BOUND)),
            Field::Prime(p) => Scalar::from_bigint(self.field, &BigInt::from(self.rng.gen_range(0..p))),
        }
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn range(&mut self, lo: u32, hi: u32) -> u32 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn point(&mut self, dim: usize) -> ProjPoint {
        loop {
            let coords: Vec<Scalar> = (0..dim).map(|_| self.scalar()).collect();
            if let Ok(p) = ProjPoint::new(coords) {
                return p;
            }
        }
    }

    /// A point different from `other` as a projective point.
    pub fn point_off(&mut self, other: &ProjPoint) -> ProjPoint {
        loop {
            let p = self.point(other.dim());
            if &p != other {
                return p;
            }
        }
    }

    /// Dense random form of the given degree, nonzero.
    pub fn form(&mut self, ring: &Ring, degree: u32) -> Poly {
        self.sparse_form(ring, degree, usize::MAX)
    }

    /// Random form with at most `terms` monomials, nonzero.
    pub fn sparse_form(&mut self, ring: &Ring, degree: u32, terms: usize) -> Poly {
        let mut monomials = monomials(ring.nvars(), degree);
        loop {
            while monomials.len() > terms {
                let i = self.index(monomials.len());
                monomials.swap_remove(i);
            }
            let f = Poly::from_terms(ring, monomials.iter().map(|m| (m.clone(), self.scalar())));
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// Random linear form vanishing at every given point.
    pub fn form_through(&mut self, ring: &Ring, points: &[&ProjPoint]) -> Poly {
        let Some((last, rest)) = points.split_last() else {
            return loop {
                let l = self.linear(ring);
                if !l.is_zero() {
                    break l;
                }
            };
        };
        loop {
            let l = self.form_through(ring, rest);
            let m = self.form_through(ring, rest);
            let l = vanish_at(&l, last, &m);
            if !l.is_zero() {
                return l;
            }
        }
    }

    /// Independent linear forms, all but the last vanishing at `p`.
    pub fn frame_at(&mut self, ring: &Ring, p: &ProjPoint) -> Vec<Poly> {
        let n = ring.nvars();
        loop {
            let mut forms: Vec<Poly> = (1..n).map(|_| self.form_through(ring, &[p])).collect();
            forms.push(self.linear(ring));
            let rows: Vec<Vec<Scalar>> = forms
                .iter()
                .map(|l| {
                    (0..n)
                        .map(|i| {
                            let mut e = vec![0; n];
                            e[i] = 1;
                            l.coefficient(&e)
                        })
                        .collect()
                })
                .collect();
            let transverse = forms[n - 1].eval(p.coords()).expect("matching dimension");
            if !scalar_determinant(&rows).is_zero() && !transverse.is_zero() {
                return forms;
            }
        }
    }

    fn linear(&mut self, ring: &Ring) -> Poly {
        let coeffs: Vec<Scalar> = (0..ring.nvars()).map(|_| self.scalar()).collect();
        ring.linear_form(&coeffs)
    }
}

/// `l(p) m - m(p) l`: vanishes at `p` and wherever both `l` and `m` do.
fn vanish_at(l: &Poly, p: &ProjPoint, m: &Poly) -> Poly {
    let lp = l.eval(p.coords()).expect("matching dimension");
    let mp = m.eval(p.coords()).expect("matching dimension");
    if lp.is_zero() {
        return l.clone();
    }
    m.scale(&lp) - l.scale(&mp)
}

/// Exponent vectors of all monomials of a degree.
pub fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if degree == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in monomials(nvars - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Seed, instance count and field shared by the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyConfig {
    pub seed: u64,
    pub count: usize,
    pub field: Field,
}

impl PropertyConfig {
    pub fn new(seed: u64, count: usize, field: Field) -> Self {
        PropertyConfig { seed, count, field }
    }

    fn sampler(&self, stream: u64) -> Sampler {
        Sampler::new(self.seed, stream, self.field)
    }
}

fn tally(name: &str, field: Field, passed: usize, count: usize) -> Check {
    Check::holds(
        format!("{name} over {field}"),
        passed == count,
        format!("{passed} of {count} instances"),
        count,
    )
}

fn ambient(s: &mut Sampler) -> Ring {
    if s.coin() {
        Ring::space(s.field())
    } else {
        Ring::plane(s.field())
    }
}

fn field_int(field: Field, v: &BigInt) -> Scalar {
    Scalar::from_bigint(field, v)
}

/// `D^{b^k}F(a) = k!/(d-k)! D^{a^{d-k}}F(b)`, zero on one side exactly
/// when zero on the other; the polar k-ic at `a` evaluated at `b` agrees.
/// Every other instance is adjusted so that the left side vanishes.
pub fn polar_symmetry(cfg: &PropertyConfig) -> Result<Check> {
    let mut s = cfg.sampler(1);
    let mut passed = 0;
    for i in 0..cfg.count {
        let ring = ambient(&mut s);
        let d = s.range(2, 4);
        let k = s.range(1, d - 1);
        let a = s.point(ring.nvars());
        let b = s.point(ring.nvars());
        let mut f = s.form(&ring, d);
        if i % 2 == 1 {
            let l = s.form_through(&ring, &[]);
            let g = l.pow(d);
            let vf = polar(&f, &b, k)?.equation.eval(a.coords())?;
            let vg = polar(&g, &b, k)?.equation.eval(a.coords())?;
            if !vg.is_zero() {
                f = f.scale(&vg) - g.scale(&vf);
            }
            if f.is_zero() {
                f = s.form(&ring, d);
            }
        }
        let left = polar(&f, &b, k)?.equation.eval(a.coords())?;
        let right = polar(&f, &a, d - k)?.equation.eval(b.coords())?;
        let via_kic = polar_kic(&f, &a, k)?.equation.eval(b.coords())?;
        let ratio = kic_ratio(cfg.field, d, k);
        if left == right.mul(&ratio) && left.is_zero() == right.is_zero() && via_kic == left {
            passed += 1;
        }
    }
    Ok(tally("polar symmetry", cfg.field, passed, cfg.count))
}

/// `D^{a^k}F(a) = d!/(d-k)! F(a)`.
pub fn euler_polar_identity(cfg: &PropertyConfig) -> Result<Check> {
    let mut s = cfg.sampler(2);
    let mut passed = 0;
    for _ in 0..cfg.count {
        let ring = ambient(&mut s);
        let d = s.range(1, 5);
        let k = s.range(0, d);
        let f = s.form(&ring, d);
        let a = s.point(ring.nvars());
        let lhs = polar(&f, &a, k)?.equation.eval(a.coords())?;
        let falling = field_int(cfg.field, &(factorial(d) / factorial(d - k)));
        if lhs == f.eval(a.coords())?.mul(&falling) {
            passed += 1;
        }
    }
    Ok(tally("Euler polar identity", cfg.field, passed, cfg.count))
}

/// `F(a + b) = sum_k D^{b^k}F(a) / k!`.
pub fn taylor_newton(cfg: &PropertyConfig) -> Result<Check> {
    let mut s = cfg.sampler(3);
    let mut passed = 0;
    for _ in 0..cfg.count {
        let ring = ambient(&mut s);
        let d = s.range(1, 5);
        let f = s.form(&ring, d);
        let a = s.point(ring.nvars());
        let b = s.point(ring.nvars());
        let sum: Vec<Scalar> = a.coords().iter().zip(b.coords()).map(|(x, y)| x.add(y)).collect();
        let mut expansion = Scalar::zero(cfg.field);
        for k in 0..=d {
            let term = polar(&f, &b, k)?.equation.eval(a.coords())?;
            let inv = field_int(cfg.field, &factorial(k)).inv().expect("k < p");
            expansion = expansion.add(&term.mul(&inv));
        }
        if f.eval(&sum)? == expansion {
            passed += 1;
        }
    }
    Ok(tally("Taylor-Newton expansion", cfg.field, passed, cfg.count))
}

/// The restriction-valuation and polar-membership routes to the contact
/// order of a line agree. Instances are built with a prescribed contact
/// `m` in `0..=d`, or with the line inside the hypersurface, as
/// `L1^m G + L2 H` where `L1` vanishes at `a` and `L2` on the whole line.
pub fn contact_routes(cfg: &PropertyConfig) -> Result<Check> {
    let mut s = cfg.sampler(4);
    let mut passed = 0;
    for _ in 0..cfg.count {
        let ring = ambient(&mut s);
        let d = s.range(1, 4);
        let a = s.point(ring.nvars());
        let b = s.point_off(&a);
        let l1 = loop {
            let l = s.form_through(&ring, &[&a]);
            if !l.eval(b.coords())?.is_zero() {
                break l;
            }
        };
        let l2 = s.form_through(&ring, &[&a, &b]);
        let target = s.range(0, d + 1);
        let (f, expected) = if target > d {
            (&l2 * &s.form(&ring, d - 1), ExtNat::Infinity)
        } else {
            let g = loop {
                let g = s.form(&ring, d - target);
                if !g.eval(a.coords())?.is_zero() {
                    break g;
                }
            };
            let h = s.form(&ring, d - 1);
            (&l1.pow(target) * &g + &l2 * &h, ExtNat::Finite(target))
        };
        if f.is_zero() {
            continue;
        }
        let report = line_multiplicity(&f, &a, &b)?;
        if report.routes_agree && report.multiplicity == expected {
            passed += 1;
        }
    }
    Ok(tally("line contact routes", cfg.field, passed, cfg.count))
}

/// `x_0^2 Hess(F) = (d-1)^2 det(bordered)` for random sparse forms of
/// degree 3 to 5 in three and four variables.
pub fn bordered_hessian_identity(cfg: &PropertyConfig) -> Result<Check> {
    let mut s = cfg.sampler(5);
    let mut passed = 0;
    for _ in 0..cfg.count {
        let ring = ambient(&mut s);
        let d = s.range(3, 5);
        let f = s.sparse_form(&ring, d, 6);
        if bordered_identity_holds(&f)? {
            passed += 1;
        }
    }
    Ok(tally("bordered Hessian identity", cfg.field, passed, cfg.count))
}

/// The bordered-Hessian identity for one form.
pub fn bordered_identity_holds(f: &Poly) -> Result<bool> {
    let d = f.homogeneous_degree()? as i64;
    let x0 = f.ring().gen(0);
    let lhs = &(&x0 * &x0) * &hessian_determinant(f)?;
    let rhs = bordered_hessian(f)?.determinant()?.scale_int((d - 1) * (d - 1));
    Ok(lhs == rhs)
}

/// A surface through `p` whose tangent plane at `p` carries a chosen
/// second fundamental form: a normal form moved by a random frame.
pub struct FramedSurface {
    pub surface: Poly,
    pub point: ProjPoint,
    /// Whether the form was chosen degenerate.
    pub parabolic: bool,
}

/// Draws a surface of degree `2..=4` with a smooth point, degenerate
/// second fundamental form when `parabolic` is set.
pub fn framed_surface(s: &mut Sampler, parabolic: bool) -> FramedSurface {
    let ring = Ring::space(s.field());
    let d = s.range(2, 4);
    let [x, y, z, w] = [0, 1, 2, 3].map(|i| ring.gen(i));
    let zero = Scalar::zero(s.field());
    let quad = if parabolic {
        let l = ring.linear_form(&[s.scalar(), s.scalar(), zero.clone(), zero.clone()]);
        l.scale(&s.scalar()) * &l
    } else {
        Poly::from_terms(
            &ring,
            [[2, 0, 0, 0], [1, 1, 0, 0], [0, 2, 0, 0]].map(|e| (e.to_vec(), s.scalar())),
        )
    };
    let tilt = ring.linear_form(&[s.scalar(), s.scalar(), s.scalar(), zero]);
    let mut normal = w.pow(d - 1) * &z + w.pow(d - 2) * &(quad + &z * &tilt);
    let xyz = Ring::new(&["x", "y", "z"], s.field()).expect("valid names");
    for j in 3..=d {
        let part = s
            .sparse_form(&xyz, j, 3)
            .compose(&ring, &[x.clone(), y.clone(), z.clone()]);
        normal = normal + w.pow(d - j) * &part.expect("same field");
    }
    let p = s.point(4);
    let forms = s.frame_at(&ring, &p);
    let surface = normal.compose(&ring, &forms).expect("same ring");
    FramedSurface {
        surface,
        point: p,
        parabolic,
    }
}

/// `Hess(F)(p) det(M)^2 = g^4 (-(d-1)^2) det(2 II)` in the normalized frame
/// `M` with normalizer `g`.
pub fn frame_factorization_holds(f: &Poly, form: &FundamentalForm) -> Result<bool> {
    let field = f.field();
    let d = f.homogeneous_degree()? as i64;
    let hess = hessian_determinant(f)?.eval(form.point.coords())?;
    let frame_det = scalar_determinant(&form.frame);
    let two = Scalar::from_i64(field, 2);
    let doubled: Vec<Vec<Scalar>> = form
        .matrix
        .iter()
        .map(|row| row.iter().map(|c| c.mul(&two)).collect())
        .collect();
    let corner = Scalar::from_i64(field, -(d - 1) * (d - 1));
    let n = form.frame.len() as u32;
    let rhs = form.normalizer.pow(n).mul(&corner).mul(&scalar_determinant(&doubled));
    Ok(hess.mul(&frame_det.mul(&frame_det)) == rhs)
}

/// The polar quadric at `p` restricted to the tangent hyperplane is twice
/// the normalizer times the second fundamental form, in frame coordinates.
pub fn polar_quadric_section_holds(f: &Poly, form: &FundamentalForm) -> Result<bool> {
    let ring = f.ring();
    let quadric = if f.homogeneous_degree()? > 2 {
        polar_kic(f, &form.point, 2)?.equation
    } else {
        f.scale_int(2)
    };
    let mut images = form.frame_images(f);
    let last = ring.nvars() - 1;
    let mut cut = ring.gens();
    cut[last] = ring.zero();
    images = images.iter().map(|p| p.compose(ring, &cut)).collect::<Result<_>>()?;
    let pulled = quadric.compose(ring, &images)?;
    let two_g = form.normalizer.mul(&Scalar::from_i64(f.field(), 2));
    let mut expected = ring.zero();
    for (i, row) in form.matrix.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            expected = expected + (&ring.gen(i + 1) * &ring.gen(j + 1)).scale(&c.mul(&two_g));
        }
    }
    Ok(pulled == expected)
}

/// Frame factorization, the vanishing equivalence between the form's
/// determinant and the Hessian, and the polar-quadric section, on framed
/// surfaces alternating between parabolic and general points.
pub fn curvature_suite(cfg: &PropertyConfig) -> Result<Report> {
    let mut s = cfg.sampler(6);
    let (mut factor_ok, mut equiv_ok, mut section_ok) = (0, 0, 0);
    for i in 0..cfg.count {
        let framed = framed_surface(&mut s, i % 2 == 1);
        let f = &framed.surface;
        let form = second_fundamental_form(f, &framed.point)?;
        if frame_factorization_holds(f, &form)? {
            factor_ok += 1;
        }
        let hess_zero = hessian_determinant(f)?.eval(framed.point.coords())?.is_zero();
        let form_zero = form.determinant().is_zero();
        if hess_zero == form_zero && (!framed.parabolic || form_zero) {
            equiv_ok += 1;
        }
        if polar_quadric_section_holds(f, &form)? {
            section_ok += 1;
        }
    }
    let mut report = Report::new();
    report.push(tally("Hessian frame factorization", cfg.field, factor_ok, cfg.count));
    report.push(tally(
        "form determinant vanishes with Hessian",
        cfg.field,
        equiv_ok,
        cfg.count,
    ));
    report.push(tally(
        "polar quadric on tangent plane",
        cfg.field,
        section_ok,
        cfg.count,
    ));
    Ok(report)
}

/// A hypersurface of degree `d` with a point of multiplicity exactly `m`:
/// `sum_j l^(d-j) G_j(l_1, ...)` for a frame at the point.
pub fn point_of_multiplicity(s: &mut Sampler, ring: &Ring, d: u32, m: u32) -> (Poly, ProjPoint) {
    let p = s.point(ring.nvars());
    let frame = s.frame_at(ring, &p);
    let (transverse, local) = frame.split_last().expect("nonempty frame");
    let names: Vec<String> = (0..local.len()).map(|i| format!("t{i}")).collect();
    let chart = Ring::new(&names, s.field()).expect("valid names");
    let f = (m..=d).fold(ring.zero(), |acc, j| {
        let part = s.form(&chart, j).compose(ring, local).expect("same field");
        acc + transverse.pow(d - j) * &part
    });
    (f, p)
}

/// At a point of multiplicity `m`, the `r`-th polar for `r < m` has
/// multiplicity `m - r` and its tangent cone is the `r`-th polar of the
/// tangent cone, in the chart at the point.
pub fn polar_tangent_cones(cfg: &PropertyConfig) -> Result<Check> {
    let mut s = cfg.sampler(9);
    let mut passed = 0;
    for _ in 0..cfg.count {
        let ring = ambient(&mut s);
        let d = s.range(2, 5);
        let m = s.range(2, d);
        let r = s.range(1, m - 1);
        let (f, a) = point_of_multiplicity(&mut s, &ring, d, m);
        let b = s.point(ring.nvars());
        let cone = tangent_cone(&f, &a)?;
        let polar_cone = tangent_cone(&polar(&f, &b, r)?.equation, &a)?;
        let expected = polar(&cone.cone, &cone.chart_coordinates(&b), r)?.equation;
        if cone.multiplicity == m && polar_cone.multiplicity == m - r && polar_cone.cone == expected {
            passed += 1;
        }
    }
    Ok(tally("tangent cones of polars", cfg.field, passed, cfg.count))
}

/// Surfaces with a known supply of rational points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListedSurface {
    /// `x^3 + y^3 + z^3 + w^3`, sampled on three of its lines.
    Fermat,
    /// `x^3 + y^3 + z^3 - 3w^3`, at `(1:1:1:1)`.
    DiagonalCubic,
    /// `xw - yz`, sampled through its parametrization.
    RuledQuadric,
}

impl ListedSurface {
    pub const ALL: [ListedSurface; 3] = [
        ListedSurface::Fermat,
        ListedSurface::DiagonalCubic,
        ListedSurface::RuledQuadric,
    ];

    pub fn equation(self, field: Field) -> Poly {
        let ring = Ring::space(field);
        let [x, y, z, w] = [0, 1, 2, 3].map(|i| ring.gen(i));
        match self {
            ListedSurface::Fermat => x.pow(3) + y.pow(3) + z.pow(3) + w.pow(3),
            ListedSurface::DiagonalCubic => x.pow(3) + y.pow(3) + z.pow(3) - w.pow(3).scale_int(3),
            ListedSurface::RuledQuadric => &x * &w - &y * &z,
        }
    }

    /// A point of the surface; for the Fermat cubic, on one of its lines.
    pub fn sample_point(self, s: &mut Sampler) -> ProjPoint {
        let field = s.field();
        loop {
            let [a, b, c] = [s.scalar(), s.scalar(), s.scalar()];
            let coords = match self {
                ListedSurface::Fermat => match s.index(3) {
                    0 => vec![a.clone(), a.neg(), b.clone(), b.neg()],
                    1 => vec![a.clone(), b.clone(), a.neg(), b.neg()],
                    _ => vec![a.clone(), b.clone(), b.neg(), a.neg()],
                },
                ListedSurface::DiagonalCubic => vec![Scalar::one(field); 4],
                ListedSurface::RuledQuadric => vec![a.mul(&a), a.mul(&b), a.mul(&c), b.mul(&c)],
            };
            if let Ok(p) = ProjPoint::new(coords) {
                return p;
            }
        }
    }
}

/// The bordered-Hessian identity, the frame factorization and the
/// vanishing equivalence on the listed surfaces, at `count` sampled points
/// spread over them.
pub fn listed_surface_suite(cfg: &PropertyConfig) -> Result<Report> {
    let mut s = cfg.sampler(7);
    let mut report = Report::new();
    for surface in ListedSurface::ALL {
        let f = surface.equation(cfg.field);
        report.push(Check::holds(
            format!("bordered Hessian identity on {surface:?} over {}", cfg.field),
            bordered_identity_holds(&f)?,
            &f,
            "x0^2 Hess = (d-1)^2 det",
        ));
    }
    let (mut factor_ok, mut equiv_ok) = (0, 0);
    for i in 0..cfg.count {
        let surface = ListedSurface::ALL[i % ListedSurface::ALL.len()];
        let f = surface.equation(cfg.field);
        let p = surface.sample_point(&mut s);
        let form = second_fundamental_form(&f, &p)?;
        if frame_factorization_holds(&f, &form)? {
            factor_ok += 1;
        }
        let hess_zero = hessian_determinant(&f)?.eval(p.coords())?.is_zero();
        if hess_zero == form.determinant().is_zero() {
            equiv_ok += 1;
        }
    }
    report.push(tally(
        "listed surfaces frame factorization",
        cfg.field,
        factor_ok,
        cfg.count,
    ));
    report.push(tally(
        "listed surfaces form determinant vanishes with Hessian",
        cfg.field,
        equiv_ok,
        cfg.count,
    ));
    Ok(report)
}

/// Flecnodal membership at sampled line points of the Fermat cubic and at
/// sampled points of the ruled quadric, and its failure at `(1:1:1:1)` on
/// the diagonal cubic.
pub fn flecnodal_suite(cfg: &PropertyConfig) -> Result<Report> {
    let mut s = cfg.sampler(8);
    let mut report = Report::new();
    for surface in [ListedSurface::Fermat, ListedSurface::RuledQuadric] {
        let f = surface.equation(cfg.field);
        let mut passed = 0;
        for _ in 0..cfg.count {
            if flecnodal_member(&f, &surface.sample_point(&mut s))? {
                passed += 1;
            }
        }
        report.push(tally(
            &format!("flecnodal on {surface:?}"),
            cfg.field,
            passed,
            cfg.count,
        ));
    }
    let diagonal = ListedSurface::DiagonalCubic;
    let member = flecnodal_member(&diagonal.equation(cfg.field), &diagonal.sample_point(&mut s))?;
    report.push(Check::holds(
        format!("not flecnodal on {diagonal:?} at (1:1:1:1) over {}", cfg.field),
        !member,
        member,
        false,
    ));
    Ok(report)
}

/// Every randomized suite.
pub fn run_all(cfg: &PropertyConfig) -> Result<Report> {
    let mut report = Report::new();
    report.push(polar_symmetry(cfg)?);
    report.push(euler_polar_identity(cfg)?);
    report.push(taylor_newton(cfg)?);
    report.push(contact_routes(cfg)?);
    report.push(polar_tangent_cones(cfg)?);
    report.push(bordered_hessian_identity(&PropertyConfig {
        count: cfg.count.min(20),
        ..*cfg
    })?);
    report.extend(curvature_suite(cfg)?);
    report.extend(listed_surface_suite(cfg)?);
    report.extend(flecnodal_suite(cfg)?);
    Ok(report)
}

//! Hessians, second fundamental forms and the classification of surface
//! points by their asymptotic directions.

use crate::error::{Error, Result};
use crate::polarity::line_multiplicity;
use crate::polyring::{ExtNat, Matrix, Poly, ProjPoint, Scalar};

/// Matrix of second partial derivatives.
pub fn hessian_matrix(f: &Poly) -> Matrix {
    let n = f.ring().nvars();
    let first = f.gradient();
    Matrix::from_fn(f.ring(), n, |i, j| first[i].partial(j))
}

/// `det(∂_i∂_j F)`.
pub fn hessian_determinant(f: &Poly) -> Result<Poly> {
    let d = f.homogeneous_degree()?;
    if d < 2 {
        return Err(Error::DegreeTooSmall {
            found: d as i64,
            min: 2,
        });
    }
    hessian_matrix(f).determinant()
}

/// Matrix bordered by the first partials with corner `d/(d-1) F`, in the
/// variables other than the first. Its determinant times `(d-1)^2` equals
/// `x_0^2 Hess(F)`.
pub fn bordered_hessian(f: &Poly) -> Result<Matrix> {
    let d = f.homogeneous_degree()?;
    if d < 2 {
        return Err(Error::DegreeTooSmall {
            found: d as i64,
            min: 2,
        });
    }
    let n = f.ring().nvars();
    let grad = f.gradient();
    let corner = f.scale_ratio(d as i64, d as i64 - 1);
    Ok(Matrix::from_fn(f.ring(), n, |i, j| match (i, j) {
        (0, 0) => corner.clone(),
        (0, j) => grad[j].clone(),
        (i, 0) => grad[i].clone(),
        (i, j) => grad[i].partial(j),
    }))
}

/// Second fundamental form at a smooth point, in a normalized frame.
///
/// The frame `M` has columns `p, w_1, …, w_{N-1}, u`: the `w` span the
/// tangent hyperplane together with `p`, and `u` is a coordinate vector
/// transverse to it. In the coordinates `y = M^{-1} x`, `F∘M / normalizer`
/// reads `y_0^{d-1} y_N + y_0^{d-2} Σ a_ij y_i y_j + …`; the form is
/// `(a_ij)` for `1 ≤ i, j ≤ N-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalForm {
    pub point: ProjPoint,
    /// Columns of the frame matrix.
    pub frame: Vec<Vec<Scalar>>,
    /// `∇F(p) · u`.
    pub normalizer: Scalar,
    pub matrix: Vec<Vec<Scalar>>,
    pub rank: usize,
}

impl FundamentalForm {
    /// Images of the ambient coordinates as linear forms in the frame
    /// coordinates.
    pub fn frame_images(&self, f: &Poly) -> Vec<Poly> {
        let ring = f.ring();
        (0..ring.nvars())
            .map(|i| {
                let row: Vec<Scalar> = self.frame.iter().map(|col| col[i].clone()).collect();
                ring.linear_form(&row)
            })
            .collect()
    }

    /// `F∘M / normalizer` in the frame coordinates.
    pub fn local_equation(&self, f: &Poly) -> Result<Poly> {
        let g = f.compose(f.ring(), &self.frame_images(f))?;
        Ok(g.scale(&self.normalizer.inv().expect("transverse direction")))
    }

    /// Ambient point of the tangent direction with frame coordinates `(0, v, 0)`.
    pub fn tangent_direction(&self, v: &[Scalar]) -> Result<ProjPoint> {
        let n = self.frame.len();
        let coords = (0..n)
            .map(|i| {
                v.iter()
                    .enumerate()
                    .fold(Scalar::zero(self.point.field()), |acc, (k, c)| {
                        acc.add(&c.mul(&self.frame[k + 1][i]))
                    })
            })
            .collect();
        ProjPoint::new(coords)
    }

    pub fn determinant(&self) -> Scalar {
        scalar_determinant(&self.matrix)
    }
}

/// Frame columns and normalizer for a smooth point `p` with gradient `g`.
fn normalized_frame(p: &ProjPoint, g: &[Scalar]) -> (Vec<Vec<Scalar>>, Scalar) {
    let field = p.field();
    let n = g.len();
    let unit = |k: usize| {
        let mut e = vec![Scalar::zero(field); n];
        e[k] = Scalar::one(field);
        e
    };
    let q = g.iter().position(|c| !c.is_zero()).expect("nonzero gradient");
    let r = (0..n)
        .find(|&j| j != q && !p.coords()[j].is_zero())
        .expect("a point on the hypersurface is not the transverse vertex");
    let mut frame = vec![p.coords().to_vec()];
    for j in (0..n).filter(|&j| j != q && j != r) {
        let mut w = unit(j);
        w[q] = g[j].div(&g[q]).expect("nonzero pivot").neg();
        frame.push(w);
    }
    frame.push(unit(q));
    (frame, g[q].clone())
}

fn gradient_at(f: &Poly, p: &ProjPoint) -> Result<Vec<Scalar>> {
    p.check_in(f.ring())?;
    if !f.eval(p.coords())?.is_zero() {
        return Err(Error::NotOnHypersurface);
    }
    let g = f
        .gradient()
        .iter()
        .map(|d| d.eval(p.coords()))
        .collect::<Result<Vec<_>>>()?;
    if g.iter().all(Scalar::is_zero) {
        return Err(Error::SingularPoint);
    }
    Ok(g)
}

/// Second fundamental form of the hypersurface `F = 0` at a smooth point.
pub fn second_fundamental_form(f: &Poly, p: &ProjPoint) -> Result<FundamentalForm> {
    let d = f.homogeneous_degree()?;
    if d < 2 {
        return Err(Error::DegreeTooSmall {
            found: d as i64,
            min: 2,
        });
    }
    let g = gradient_at(f, p)?;
    let (frame, normalizer) = normalized_frame(p, &g);
    let mut form = FundamentalForm {
        point: p.clone(),
        frame,
        normalizer,
        matrix: Vec::new(),
        rank: 0,
    };
    let local = form.local_equation(f)?;
    let n = f.ring().nvars();
    let field = f.field();
    let half = Scalar::one(field)
        .div(&Scalar::from_i64(field, 2))
        .expect("odd characteristic");
    let size = n - 2;
    let mut matrix = vec![vec![Scalar::zero(field); size]; size];
    for i in 0..size {
        for j in i..size {
            let mut e = vec![0u32; n];
            e[0] = d - 2;
            e[i + 1] += 1;
            e[j + 1] += 1;
            let c = local.coefficient(&e);
            let entry = if i == j { c } else { c.mul(&half) };
            matrix[i][j] = entry.clone();
            matrix[j][i] = entry;
        }
    }
    form.rank = scalar_rank(&matrix);
    form.matrix = matrix;
    Ok(form)
}

/// Rank of a scalar matrix by Gaussian elimination.
pub fn scalar_rank(m: &[Vec<Scalar>]) -> usize {
    let mut rows: Vec<Vec<Scalar>> = m.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for i in rank + 1..rows.len() {
            let factor = rows[i][col].mul(&inv);
            if factor.is_zero() {
                continue;
            }
            let (top, rest) = rows.split_at_mut(i);
            for (v, p) in rest[0][col..].iter_mut().zip(&top[rank][col..]) {
                *v = v.sub(&factor.mul(p));
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a scalar matrix by Gaussian elimination.
pub fn scalar_determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let Some(field) = m.first().and_then(|r| r.first()).map(Scalar::field) else {
        return Scalar::one(crate::polyring::Field::Rational);
    };
    let mut rows = m.to_vec();
    let mut det = Scalar::one(field);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !rows[i][col].is_zero()) else {
            return Scalar::zero(field);
        };
        if pivot != col {
            rows.swap(col, pivot);
            det = det.neg();
        }
        det = det.mul(&rows[col][col]);
        let inv = rows[col][col].inv().expect("nonzero pivot");
        for i in col + 1..n {
            let factor = rows[i][col].mul(&inv);
            let (top, rest) = rows.split_at_mut(i);
            for (v, p) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *v = v.sub(&factor.mul(p));
            }
        }
    }
    det
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    NonParabolic,
    ParabolicRank1,
    PlanarIIZero,
}

/// A rational asymptotic direction and its verified contact order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticDirection {
    pub point: ProjPoint,
    pub contact: ExtNat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePointClass {
    pub kind: PointKind,
    pub form: FundamentalForm,
    /// `(2b)^2 - 4ac` for the binary quadratic `a s^2 + 2b st + c t^2`.
    pub discriminant: Scalar,
    /// Empty when the roots are irrational or the form vanishes.
    pub directions: Vec<AsymptoticDirection>,
}

/// Classify a smooth point of a surface in projective 3-space.
pub fn classify_surface_point(f: &Poly, p: &ProjPoint) -> Result<SurfacePointClass> {
    if f.ring().nvars() != 4 {
        return Err(Error::VariableCount {
            expected: 4,
            found: f.ring().nvars(),
        });
    }
    let form = second_fundamental_form(f, p)?;
    let field = f.field();
    let (a, b, c) = (&form.matrix[0][0], &form.matrix[0][1], &form.matrix[1][1]);
    let four = Scalar::from_i64(field, 4);
    let discriminant = four.mul(&b.mul(b).sub(&a.mul(c)));
    let kind = match form.rank {
        2 => PointKind::NonParabolic,
        1 => PointKind::ParabolicRank1,
        _ => PointKind::PlanarIIZero,
    };
    let mut roots: Vec<[Scalar; 2]> = Vec::new();
    if kind != PointKind::PlanarIIZero {
        if let Some(sq) = b.mul(b).sub(&a.mul(c)).sqrt() {
            if !a.is_zero() {
                // a s^2 + 2b st + c t^2 = 0 at s/t = (-b ± sq)/a
                roots.push([b.neg().add(&sq), a.clone()]);
                if !sq.is_zero() {
                    roots.push([b.neg().sub(&sq), a.clone()]);
                }
            } else {
                // t (2b s + c t) = 0
                roots.push([Scalar::one(field), Scalar::zero(field)]);
                if !b.is_zero() {
                    roots.push([c.clone(), b.mul(&Scalar::from_i64(field, 2)).neg()]);
                }
            }
        }
    }
    let directions = roots
        .iter()
        .map(|v| {
            let point = form.tangent_direction(v)?;
            let contact = line_multiplicity(f, p, &point)?.multiplicity;
            Ok(AsymptoticDirection { point, contact })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SurfacePointClass {
        kind,
        form,
        discriminant,
        directions,
    })
}

//! Flecnodal covariants of a surface and the maximal contact order of a
//! line with the surface at a point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::curvature::{hessian_matrix, second_fundamental_form};
use crate::error::{Error, Result};
use crate::polarity::line_multiplicity;
use crate::polyring::{resultant_with_degrees, ExtNat, Poly, ProjPoint, Ring, Scalar};

/// The two covariants and their printed combination `Θ - 4Φ·Hess(F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovariantPair {
    pub theta: Poly,
    pub phi: Poly,
    pub combination: Poly,
    pub theta_degree: Option<u32>,
    pub phi_degree: Option<u32>,
    /// Degree of `Φ·Hess(F)`; differs from `theta_degree` for `n ≥ 3`.
    pub product_degree: Option<u32>,
    pub combination_homogeneous: bool,
}

fn require_surface(f: &Poly) -> Result<u32> {
    if f.ring().nvars() != 4 {
        return Err(Error::VariableCount {
            expected: 4,
            found: f.ring().nvars(),
        });
    }
    let n = f.homogeneous_degree()?;
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            found: n as i64,
            min: 2,
        });
    }
    Ok(n)
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// `Θ = Σ |H|_{ij} ∂_iF ∂_jF` and
/// `Φ = -Σ_{ij} Σ_{i1<i2, j1<j2} |H|_{ij} |H|_{i1i2,j1j2} ∂_{i1i2}F ∂_{j1j2}F`,
/// where `|H|_{ij}` is the signed 3×3 cofactor and `|H|_{i1i2,j1j2}` is
/// `(-1)^{i1+i2+j1+j2}` times the 2×2 minor on rows `i1, i2` and columns
/// `j1, j2`.
pub fn salmon_covariants(f: &Poly) -> Result<CovariantPair> {
    require_surface(f)?;
    let ring = f.ring();
    let h = hessian_matrix(f);
    let grad = f.gradient();
    let cof: Vec<Vec<Poly>> = (0..4)
        .map(|i| (0..4).map(|j| h.cofactor(i, j)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let mut theta = ring.zero();
    for i in 0..4 {
        for j in 0..4 {
            theta = theta + &cof[i][j] * &grad[i] * &grad[j];
        }
    }

    let mut inner = ring.zero();
    for &(i1, i2) in &PAIRS {
        for &(j1, j2) in &PAIRS {
            let minor = h.get(i1, j1) * h.get(i2, j2) - h.get(i1, j2) * h.get(i2, j1);
            let signed = if (i1 + i2 + j1 + j2) % 2 == 0 { minor } else { -minor };
            inner = inner + signed * h.get(i1, i2) * h.get(j1, j2);
        }
    }
    let cof_sum = cof.iter().flatten().fold(ring.zero(), |acc, c| acc + c);
    let phi = -(cof_sum * inner);

    let hess = h.determinant()?;
    let product = &phi * &hess;
    let combination = &theta - product.scale_int(4);
    Ok(CovariantPair {
        theta_degree: theta.degree().ok(),
        phi_degree: phi.degree().ok(),
        product_degree: product.degree().ok(),
        combination_homogeneous: combination.is_homogeneous(),
        theta,
        phi,
        combination,
    })
}

/// Highest contact order of a line through a smooth surface point.
///
/// Contact two never occurs at a smooth point over an algebraically closed
/// field: some tangent direction always has contact at least three.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContactOrder {
    Three,
    AtLeastFour,
    /// A line through the point lies on the surface.
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactCertificate {
    pub order: ContactOrder,
    /// Quadratic part of the restriction to tangent lines, in `(s, t)`.
    pub second: Poly,
    /// Cubic part of the restriction to tangent lines, in `(s, t)`.
    pub third: Poly,
    /// `Res(second, third)` when both are nonzero.
    pub resultant: Option<Scalar>,
    /// Direction of a line lying on the surface, when one was found.
    pub line_direction: Option<ProjPoint>,
}

/// Rational roots `(s:t)` of a binary form, including `t = 0`.
fn binary_rational_roots(form: &Poly) -> Vec<[Scalar; 2]> {
    let field = form.field();
    let deg = form.homogeneous_degree().unwrap_or(0) as usize;
    let mut roots = Vec::new();
    let coeffs: Vec<Scalar> = (0..=deg)
        .map(|k| form.coefficient(&[k as u32, (deg - k) as u32]))
        .collect();
    if coeffs[deg].is_zero() {
        roots.push([Scalar::one(field), Scalar::zero(field)]);
    }
    let rational: Option<Vec<BigRational>> = coeffs.iter().map(|c| c.as_rational().cloned()).collect();
    if let Some(rational) = rational {
        for r in rational_roots(&rational) {
            roots.push([Scalar::Rational(r), Scalar::one(field)]);
        }
    }
    roots
}

/// Largest absolute coefficient for which divisors are enumerated.
const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_SEARCH_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Distinct rational roots of `Σ c_k s^k` by the rational root theorem.
/// Coefficients too large to factor yield only the root `0`, if present.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.len() <= 1 {
        return roots;
    }
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(BigRational::zero());
        ints.drain(..shift);
    }
    if ints.len() <= 1 {
        return roots;
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    let eval = |r: &BigRational| {
        ints.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * r + BigRational::from_integer(c.clone())
        })
    };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let r = BigRational::new(p * sign, q.clone());
                if !roots.contains(&r) && eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

/// Maximal contact order of a line with the surface at the smooth point `q`.
pub fn max_contact_order(f: &Poly, q: &ProjPoint) -> Result<ContactCertificate> {
    require_surface(f)?;
    let form = second_fundamental_form(f, q)?;
    let field = f.field();
    let ring = Ring::new(&["s", "t", "T"], field)?;
    let (s, t, big_t) = (ring.gen(0), ring.gen(1), ring.gen(2));
    let images: Vec<Poly> = (0..4)
        .map(|i| {
            ring.constant(q.coords()[i].clone()) + &big_t * (s.scale(&form.frame[1][i]) + t.scale(&form.frame[2][i]))
        })
        .collect();
    let restricted = f.compose(&ring, &images)?.coefficients_in(2);
    let binary = Ring::new(&["s", "t"], field)?;
    let part = |k: usize| -> Result<Poly> {
        match restricted.get(k) {
            Some(p) => {
                let dropped: Vec<Poly> = vec![binary.gen(0), binary.gen(1), binary.zero()];
                p.compose(&binary, &dropped)
            }
            None => Ok(binary.zero()),
        }
    };
    let second = part(2)?;
    let third = part(3)?;

    let direction = |root: &[Scalar; 2]| form.tangent_direction(root);
    let find_line = |candidates: Vec<[Scalar; 2]>| -> Result<Option<ProjPoint>> {
        for root in candidates {
            let b = direction(&root)?;
            if line_multiplicity(f, q, &b)?.multiplicity == ExtNat::Infinity {
                return Ok(Some(b));
            }
        }
        Ok(None)
    };

    let mut resultant = None;
    let (mut order, candidates) = if !second.is_zero() {
        if third.is_zero() {
            (ContactOrder::AtLeastFour, binary_rational_roots(&second))
        } else {
            let chart = Ring::new(&["s"], field)?;
            let dehom = |p: &Poly| p.compose(&chart, &[chart.gen(0), chart.one()]);
            let res = resultant_with_degrees(&dehom(&second)?, &dehom(&third)?, 0, 2, 3)?;
            let value = res.constant_value().expect("constant resultant");
            let zero = value.is_zero();
            resultant = Some(value);
            if zero {
                let shared = binary_rational_roots(&second)
                    .into_iter()
                    .filter(|r| third.eval(r).map(|v| v.is_zero()).unwrap_or(false))
                    .collect();
                (ContactOrder::AtLeastFour, shared)
            } else {
                (ContactOrder::Three, Vec::new())
            }
        }
    } else if third.is_zero() {
        // Every tangent line has contact at least four; try the coordinate directions.
        let one = Scalar::one(field);
        let zero = Scalar::zero(field);
        (
            ContactOrder::AtLeastFour,
            vec![[one.clone(), zero.clone()], [zero, one]],
        )
    } else {
        (ContactOrder::AtLeastFour, binary_rational_roots(&third))
    };
    let line_direction = if order == ContactOrder::AtLeastFour {
        find_line(candidates)?
    } else {
        None
    };
    if line_direction.is_some() {
        order = ContactOrder::Infinity;
    }
    Ok(ContactCertificate {
        order,
        second,
        third,
        resultant,
        line_direction,
    })
}

/// Whether some line meets the surface at `q` with multiplicity at least four.
pub fn flecnodal_member(f: &Poly, q: &ProjPoint) -> Result<bool> {
    Ok(matches!(
        max_contact_order(f, q)?.order,
        ContactOrder::AtLeastFour | ContactOrder::Infinity
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, Field};

    fn p(s: &str) -> Poly {
        parse_poly(s, &Ring::space(Field::Rational)).unwrap()
    }

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(Field::Rational, c).unwrap()
    }

    #[test]
    fn fermat_theta() {
        let f = p("x^3+y^3+z^3+w^3");
        let pair = salmon_covariants(&f).unwrap();
        assert_eq!(pair.theta, p("1944*x*y*z*w") * &f);
        assert_eq!(pair.theta_degree, Some(7));
        // every 2x2 minor term meets an off-diagonal zero of the diagonal Hessian
        assert!(pair.phi.is_zero());
        assert!(pair.theta.div_exact(&f).is_ok());
    }

    #[test]
    fn degree_report_of_general_cubic() {
        let pair = salmon_covariants(&p("x^3+y^3+z^3+w^3+x*y*z+2*y*z*w")).unwrap();
        assert_eq!(pair.theta_degree, Some(7));
        assert_eq!(pair.phi_degree, Some(7));
        assert_eq!(pair.product_degree, Some(11));
        assert!(!pair.combination_homogeneous);
    }

    #[test]
    fn quadric_covariants() {
        let pair = salmon_covariants(&p("x*w - y*z + x^2")).unwrap();
        assert_eq!(pair.theta_degree, Some(2));
        assert!(pair.phi.is_constant());
    }

    #[test]
    fn contact_orders() {
        let fermat = p("x^3+y^3+z^3+w^3");
        let c = max_contact_order(&fermat, &pt(&[1, -1, 1, -1])).unwrap();
        assert_eq!(c.order, ContactOrder::Infinity);

        let diag = p("x^3+y^3+z^3-3*w^3");
        let c = max_contact_order(&diag, &pt(&[1, 1, 1, 1])).unwrap();
        assert_eq!(c.order, ContactOrder::Three);
        assert!(!c.resultant.unwrap().is_zero());
        assert!(!flecnodal_member(&diag, &pt(&[1, 1, 1, 1])).unwrap());

        let quadric = p("x*w - y*z");
        let c = max_contact_order(&quadric, &pt(&[2, 3, 4, 6])).unwrap();
        assert_eq!(c.order, ContactOrder::Infinity);
    }

    #[test]
    fn rational_root_search() {
        let c = |v: &[i64]| {
            v.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect::<Vec<_>>()
        };
        // (2s - 1)(s + 3) s = 2s^3 + 5s^2 - 3s
        let mut roots = rational_roots(&c(&[0, -3, 5, 2]));
        roots.sort();
        assert_eq!(
            roots,
            vec![
                BigRational::from_integer((-3).into()),
                BigRational::zero(),
                BigRational::new(1.into(), 2.into())
            ]
        );
        assert!(rational_roots(&c(&[1, 0, 1])).is_empty());
    }
}

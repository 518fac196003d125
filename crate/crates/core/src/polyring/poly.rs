//! Sparse multivariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Exponent vector, ordered by graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Natural number or infinity; the valuation of zero is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u32),
    Infinity,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }
}

impl Add for ExtNat {
    type Output = ExtNat;
    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a + b),
            _ => ExtNat::Infinity,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinity => write!(f, "infinity"),
        }
    }
}

/// Variable names plus coefficient field.
#[derive(Clone, Debug)]
pub struct Ring {
    vars: Arc<[String]>,
    field: Field,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
    }
}

impl Eq for Ring {}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], field: Field) -> Result<Ring> {
        let names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidVariables(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidVariables(format!("`{name}` repeated")));
            }
        }
        Ok(Ring {
            vars: names.into(),
            field,
        })
    }

    /// Homogeneous coordinates `x, y, z, w` of projective 3-space.
    pub fn space(field: Field) -> Ring {
        Ring::new(&["x", "y", "z", "w"], field).expect("valid names")
    }

    /// Homogeneous coordinates `x, y, z` of the projective plane.
    pub fn plane(field: Field) -> Ring {
        Ring::new(&["x", "y", "z"], field).expect("valid names")
    }

    /// The ring with no variables: plain numbers of the field.
    pub fn numbers(field: Field) -> Ring {
        Ring::new::<&str>(&[], field).expect("no names to validate")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn with_field(&self, field: Field) -> Ring {
        Ring {
            vars: self.vars.clone(),
            field,
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Poly {
        Poly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        Poly::monomial(self, Monomial::one(self.nvars()), c)
    }

    pub fn one(&self) -> Poly {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> Poly {
        self.constant(Scalar::from_i64(self.field, v))
    }

    pub fn bigint(&self, v: &BigInt) -> Poly {
        self.constant(Scalar::from_bigint(self.field, v))
    }

    pub fn rational(&self, v: &BigRational) -> Result<Poly> {
        Ok(self.constant(Scalar::from_rational(self.field, v)?))
    }

    pub fn scalar(&self, v: i64) -> Scalar {
        Scalar::from_i64(self.field, v)
    }

    /// The `i`-th variable as a polynomial.
    pub fn gen(&self, i: usize) -> Poly {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        Poly::monomial(self, Monomial(e), Scalar::one(self.field))
    }

    pub fn gens(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.gen(i)).collect()
    }

    pub fn var(&self, name: &str) -> Result<Poly> {
        self.index_of(name)
            .map(|i| self.gen(i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear_form(&self, coeffs: &[Scalar]) -> Poly {
        let mut p = self.zero();
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; self.nvars()];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    pub fn sum<I: IntoIterator<Item = Poly>>(&self, items: I) -> Poly {
        items.into_iter().fold(self.zero(), |acc, p| acc + p)
    }
}

/// Binary ring operations addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Pow,
    Scale,
}

/// Right-hand operand of [`Poly::combine`].
#[derive(Clone, Debug)]
pub enum Operand {
    Poly(Poly),
    Exponent(i64),
    Scalar(Scalar),
}

/// A polynomial; the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn monomial(ring: &Ring, mono: Monomial, coeff: Scalar) -> Poly {
        let mut p = ring.zero();
        p.add_term(mono, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Scalar)>>(ring: &Ring, terms: I) -> Poly {
        let mut p = ring.zero();
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars(), "exponent length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                let s = c.add(&coeff);
                if s.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading (grevlex-largest) monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field()))
    }

    /// Total degree; an error on the zero polynomial.
    pub fn degree(&self) -> Result<u32> {
        self.terms.keys().map(Monomial::degree).max().ok_or(Error::ZeroDegree)
    }

    /// Vacuously true for zero.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        self.degree()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(|| Scalar::zero(self.field())),
        )
    }

    /// Integer value of a constant rational polynomial.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.constant_value()?.to_bigint()
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other)?;
        let mut out = self.ring.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    fn same_ring(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn neg_ref(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Poly {
        self.scale(&Scalar::from_i64(self.field(), k))
    }

    /// Multiply by the rational `num/den`.
    pub fn scale_ratio(&self, num: i64, den: i64) -> Poly {
        let r = BigRational::new(num.into(), den.into());
        let c = Scalar::from_rational(self.field(), &r).expect("denominator invertible");
        self.scale(&c)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Named ring operation with error reporting instead of panics.
    pub fn combine(&self, op: RingOp, rhs: &Operand) -> Result<Poly> {
        match (op, rhs) {
            (RingOp::Add, Operand::Poly(p)) => self.checked_add(p),
            (RingOp::Sub, Operand::Poly(p)) => self.checked_sub(p),
            (RingOp::Mul, Operand::Poly(p)) => self.checked_mul(p),
            (RingOp::Pow, Operand::Exponent(e)) => {
                let e = u32::try_from(*e).map_err(|_| Error::NegativeExponent(*e))?;
                Ok(self.pow(e))
            }
            (RingOp::Scale, Operand::Scalar(c)) => {
                if c.field() != self.field() {
                    return Err(Error::RingMismatch);
                }
                Ok(self.scale(c))
            }
            (RingOp::Add, _) => Err(Error::OperandKind("add")),
            (RingOp::Sub, _) => Err(Error::OperandKind("sub")),
            (RingOp::Mul, _) => Err(Error::OperandKind("mul")),
            (RingOp::Pow, _) => Err(Error::OperandKind("pow")),
            (RingOp::Scale, _) => Err(Error::OperandKind("scale")),
        }
    }

    /// Formal partial derivative in the `i`-th variable.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c.mul(&Scalar::from_i64(self.field(), e as i64)));
        }
        out
    }

    pub fn partial_named(&self, name: &str) -> Result<Poly> {
        let i = self
            .ring
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.partial(i))
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.ring.nvars()).map(|i| self.partial(i)).collect()
    }

    /// Replace the `i`-th variable by `images[i]`, all in `target`.
    pub fn compose(&self, target: &Ring, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::VariableCount {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        if images.iter().any(|p| p.ring != *target) || target.field != self.field() {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = out + term;
        }
        Ok(out)
    }

    /// Substitute by variable name; every variable of the ring must be assigned.
    pub fn substitute(&self, target: &Ring, assignment: &BTreeMap<String, Poly>) -> Result<Poly> {
        let images = self
            .ring
            .vars()
            .iter()
            .map(|v| assignment.get(v).cloned().ok_or_else(|| Error::Unassigned(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        self.compose(target, &images)
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::PointDimension {
                expected: self.ring.nvars(),
                found: point.len(),
            });
        }
        if point.iter().any(|s| s.field() != self.field()) {
            return Err(Error::RingMismatch);
        }
        let mut acc = Scalar::zero(self.field());
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&x.pow(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Coefficients `c_k` with `self = Σ c_k x_i^k`; each `c_k` is free of `x_i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let top = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![self.ring.zero(); top + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let k = std::mem::take(&mut exps[i]) as usize;
            out[k].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Least exponent of `x_i` over all terms.
    pub fn valuation_in(&self, i: usize) -> ExtNat {
        self.terms
            .keys()
            .map(|m| m.0[i])
            .min()
            .map_or(ExtNat::Infinity, ExtNat::Finite)
    }

    /// Least total degree over all terms.
    pub fn order(&self) -> ExtNat {
        self.terms
            .keys()
            .map(Monomial::degree)
            .min()
            .map_or(ExtNat::Infinity, ExtNat::Finite)
    }

    /// Sum of the terms of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`; fails when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.same_ring(divisor)?;
        let (lead_m, lead_c) = divisor.terms.iter().next_back().ok_or(Error::InexactDivision)?;
        let lead_inv = lead_c.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            if !lead_m.divides(m) {
                return Err(Error::InexactDivision);
            }
            let qm = lead_m.quotient_of(m);
            let qc = c.mul(&lead_inv);
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), dc.mul(&qc).neg());
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Re-express the coefficients in another field.
    pub fn to_field(&self, field: Field) -> Result<Poly> {
        let ring = self.ring.with_field(field);
        let mut out = ring.zero();
        for (m, c) in &self.terms {
            let v = match c {
                Scalar::Rational(r) => Scalar::from_rational(field, r)?,
                Scalar::Modular { .. } if c.field() == field => c.clone(),
                Scalar::Modular { .. } => return Err(Error::RingMismatch),
            };
            out.add_term(m.clone(), v);
        }
        Ok(out)
    }

    /// Rename into another ring with the same number of variables.
    pub fn relabel(&self, target: &Ring) -> Result<Poly> {
        if target.nvars() != self.ring.nvars() || target.field != self.field() {
            return Err(Error::RingMismatch);
        }
        Ok(Poly {
            ring: target.clone(),
            terms: self.terms.clone(),
        })
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials from the same ring")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
        impl $trait<i64> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: i64) -> Poly {
                self.$method(&self.ring.int(rhs))
            }
        }
        impl $trait<i64> for Poly {
            type Output = Poly;
            fn $method(self, rhs: i64) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Ring {
        Ring::space(Field::Rational)
    }

    #[test]
    fn grevlex_order() {
        let xy = Monomial::new(vec![1, 1, 0, 0]);
        let z2 = Monomial::new(vec![0, 0, 2, 0]);
        let xw = Monomial::new(vec![1, 0, 0, 1]);
        let x = Monomial::new(vec![1, 0, 0, 0]);
        assert!(xy > z2);
        assert!(z2 > xw);
        assert!(xw > x);
    }

    #[test]
    fn difference_of_squares() {
        let r = q();
        let (x, y) = (r.gen(0), r.gen(1));
        let lhs = (&x + &y) * (&x - &y);
        assert_eq!(lhs, &x * &x - &y * &y);
        assert_eq!((&x + &y).pow(2), &x * &x + (&x * &y).scale_int(2) + &y * &y);
        assert!((x.pow(3) - x.pow(3)).is_zero());
    }

    #[test]
    fn combine_errors() {
        let r = q();
        let other = Ring::plane(Field::Rational);
        let x = r.gen(0);
        assert_eq!(
            x.combine(RingOp::Add, &Operand::Poly(other.gen(0))),
            Err(Error::RingMismatch)
        );
        assert_eq!(
            x.combine(RingOp::Pow, &Operand::Exponent(-1)),
            Err(Error::NegativeExponent(-1))
        );
        assert_eq!(x.combine(RingOp::Pow, &Operand::Exponent(3)).unwrap(), x.pow(3));
    }

    #[test]
    fn exact_division() {
        let r = q();
        let (x, y, z) = (r.gen(0), r.gen(1), r.gen(2));
        let a = &x * &x + &y * &z - 3;
        let b = &x - &y.scale_int(2) + &z;
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert_eq!((&a * &b + 1).div_exact(&b), Err(Error::InexactDivision));
    }

    #[test]
    fn zero_polynomial_flags() {
        let z = q().zero();
        assert!(z.is_zero() && z.is_homogeneous());
        assert_eq!(z.degree(), Err(Error::ZeroDegree));
        assert_eq!(z.order(), ExtNat::Infinity);
    }

    #[test]
    fn valuation_is_additive() {
        let r = Ring::new(&["T"], Field::Rational).unwrap();
        let t = r.gen(0);
        let f = t.pow(3) + t.pow(4).scale_int(2);
        let g = t.pow(2) - t.pow(5);
        assert_eq!(f.valuation_in(0), ExtNat::Finite(3));
        assert_eq!((&f * &g).valuation_in(0), ExtNat::Finite(5));
        assert_eq!((&f * &r.zero()).valuation_in(0), ExtNat::Infinity);
    }
}

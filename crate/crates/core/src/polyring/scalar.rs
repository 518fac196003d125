//! Coefficient fields: exact rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Smallest modulus accepted for prime-field mode.
pub const MIN_MODULUS: u64 = 1 << 20;

/// Coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Prime field `F_p`; `p` must be a prime in `(2^20, 2^63)`.
    pub fn prime(p: u64) -> Result<Field> {
        if p <= MIN_MODULUS || p >= 1 << 63 || !is_prime_u64(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn is_rational(self) -> bool {
        matches!(self, Field::Rational)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u64, modulus: u64 },
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, v: i64) -> Scalar {
        Scalar::from_bigint(field, &BigInt::from(v))
    }

    pub fn from_bigint(field: Field, v: &BigInt) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => Scalar::Modular {
                residue: reduce_bigint(v, p),
                modulus: p,
            },
        }
    }

    /// Image of a rational number; fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(field: Field, v: &BigRational) -> Result<Scalar> {
        match field {
            Field::Rational => Ok(Scalar::Rational(v.clone())),
            Field::Prime(p) => {
                let den = reduce_bigint(v.denom(), p);
                if den == 0 {
                    return Err(Error::NonInvertible(v.to_string()));
                }
                let num = reduce_bigint(v.numer(), p);
                Ok(Scalar::Modular {
                    residue: mulmod(num, powmod(den, p - 2, p), p),
                    modulus: p,
                })
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    /// Integer value of a rational scalar with denominator 1.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// True for rationals below zero; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            m => m.clone(),
        }
    }

    fn modulus_of(&self, other: &Scalar) -> Option<u64> {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => None,
            (Scalar::Modular { modulus: p, .. }, Scalar::Modular { modulus: q, .. }) if p == q => Some(*p),
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match self.modulus_of(other) {
            None => Scalar::Rational(self.rat() + other.rat()),
            Some(p) => {
                let s = self.res() + other.res();
                Scalar::Modular {
                    residue: if s >= p { s - p } else { s },
                    modulus: p,
                }
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match self.modulus_of(other) {
            None => Scalar::Rational(self.rat() * other.rat()),
            Some(p) => Scalar::Modular {
                residue: mulmod(self.res(), other.res(), p),
                modulus: p,
            },
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: powmod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(num_traits::pow(r.clone(), exp as usize)),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: powmod(*residue, exp as u64, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// A square root in the same field, if one exists.
    ///
    /// Over the rationals this is an exact perfect-square test on numerator
    /// and denominator; over `F_p` it is Euler's criterion plus Tonelli-Shanks.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_negative() {
                    return None;
                }
                let n = r.numer().sqrt();
                let d = r.denom().sqrt();
                (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Scalar::Rational(BigRational::new(n, d)))
            }
            Scalar::Modular { residue, modulus } => tonelli_shanks(*residue, *modulus).map(|residue| Scalar::Modular {
                residue,
                modulus: *modulus,
            }),
        }
    }

    fn rat(&self) -> &BigRational {
        match self {
            Scalar::Rational(r) => r,
            Scalar::Modular { .. } => unreachable!(),
        }
    }

    fn res(&self) -> u64 {
        match self {
            Scalar::Modular { residue, .. } => *residue,
            Scalar::Rational(_) => unreachable!(),
        }
    }
}

fn tonelli_shanks(n: u64, p: u64) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(n);
    }
    if powmod(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(n, q, p);
    let mut r = powmod(n, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulmod(t2, t2, p);
            i += 1;
        }
        let b = powmod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

/// Factorial as a big integer.
pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 2_147_483_647;

    #[test]
    fn prime_field_rejects_small_or_composite() {
        assert!(Field::prime(101).is_err());
        assert!(Field::prime(1_000_003).is_err());
        assert!(Field::prime(2_147_483_649).is_err());
        assert_eq!(Field::prime(P).unwrap(), Field::Prime(P));
    }

    #[test]
    fn modular_inverse_and_fraction() {
        let f = Field::prime(P).unwrap();
        let half = Scalar::from_rational(f, &BigRational::new(1.into(), 2.into())).unwrap();
        assert!(half.mul(&Scalar::from_i64(f, 2)).is_one());
        assert!(Scalar::from_i64(f, -1).add(&Scalar::one(f)).is_zero());
    }

    #[test]
    fn square_roots() {
        let q = Scalar::Rational(BigRational::new(9.into(), 4.into()));
        assert_eq!(q.sqrt().unwrap().to_string(), "3/2");
        assert!(Scalar::from_i64(Field::Rational, 2).sqrt().is_none());
        let f = Field::prime(P).unwrap();
        for v in [4i64, 17, 123_456] {
            let s = Scalar::from_i64(f, v);
            if let Some(r) = s.sqrt() {
                assert_eq!(r.mul(&r), s);
            }
        }
        let nine = Scalar::from_i64(f, 9);
        let r = nine.sqrt().unwrap();
        assert_eq!(r.mul(&r), nine);
    }
}

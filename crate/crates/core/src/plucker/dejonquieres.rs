use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Divisors of degree `degree` with `multiplicities[s]` points of
/// multiplicity `s`, in a linear series on a smooth curve of genus `genus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeJonquieresProblem {
    degree: u32,
    genus: u32,
    multiplicities: BTreeMap<u32, u32>,
}

impl DeJonquieresProblem {
    /// The count of simple points is filled in when `multiplicities` has no
    /// entry for `1`; otherwise all points must add up to `degree`.
    pub fn new(degree: u32, genus: u32, multiplicities: BTreeMap<u32, u32>) -> Result<Self> {
        if multiplicities.contains_key(&0) {
            return Err(Error::Inconsistent("multiplicity 0 is not allowed".into()));
        }
        let mut multiplicities = multiplicities;
        let heavy: u64 = multiplicities
            .iter()
            .filter(|(s, _)| **s > 1)
            .map(|(s, c)| u64::from(*s) * u64::from(*c))
            .sum();
        match multiplicities.get(&1) {
            Some(&simple) if heavy + u64::from(simple) != u64::from(degree) => {
                return Err(Error::Inconsistent(format!(
                    "points add up to {} instead of {degree}",
                    heavy + u64::from(simple)
                )));
            }
            Some(_) => {}
            None => {
                let simple = u64::from(degree)
                    .checked_sub(heavy)
                    .ok_or_else(|| Error::Inconsistent(format!("multiple points exceed degree {degree}")))?;
                multiplicities.insert(1, simple as u32);
            }
        }
        multiplicities.retain(|_, c| *c > 0);
        Ok(DeJonquieresProblem {
            degree,
            genus,
            multiplicities,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    /// Dimension of the series: `sum (s - 1) m_s`.
    pub fn dimension(&self) -> u32 {
        self.multiplicities.iter().map(|(s, c)| (s - 1) * c).sum()
    }

    /// Exponent of the second factor; negative for series of large genus.
    pub fn free_exponent(&self) -> i64 {
        i64::from(self.degree) - i64::from(self.dimension()) - i64::from(self.genus)
    }
}

/// `e (e-1) ... (e-k+1) / k!` for any integer `e`.
fn binomial(e: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(e - i64::from(j));
        den *= BigInt::from(j + 1);
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "binomial coefficients are integers");
    q
}

/// Coefficient of `prod t_s^{mu_s}` in `(1 + sum w_s t_s)^e`.
fn power_coefficient(e: i64, weights: &[BigInt], mu: &[u32]) -> BigInt {
    let total: u32 = mu.iter().sum();
    // C(e, |mu|) times the multinomial |mu|! / prod mu_s!.
    let mut coef = binomial(e, total);
    let mut rest = total;
    for (w, &k) in weights.iter().zip(mu) {
        coef *= binomial(i64::from(rest), k) * w.pow(k);
        rest -= k;
    }
    coef
}

/// Virtual number of divisors in the series with the prescribed points: the
/// coefficient of `prod t_s^{m_s}` in
/// `(1 + sum s^2 t_s)^g (1 + sum s t_s)^{m - i - g}`.
pub fn dejonquieres_count(problem: &DeJonquieresProblem) -> BigInt {
    let (sizes, target): (Vec<u32>, Vec<u32>) = problem.multiplicities.iter().map(|(s, c)| (*s, *c)).unzip();
    let squares: Vec<BigInt> = sizes.iter().map(|&s| BigInt::from(s).pow(2)).collect();
    let plain: Vec<BigInt> = sizes.iter().map(|&s| BigInt::from(s)).collect();
    let genus = i64::from(problem.genus);
    let free = problem.free_exponent();

    let mut total = BigInt::zero();
    let mut split = vec![0u32; target.len()];
    loop {
        let rest: Vec<u32> = target.iter().zip(&split).map(|(t, s)| t - s).collect();
        total += power_coefficient(genus, &squares, &split) * power_coefficient(free, &plain, &rest);
        // Advance `split` through the box `0..=target` like an odometer.
        let Some(pos) = split.iter().zip(&target).position(|(s, t)| s < t) else {
            break;
        };
        split[pos] += 1;
        split[..pos].iter_mut().for_each(|s| *s = 0);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(m: u32, g: u32, mult: &[(u32, u32)]) -> BigInt {
        dejonquieres_count(&DeJonquieresProblem::new(m, g, mult.iter().copied().collect()).unwrap())
    }

    #[test]
    fn worked_counts() {
        assert_eq!(count(4, 0, &[(2, 1)]), BigInt::from(6));
        assert_eq!(count(3, 1, &[(2, 1)]), BigInt::from(6));
        assert_eq!(count(4, 0, &[(3, 1)]), BigInt::from(6));
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::from(0));
    }

    #[test]
    fn problem_validation() {
        let p = DeJonquieresProblem::new(5, 0, [(2, 2)].into_iter().collect()).unwrap();
        assert_eq!(p.multiplicities().get(&1), Some(&1));
        assert_eq!(p.dimension(), 2);
        assert!(DeJonquieresProblem::new(3, 0, [(2, 2)].into_iter().collect()).is_err());
        assert!(DeJonquieresProblem::new(5, 0, [(1, 2), (2, 2)].into_iter().collect()).is_err());
        assert!(DeJonquieresProblem::new(5, 0, [(0, 2)].into_iter().collect()).is_err());
    }

    #[test]
    fn negative_exponent_still_counts_ramification() {
        // m - i - g = 2 - 1 - 5 < 0.
        assert_eq!(count(2, 5, &[(2, 1)]), BigInt::from(12));
    }
}

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// Osculating ranks of a curve in projective N-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub ambient: usize,
    pub degree: BigInt,
    pub genus: BigInt,
    /// Aggregated hyperosculation counts `k_1, ..., k_N`.
    pub stationary: Vec<BigInt>,
    /// Ranks `r_0, ..., r_{N-1}`; `r_0` is the degree.
    pub ranks: Vec<BigInt>,
}

impl RankProfile {
    /// `r_i`, extended by zero at `i = -1` and `i = N`.
    pub fn rank(&self, i: isize) -> BigInt {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.ranks.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// `k_j` for `1 <= j <= N`.
    pub fn stationary_count(&self, j: usize) -> BigInt {
        self.stationary[j - 1].clone()
    }

    /// Second differences of the ranks against genus and stationary counts,
    /// plus the weighted total of stationary points.
    pub fn relations(&self) -> Report {
        let mut report = Report::new();
        let base = BigInt::from(2) * &self.genus - 2;
        for i in 0..self.ambient as isize {
            let lhs = self.rank(i - 1) - BigInt::from(2) * self.rank(i) + self.rank(i + 1);
            let rhs = &base - self.stationary_count(i as usize + 1);
            report.push(Check::holds(format!("second difference at {i}"), lhs == rhs, lhs, rhs));
        }
        let (lhs, rhs) = self.weighted_total();
        report.push(Check::holds("weighted stationary total", lhs == rhs, lhs, rhs));
        report
    }

    fn weighted_total(&self) -> (BigInt, BigInt) {
        weighted_total(self.ambient, &self.degree, &self.genus, &self.stationary)
    }

    /// Profile of the osculating dual curve: ranks and stationary counts
    /// reversed, the genus unchanged.
    pub fn piene_dual(&self) -> RankProfile {
        let mut ranks = self.ranks.clone();
        ranks.reverse();
        let mut stationary = self.stationary.clone();
        stationary.reverse();
        RankProfile {
            ambient: self.ambient,
            degree: ranks[0].clone(),
            genus: self.genus.clone(),
            stationary,
            ranks,
        }
    }
}

fn weighted_total(ambient: usize, degree: &BigInt, genus: &BigInt, k: &[BigInt]) -> (BigInt, BigInt) {
    let lhs = k
        .iter()
        .enumerate()
        .map(|(j, kj)| BigInt::from(ambient - j) * kj)
        .sum::<BigInt>();
    let rhs = BigInt::from(ambient + 1) * (degree + BigInt::from(ambient) * (genus - 1));
    (lhs, rhs)
}

/// `r_i = (i+1)(m + i(g-1)) - sum_{j<=i} (i-j+1) k_j`.
fn rank_formula(i: usize, degree: &BigInt, genus: &BigInt, k: &[BigInt]) -> BigInt {
    let lead = BigInt::from(i + 1) * (degree + BigInt::from(i) * (genus - 1));
    let excess: BigInt = k[..i].iter().enumerate().map(|(j, kj)| BigInt::from(i - j) * kj).sum();
    lead - excess
}

/// Computes all ranks of a curve of the given degree and genus with the
/// given stationary counts `k_1..k_N`.
pub fn rank_profile(ambient: usize, degree: i64, genus: i64, stationary: &[i64]) -> Result<RankProfile> {
    if ambient == 0 {
        return Err(Error::Inconsistent("ambient dimension must be positive".into()));
    }
    if stationary.len() != ambient {
        return Err(Error::Inconsistent(format!(
            "expected {ambient} stationary counts, found {}",
            stationary.len()
        )));
    }
    if stationary.iter().any(|k| *k < 0) || genus < 0 {
        return Err(Error::Inconsistent(
            "stationary counts and genus must be nonnegative".into(),
        ));
    }
    let degree = BigInt::from(degree);
    let genus = BigInt::from(genus);
    let k: Vec<BigInt> = stationary.iter().map(|&v| BigInt::from(v)).collect();
    let (lhs, rhs) = weighted_total(ambient, &degree, &genus, &k);
    if lhs != rhs {
        return Err(Error::Inconsistent(format!(
            "weighted stationary total {lhs} differs from {rhs}"
        )));
    }
    let ranks: Vec<BigInt> = (0..ambient).map(|i| rank_formula(i, &degree, &genus, &k)).collect();
    if let Some((i, r)) = ranks.iter().enumerate().find(|(_, r)| r.is_negative()) {
        return Err(Error::Inconsistent(format!("rank r_{i} = {r} is negative")));
    }
    Ok(RankProfile {
        ambient,
        degree,
        genus,
        stationary: k,
        ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(p: &RankProfile) -> Vec<i64> {
        p.ranks.iter().map(|r| i64::try_from(r).unwrap()).collect()
    }

    #[test]
    fn twisted_cubic_is_self_dual() {
        let p = rank_profile(3, 3, 0, &[0, 0, 0]).unwrap();
        assert_eq!(ranks(&p), [3, 4, 3]);
        assert!(p.relations().all_passed());
        assert_eq!(p.piene_dual(), p);
    }

    #[test]
    fn elliptic_quartic() {
        let p = rank_profile(3, 4, 1, &[0, 0, 16]).unwrap();
        assert_eq!(ranks(&p), [4, 8, 12]);
        assert!(p.relations().all_passed());
        let dual = p.piene_dual();
        assert_eq!(ranks(&dual), [12, 8, 4]);
        let recomputed = rank_profile(3, 12, 1, &[16, 0, 0]).unwrap();
        assert_eq!(recomputed, dual);
    }

    #[test]
    fn plane_curve_ranks() {
        // Smooth plane quartic: degree 4, class 12, 24 flexes.
        let p = rank_profile(2, 4, 3, &[0, 24]).unwrap();
        assert_eq!(ranks(&p), [4, 12]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(rank_profile(3, 4, 1, &[0, 0, 15]).is_err());
        assert!(rank_profile(3, 4, 1, &[0, 16]).is_err());
        assert!(rank_profile(0, 4, 1, &[]).is_err());
        assert!(rank_profile(2, 1, 0, &[3, -3]).is_err());
    }
}

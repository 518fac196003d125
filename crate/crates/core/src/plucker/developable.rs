use std::collections::BTreeMap;

use super::{number, require_count};
use crate::error::{Error, Result};
use crate::polyring::{Field, Poly, Ring};
use crate::report::{Check, Report};

/// The numbers attached to a space curve and its tangent developable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DevelopableNumber {
    /// Degree of the curve.
    Order,
    /// Degree of the osculating-plane curve in the dual space.
    Class,
    /// Degree of the tangent developable.
    Rank,
    StationaryPlanes,
    StationaryPoints,
    /// Degree of the ordinary double curve of the tangent developable.
    DoubleCurve,
    /// Same for the developable of the dual curve.
    DualDoubleCurve,
    /// Apparent double points of the dual curve.
    DualApparentDoubles,
    /// Apparent double points of the curve.
    ApparentDoubles,
    Genus,
}

use DevelopableNumber as D;

impl DevelopableNumber {
    pub const ALL: [DevelopableNumber; 10] = [
        D::Order,
        D::Class,
        D::Rank,
        D::StationaryPlanes,
        D::StationaryPoints,
        D::DoubleCurve,
        D::DualDoubleCurve,
        D::DualApparentDoubles,
        D::ApparentDoubles,
        D::Genus,
    ];

    /// Short classical letter, also the variable name in the relation ring.
    pub fn symbol(self) -> &'static str {
        match self {
            D::Order => "m",
            D::Class => "n",
            D::Rank => "r",
            D::StationaryPlanes => "alpha",
            D::StationaryPoints => "beta",
            D::DoubleCurve => "x",
            D::DualDoubleCurve => "y",
            D::DualApparentDoubles => "g",
            D::ApparentDoubles => "h",
            D::Genus => "p_g",
        }
    }

    pub fn from_symbol(symbol: &str) -> Option<DevelopableNumber> {
        DevelopableNumber::ALL.into_iter().find(|d| d.symbol() == symbol)
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Known values keyed by number; all values must live in one ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialDevelopable {
    values: BTreeMap<DevelopableNumber, Poly>,
}

impl PartialDevelopable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, number: DevelopableNumber, value: Poly) -> Self {
        self.values.insert(number, value);
        self
    }

    pub fn with_int(self, which: DevelopableNumber, value: i64) -> Self {
        self.with(which, number(value))
    }

    pub fn get(&self, number: DevelopableNumber) -> Option<&Poly> {
        self.values.get(&number)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (DevelopableNumber, &Poly)> {
        self.values.iter().map(|(d, v)| (*d, v))
    }
}

/// A complete, mutually consistent set of developable numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DevelopableCharacters {
    pub order: Poly,
    pub class: Poly,
    pub rank: Poly,
    pub stationary_planes: Poly,
    pub stationary_points: Poly,
    pub double_curve: Poly,
    pub dual_double_curve: Poly,
    pub dual_apparent_doubles: Poly,
    pub apparent_doubles: Poly,
    /// Only known when the inputs pin it down.
    pub genus: Option<Poly>,
}

impl DevelopableCharacters {
    pub fn get(&self, which: DevelopableNumber) -> Option<&Poly> {
        Some(match which {
            D::Order => &self.order,
            D::Class => &self.class,
            D::Rank => &self.rank,
            D::StationaryPlanes => &self.stationary_planes,
            D::StationaryPoints => &self.stationary_points,
            D::DoubleCurve => &self.double_curve,
            D::DualDoubleCurve => &self.dual_double_curve,
            D::DualApparentDoubles => &self.dual_apparent_doubles,
            D::ApparentDoubles => &self.apparent_doubles,
            D::Genus => return self.genus.as_ref(),
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = (DevelopableNumber, &Poly)> {
        DevelopableNumber::ALL
            .into_iter()
            .filter_map(move |d| self.get(d).map(|v| (d, v)))
    }
}

fn relation_ring() -> Ring {
    let names = DevelopableNumber::ALL.map(DevelopableNumber::symbol);
    Ring::new(&names, Field::Rational).expect("valid names")
}

/// Each relation as a polynomial that vanishes on consistent data.
fn relations(ring: &Ring) -> Vec<(&'static str, Poly)> {
    let [m, n, r, alpha, beta, x, y, g, h, pg] = DevelopableNumber::ALL.map(|d| ring.gen(d.index()));
    // Class and flex count of a plane curve with the given degree, nodes
    // and cusps.
    let class_of = |deg: &Poly, nodes: &Poly, cusps: &Poly| deg * &(deg - 1) - nodes.scale_int(2) - cusps.scale_int(3);
    let flexes_of = |deg: &Poly, nodes: &Poly, cusps: &Poly| {
        (deg * &(deg - 2)).scale_int(3) - nodes.scale_int(6) - cusps.scale_int(8)
    };
    vec![
        ("section class", class_of(&r, &x, &m) - &n),
        ("section degree", class_of(&n, &g, &alpha) - &r),
        ("section flexes", flexes_of(&r, &x, &m) - &alpha),
        ("section cusps", flexes_of(&n, &g, &alpha) - &m),
        ("projection class", class_of(&m, &h, &beta) - &r),
        ("projection degree", class_of(&r, &y, &n) - &m),
        ("projection flexes", flexes_of(&m, &h, &beta) - &n),
        ("projection cusps", flexes_of(&r, &y, &n) - &beta),
        ("stationary balance", &alpha - &beta - (&n - &m).scale_int(2)),
        ("double curve balance", &x - &y - (&n - &m)),
        (
            "apparent double balance",
            (&g - &h).scale_int(2) - &(&n - &m) * &(&n + &m - 7),
        ),
        ("rank from order", m.scale_int(2) + pg.scale_int(2) - 2 - &beta - &r),
        ("rank from class", n.scale_int(2) + pg.scale_int(2) - 2 - &alpha - &r),
    ]
}

/// Evaluates `rel` at the known values; unknown slots must not occur.
fn evaluate(rel: &Poly, known: &[Option<Poly>], target: &Ring) -> Result<Poly> {
    let images: Vec<Poly> = known
        .iter()
        .map(|v| v.clone().unwrap_or_else(|| target.zero()))
        .collect();
    rel.compose(target, &images)
}

/// Solves for every number the relations determine, then checks every
/// relation whose numbers are all known.
///
/// Relations are scanned in a fixed order; the first one that is linear in
/// its single unknown with a constant coefficient is used, and the scan
/// restarts. Known inputs are never overwritten.
pub fn complete_developable(known: &PartialDevelopable) -> Result<(DevelopableCharacters, Report)> {
    let target = known
        .values
        .values()
        .next()
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::Insufficient("no numbers given".into()))?;
    if known.values.values().any(|p| p.ring() != &target) {
        return Err(Error::RingMismatch);
    }
    let ring = relation_ring();
    let rels = relations(&ring);
    let mut values: Vec<Option<Poly>> = DevelopableNumber::ALL.iter().map(|d| known.get(*d).cloned()).collect();

    'scan: loop {
        for (name, rel) in &rels {
            let mut unknown = DevelopableNumber::ALL
                .iter()
                .filter(|d| rel.degree_in(d.index()).is_some_and(|e| e > 0) && values[d.index()].is_none());
            let (Some(&var), None) = (unknown.next(), unknown.next()) else {
                continue;
            };
            let i = var.index();
            if rel.degree_in(i) != Some(1) {
                continue;
            }
            let parts = rel.coefficients_in(i);
            let slope = evaluate(&parts[1], &values, &target)?;
            let Some(slope) = slope.constant_value().filter(|s| !s.is_zero()) else {
                continue;
            };
            let rest = evaluate(&parts[0], &values, &target)?;
            let inv = slope.inv().expect("nonzero slope");
            let solved = -rest.scale(&inv);
            require_count(var.symbol(), &solved)
                .map_err(|e| Error::Inconsistent(format!("{e} (solved from {name})")))?;
            values[i] = Some(solved);
            continue 'scan;
        }
        break;
    }

    let missing: Vec<&str> = DevelopableNumber::ALL[..9]
        .iter()
        .filter(|d| values[d.index()].is_none())
        .map(|d| d.symbol())
        .collect();
    if !missing.is_empty() {
        return Err(Error::Insufficient(format!("cannot determine {}", missing.join(", "))));
    }

    let zero = target.zero();
    let mut report = Report::new();
    for (name, rel) in &rels {
        let uses_unknown = DevelopableNumber::ALL
            .iter()
            .any(|d| rel.degree_in(d.index()).is_some_and(|e| e > 0) && values[d.index()].is_none());
        if uses_unknown {
            continue;
        }
        report.push(Check::equal(*name, &evaluate(rel, &values, &target)?, &zero));
    }
    if let Some(bad) = report.failures().next() {
        return Err(Error::Inconsistent(format!("{} leaves residual {}", bad.name, bad.lhs)));
    }

    let mut it = values.into_iter();
    let mut next = || it.next().flatten();
    let chars = DevelopableCharacters {
        order: next().expect("solved"),
        class: next().expect("solved"),
        rank: next().expect("solved"),
        stationary_planes: next().expect("solved"),
        stationary_points: next().expect("solved"),
        double_curve: next().expect("solved"),
        dual_double_curve: next().expect("solved"),
        dual_apparent_doubles: next().expect("solved"),
        apparent_doubles: next().expect("solved"),
        genus: next(),
    };
    Ok((chars, report))
}

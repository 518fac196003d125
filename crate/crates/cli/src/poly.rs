use std::collections::BTreeMap;
use std::fs;

use clap::{Args, Subcommand};
use dualsurf_core::curvature::{classify_surface_point, hessian_determinant, second_fundamental_form, PointKind};
use dualsurf_core::flecnodal::{max_contact_order, salmon_covariants, ContactOrder};
use dualsurf_core::plucker::{
    complete_developable, dejonquieres_count, number, rank_profile, DeJonquieresProblem, DevelopableNumber,
    PartialDevelopable,
};
use dualsurf_core::polarity::{line_multiplicity, polar, polar_kic, tangent_cone, tangent_hyperplane};
use dualsurf_core::{parse_poly, Check, ExtNat, Field, Poly, ProjPoint, Ring};
use serde_json::{json, Value};

use crate::output::{text, CliError, CliResult, CommandResult};

#[derive(Args)]
pub struct PolyArgs {
    /// Polynomial given inline.
    #[arg(long, global = true, conflicts_with = "surface")]
    expr: Option<String>,
    /// File holding one polynomial expression.
    #[arg(long, global = true, value_name = "FILE")]
    surface: Option<String>,
    /// Comma-separated variable names; inferred when absent.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Prime field order; refused, since every command here reports values.
    #[arg(long, global = true)]
    modp: Option<u64>,
    #[command(subcommand)]
    op: PolyOp,
}

#[derive(Subcommand)]
pub enum PolyOp {
    /// `k`-th polar with respect to a point.
    Polar {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        order: u32,
    },
    /// Polar `k`-ic at a point.
    PolarKic {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        order: u32,
    },
    /// Tangent hyperplane at a smooth point.
    TangentPlane {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Contact order of the line through a point in a direction.
    LineMult {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, allow_hyphen_values = true)]
        dir: String,
    },
    /// Multiplicity and tangent cone at a point.
    TangentCone {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Hessian determinant.
    Hessian,
    /// Second fundamental form at a smooth point.
    FundamentalForm {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Parabolic classification and asymptotic directions of a surface point.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The two flecnodal covariants of a surface.
    Covariants,
    /// Whether a line meets the surface at the point with contact at least four.
    Flecnodal {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Virtual count of divisors with prescribed multiplicities in a linear series.
    Dejonquieres {
        /// Degree of the series.
        #[arg(long)]
        m: u32,
        #[arg(long)]
        genus: u32,
        /// Multiplicity pattern `s:count,...`.
        #[arg(long)]
        mult: String,
    },
    /// Osculating ranks of a curve.
    RankProfile {
        /// Dimension of the ambient projective space.
        #[arg(long)]
        ambient: usize,
        /// Degree of the curve.
        #[arg(long)]
        m: i64,
        #[arg(long)]
        genus: i64,
        /// Hyperosculation counts `k_1,...,k_N`.
        #[arg(long, value_delimiter = ',')]
        stationary: Vec<i64>,
    },
    /// Completes developable numbers from a determining subset.
    Developable {
        /// Known numbers as `symbol=value,...`: order m, class n, rank r,
        /// stationary planes alpha and points beta, double curves x and y,
        /// apparent doubles g and h, genus p_g.
        #[arg(long)]
        known: String,
    },
}

impl PolyOp {
    fn name(&self) -> &'static str {
        match self {
            PolyOp::Polar { .. } => "polar",
            PolyOp::PolarKic { .. } => "polar-kic",
            PolyOp::TangentPlane { .. } => "tangent-plane",
            PolyOp::LineMult { .. } => "line-mult",
            PolyOp::TangentCone { .. } => "tangent-cone",
            PolyOp::Hessian => "hessian",
            PolyOp::FundamentalForm { .. } => "fundamental-form",
            PolyOp::Classify { .. } => "classify",
            PolyOp::Covariants => "covariants",
            PolyOp::Flecnodal { .. } => "flecnodal",
            PolyOp::Dejonquieres { .. } => "dejonquieres",
            PolyOp::RankProfile { .. } => "rank-profile",
            PolyOp::Developable { .. } => "developable",
        }
    }

    fn point(&self) -> Option<&str> {
        match self {
            PolyOp::Polar { point, .. }
            | PolyOp::PolarKic { point, .. }
            | PolyOp::TangentPlane { point }
            | PolyOp::LineMult { point, .. }
            | PolyOp::TangentCone { point }
            | PolyOp::FundamentalForm { point }
            | PolyOp::Classify { point }
            | PolyOp::Flecnodal { point } => Some(point),
            _ => None,
        }
    }

    fn needs_surface(&self) -> bool {
        matches!(
            self,
            PolyOp::FundamentalForm { .. } | PolyOp::Classify { .. } | PolyOp::Covariants | PolyOp::Flecnodal { .. }
        )
    }
}

/// The polynomial and its ring, with the ring chosen from `--vars`, the
/// point dimension, or the first of `x,y,z` and `x,y,z,w` that parses.
fn load(args: &PolyArgs, out: &mut CommandResult) -> CliResult<Poly> {
    let source = match (&args.expr, &args.surface) {
        (Some(expr), _) => expr.clone(),
        (None, Some(path)) => {
            out.input("surface", path.as_str());
            fs::read_to_string(path)
                .map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?
                .trim()
                .to_string()
        }
        (None, None) => return Err(CliError::usage("one of --expr or --surface is required")),
    };
    out.input("expr", source.as_str());
    let field = Field::Rational;
    if let Some(vars) = &args.vars {
        let ring = Ring::new(vars, field)?;
        return Ok(parse_poly(&source, &ring).map_err(dualsurf_core::Error::from)?);
    }
    let dim = args.op.point().map(|p| p.split(',').count());
    let candidates = match dim {
        Some(3) if !args.op.needs_surface() => vec![Ring::plane(field)],
        Some(_) => vec![Ring::space(field)],
        None if args.op.needs_surface() => vec![Ring::space(field)],
        None => vec![Ring::plane(field), Ring::space(field)],
    };
    let mut last = None;
    for ring in candidates {
        match parse_poly(&source, &ring) {
            Ok(f) => return Ok(f),
            Err(e) => last = Some(e),
        }
    }
    Err(dualsurf_core::Error::from(last.expect("at least one ring")).into())
}

fn point_in(text: &str, ring: &Ring, flag: &str, out: &mut CommandResult) -> CliResult<ProjPoint> {
    out.input(flag, text);
    let p = ProjPoint::parse(text, ring.field())?;
    if p.dim() != ring.nvars() {
        return Err(CliError::usage(format!(
            "--{flag} has {} coordinates, the polynomial lives in {} variables",
            p.dim(),
            ring.nvars()
        )));
    }
    Ok(p)
}

fn parse_pairs<'a>(text: &'a str, sep: char, flag: &str) -> CliResult<Vec<(&'a str, &'a str)>> {
    text.split(',')
        .map(|part| {
            part.split_once(sep)
                .map(|(a, b)| (a.trim(), b.trim()))
                .ok_or_else(|| CliError::usage(format!("--{flag}: `{part}` is not `a{sep}b`")))
        })
        .collect()
}

fn parse_int<T: std::str::FromStr>(text: &str, flag: &str) -> CliResult<T> {
    text.parse()
        .map_err(|_| CliError::usage(format!("--{flag}: `{text}` is not an integer")))
}

fn kind_name(kind: PointKind) -> &'static str {
    match kind {
        PointKind::NonParabolic => "non_parabolic",
        PointKind::ParabolicRank1 => "parabolic",
        PointKind::PlanarIIZero => "planar",
    }
}

fn contact_name(order: ContactOrder) -> &'static str {
    match order {
        ContactOrder::Three => "3",
        ContactOrder::AtLeastFour => "at_least_4",
        ContactOrder::Infinity => "infinity",
    }
}

fn matrix_value<T: std::fmt::Display>(rows: &[Vec<T>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(text).collect()))
            .collect(),
    )
}

fn run_counting(op: &PolyOp, out: &mut CommandResult) -> CliResult<()> {
    match op {
        PolyOp::Dejonquieres { m, genus, mult } => {
            out.input("m", *m).input("genus", *genus).input("mult", mult.as_str());
            let mut pattern = BTreeMap::new();
            for (s, count) in parse_pairs(mult, ':', "mult")? {
                pattern.insert(parse_int::<u32>(s, "mult")?, parse_int::<u32>(count, "mult")?);
            }
            let problem = DeJonquieresProblem::new(*m, *genus, pattern)?;
            out.result("dimension", problem.dimension());
            out.result("count", dejonquieres_count(&problem).to_string());
        }
        PolyOp::RankProfile {
            ambient,
            m,
            genus,
            stationary,
        } => {
            out.input("ambient", *ambient).input("m", *m).input("genus", *genus);
            out.input("stationary", stationary.clone());
            let profile = rank_profile(*ambient, *m, *genus, stationary)?;
            let strings = |v: &[num_bigint::BigInt]| -> Value { v.iter().map(text).collect() };
            out.result("ranks", strings(&profile.ranks));
            let dual = profile.piene_dual();
            out.result("dual_ranks", strings(&dual.ranks));
            out.result("dual_stationary", strings(&dual.stationary));
            out.report(profile.relations());
        }
        PolyOp::Developable { known } => {
            out.input("known", known.as_str());
            let mut partial = PartialDevelopable::new();
            for (symbol, value) in parse_pairs(known, '=', "known")? {
                let which = DevelopableNumber::from_symbol(symbol)
                    .ok_or_else(|| CliError::usage(format!("--known: unknown number `{symbol}`")))?;
                partial = partial.with(which, number(parse_int(value, "known")?));
            }
            let (chars, report) = complete_developable(&partial)?;
            for which in DevelopableNumber::ALL {
                if let Some(v) = chars.get(which) {
                    out.poly(which.symbol(), v);
                }
            }
            out.report(report);
        }
        _ => unreachable!("only counting commands reach here"),
    }
    Ok(())
}

pub fn run(args: &PolyArgs) -> CliResult<CommandResult> {
    let mut out = CommandResult::new(&format!("poly {}", args.op.name()));
    if let Some(p) = args.modp {
        return Err(CliError::usage(format!(
            "--modp {p}: `poly {}` reports exact values and runs over the rationals only",
            args.op.name()
        )));
    }
    if matches!(
        args.op,
        PolyOp::Dejonquieres { .. } | PolyOp::RankProfile { .. } | PolyOp::Developable { .. }
    ) {
        run_counting(&args.op, &mut out)?;
        return Ok(out);
    }
    let f = load(args, &mut out)?;
    let ring = f.ring().clone();
    out.input("vars", ring.vars().to_vec());
    match &args.op {
        PolyOp::Polar { point, order } | PolyOp::PolarKic { point, order } => {
            let a = point_in(point, &ring, "point", &mut out)?;
            out.input("order", *order);
            let result = if matches!(args.op, PolyOp::Polar { .. }) {
                polar(&f, &a, *order)?
            } else {
                polar_kic(&f, &a, *order)?
            };
            out.poly("polar", &result.equation);
            out.result("whole_space", result.whole_space);
        }
        PolyOp::TangentPlane { point } => {
            let q = point_in(point, &ring, "point", &mut out)?;
            out.poly("tangent_plane", &tangent_hyperplane(&f, &q, true)?);
        }
        PolyOp::LineMult { point, dir } => {
            let a = point_in(point, &ring, "point", &mut out)?;
            let b = point_in(dir, &ring, "dir", &mut out)?;
            let report = line_multiplicity(&f, &a, &b)?;
            out.result("multiplicity", text(&report.multiplicity));
            out.result("polar_memberships", report.polar_memberships.clone());
            let on = f.eval(a.coords())?.is_zero();
            let from_polars = report.multiplicity_from_memberships(on);
            out.checks.push(Check::holds(
                "restriction valuation agrees with polar memberships",
                report.routes_agree,
                report.multiplicity,
                from_polars,
            ));
        }
        PolyOp::TangentCone { point } => {
            let a = point_in(point, &ring, "point", &mut out)?;
            let cone = tangent_cone(&f, &a)?;
            out.result("multiplicity", cone.multiplicity);
            out.poly("cone", &cone.cone);
            out.result("pivot", ring.vars()[cone.pivot].as_str());
        }
        PolyOp::Hessian => {
            let h = hessian_determinant(&f)?;
            out.poly("hessian", &h);
            out.result(
                "degree",
                h.degree().map(|d| d.to_string()).unwrap_or_else(|_| "-infinity".into()),
            );
        }
        PolyOp::FundamentalForm { point } => {
            let p = point_in(point, &ring, "point", &mut out)?;
            let form = second_fundamental_form(&f, &p)?;
            out.result("matrix", matrix_value(&form.matrix));
            out.result("rank", form.rank);
            out.result("determinant", text(&form.determinant()));
            out.result("normalizer", text(&form.normalizer));
            out.result("frame", matrix_value(&form.frame));
            let hess = hessian_determinant(&f)?.eval(p.coords())?;
            out.checks.push(Check::holds(
                "form degenerates with the Hessian",
                hess.is_zero() == form.determinant().is_zero(),
                &hess,
                form.determinant(),
            ));
        }
        PolyOp::Classify { point } => {
            let p = point_in(point, &ring, "point", &mut out)?;
            let class = classify_surface_point(&f, &p)?;
            out.result("kind", kind_name(class.kind));
            out.result("discriminant", text(&class.discriminant));
            let directions: Vec<Value> = class
                .directions
                .iter()
                .map(|d| json!({"point": d.point.to_string(), "contact": d.contact.to_string()}))
                .collect();
            out.result("asymptotic_directions", directions);
            for d in &class.directions {
                out.checks.push(Check::holds(
                    format!("contact along {}", d.point),
                    d.contact >= ExtNat::Finite(3),
                    d.contact,
                    ">= 3",
                ));
            }
        }
        PolyOp::Covariants => {
            let pair = salmon_covariants(&f)?;
            out.poly("theta", &pair.theta);
            out.poly("phi", &pair.phi);
            let degree = |d: Option<u32>| d.map_or(Value::Null, Value::from);
            out.result("theta_degree", degree(pair.theta_degree));
            out.result("phi_degree", degree(pair.phi_degree));
            out.result("product_degree", degree(pair.product_degree));
            out.result("combination_homogeneous", pair.combination_homogeneous);
        }
        PolyOp::Flecnodal { point } => {
            let q = point_in(point, &ring, "point", &mut out)?;
            let cert = max_contact_order(&f, &q)?;
            out.result("member", cert.order != ContactOrder::Three);
            out.result("max_contact", contact_name(cert.order));
            out.poly("second", &cert.second);
            out.poly("third", &cert.third);
            if let Some(r) = &cert.resultant {
                out.result("resultant", text(r));
            }
            if let Some(b) = &cert.line_direction {
                out.result("line_direction", b.to_string());
            }
        }
        PolyOp::Dejonquieres { .. } | PolyOp::RankProfile { .. } | PolyOp::Developable { .. } => {
            unreachable!("handled above")
        }
    }
    Ok(out)
}

use clap::{Args, Subcommand};
use dualsurf_core::localmodels::{
    contact_order, stratum_check, stratum_model, swallowtail_cone, tacnode_discriminant, StratumId,
};
use dualsurf_core::plucker::{verify_plucker_relations, PlaneCurveCharacters};
use dualsurf_core::properties::{run_all, PropertyConfig};
use dualsurf_core::salmon::{
    branch_curve_characters, degree, hessian_developable_characters, nodecouple_characters, noether_equivalence,
    projected_ring, projected_surface_table, smooth_projection_agreement, symbolic_degree, verify_dual_relations,
};
use dualsurf_core::{Check, Field, Poly, Report};
use num_bigint::BigInt;

use crate::output::{CliError, CliResult, CommandResult};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Subcommand)]
pub enum VerifyCommand {
    /// Every relation of the surface tables, symbolically or over a degree range.
    All(AllArgs),
    /// Discriminants and strata of the local models.
    Models,
    /// Plücker relations of given plane-curve characters.
    Plucker {
        /// Degree, class, nodes, cusps, bitangents, flexes.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        chars: Vec<i64>,
    },
    /// Seeded randomized identity suites.
    Properties {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Work over the prime field of this order.
        #[arg(long)]
        modp: Option<u64>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
pub struct AllArgs {
    /// Check identities with the degree as an indeterminate (the default).
    #[arg(long)]
    symbolic: bool,
    /// Inclusive range of degrees, written `A..B`.
    #[arg(long, value_name = "A..B")]
    degree_range: Option<String>,
}

fn parse_range(text: &str) -> CliResult<(i64, i64)> {
    let bad = || CliError::usage(format!("bad degree range `{text}`, expected A..B"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo < 3 || hi < lo {
        return Err(CliError::usage(format!(
            "degree range {lo}..{hi} must satisfy 3 <= A <= B"
        )));
    }
    Ok((lo, hi))
}

/// All table relations at one degree, numeric or symbolic.
fn surface_suite(n: &Poly) -> CliResult<Report> {
    let mut report = verify_dual_relations(n)?;
    report.extend(hessian_developable_characters(n)?.1);
    report.extend(nodecouple_characters(n)?.1);
    report.extend(branch_curve_characters(n)?.1);
    report.extend(smooth_projection_agreement(n)?);
    Ok(report)
}

pub fn run(cmd: &VerifyCommand) -> CliResult<CommandResult> {
    match cmd {
        VerifyCommand::All(args) => {
            let mut out = CommandResult::new("verify all");
            match &args.degree_range {
                Some(range) => {
                    let (lo, hi) = parse_range(range)?;
                    out.input("degree_range", format!("{lo}..{hi}"));
                    for n in lo..=hi {
                        out.report_scoped(&format!("n={n}"), surface_suite(&degree(n))?);
                    }
                }
                None => {
                    out.input("symbolic", true);
                    out.report(surface_suite(&symbolic_degree())?);
                    let ring = projected_ring();
                    let [n, pi, pa, ksq] = [0, 1, 2, 3].map(|i| ring.gen(i));
                    out.report_scoped("projected", projected_surface_table(&n, &pi, &pa, &ksq)?.verify());
                    out.checks.push(noether_equivalence());
                }
            }
            out.result("checks_run", out.checks.len());
            Ok(out)
        }
        VerifyCommand::Models => {
            let mut out = CommandResult::new("verify models");
            let tacnode = tacnode_discriminant()?;
            out.poly("tacnode_discriminant", &tacnode.discriminant);
            out.result("tacnode_unit", tacnode.unit.to_string());
            out.checks.push(Check::equal(
                "tacnode discriminant",
                &tacnode.discriminant,
                &tacnode.reference,
            ));
            for id in StratumId::ALL {
                out.report(stratum_check(id)?);
            }
            let swallowtail = stratum_model(StratumId::Swallowtail)?;
            if let Some(cusp) = &swallowtail.cuspidal_curve {
                let order = contact_order(&swallowtail.ordinary_curve.branches[0], &cusp.ideal, 2)?;
                out.checks.push(Check::holds(
                    "binode contact with cuspidal curve",
                    order.is_integer() && order.to_integer() == BigInt::from(2),
                    &order,
                    2,
                ));
            }
            let (multiplicity, cone) = swallowtail_cone()?;
            out.result("swallowtail_multiplicity", multiplicity);
            out.poly("swallowtail_cone", &cone);
            out.checks.push(Check::holds(
                "swallowtail is a triple point",
                multiplicity == 3,
                multiplicity,
                3,
            ));
            Ok(out)
        }
        VerifyCommand::Plucker { chars } => {
            let mut out = CommandResult::new("verify plucker");
            out.input("chars", chars.clone());
            let values: [i64; 6] = chars
                .as_slice()
                .try_into()
                .map_err(|_| CliError::usage("--chars takes six integers"))?;
            let chars = PlaneCurveCharacters::from_ints(values)?;
            out.poly("genus", &chars.genus());
            out.poly("dual_genus", &chars.dual_genus());
            out.report(verify_plucker_relations(&chars));
            Ok(out)
        }
        VerifyCommand::Properties { seed, count, modp } => {
            let mut out = CommandResult::new("verify properties");
            let field = match modp {
                Some(p) => Field::prime(*p).map_err(|e| CliError::usage(e.to_string()))?,
                None => Field::Rational,
            };
            out.input("seed", seed.to_string())
                .input("count", *count)
                .input("field", field.to_string());
            out.report(run_all(&PropertyConfig::new(*seed, *count, field))?);
            Ok(out)
        }
    }
}

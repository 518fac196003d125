use clap::Subcommand;
use dualsurf_core::plucker::number;
use dualsurf_core::salmon::{
    branch_curve_characters, degree, dual_surface_table, hessian_developable_characters, nodecouple_characters,
    projected_surface_table, verify_dual_relations,
};
use serde_json::{Map, Value};

use crate::output::{text, CliError, CliResult, CommandResult};

#[derive(Subcommand)]
pub enum InvariantsCommand {
    /// Dual of a general smooth surface of the given degree.
    Surface {
        #[arg(long)]
        degree: i64,
    },
    /// Surface with ordinary singularities from its numerical data.
    Projected {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        pi: i64,
        #[arg(long)]
        pa: i64,
        #[arg(long)]
        ksq: i64,
    },
    /// Branch curve of a general projection to the plane.
    Branch {
        #[arg(long)]
        degree: i64,
    },
    /// Hessian and node-couple developables.
    Developable {
        #[arg(long)]
        degree: i64,
    },
}

fn require_degree(n: i64, min: i64) -> CliResult<()> {
    if n < min {
        return Err(CliError::usage(format!("--degree must be at least {min}, got {n}")));
    }
    Ok(())
}

pub fn run(cmd: &InvariantsCommand) -> CliResult<CommandResult> {
    match *cmd {
        InvariantsCommand::Surface { degree: n } => {
            require_degree(n, 3)?;
            let mut out = CommandResult::new("invariants surface");
            out.input("degree", n);
            let table = dual_surface_table(&degree(n))?;
            out.polys(table.entries());
            out.report(verify_dual_relations(&degree(n))?);
            Ok(out)
        }
        InvariantsCommand::Projected { n, pi, pa, ksq } => {
            let mut out = CommandResult::new("invariants projected");
            out.input("n", n).input("pi", pi).input("pa", pa).input("ksq", ksq);
            let table = projected_surface_table(&number(n), &number(pi), &number(pa), &number(ksq))?;
            out.polys(table.entries());
            out.report(table.verify());
            Ok(out)
        }
        InvariantsCommand::Branch { degree: n } => {
            require_degree(n, 2)?;
            let mut out = CommandResult::new("invariants branch");
            out.input("degree", n);
            let (chars, report) = branch_curve_characters(&degree(n))?;
            out.polys(chars.fields());
            out.poly("genus", &chars.genus());
            out.report(report);
            Ok(out)
        }
        InvariantsCommand::Developable { degree: n } => {
            require_degree(n, 3)?;
            let mut out = CommandResult::new("invariants developable");
            out.input("degree", n);
            let (hessian, report) = hessian_developable_characters(&degree(n))?;
            let mut values = Map::new();
            for (which, value) in hessian.entries() {
                values.insert(which.symbol().to_string(), text(value));
            }
            out.result("hessian", Value::Object(values));
            out.report_scoped("hessian", report);
            let (node_couple, report) = nodecouple_characters(&degree(n))?;
            let mut values = Map::new();
            for (which, value) in node_couple.entries() {
                values.insert(which.symbol().to_string(), text(value));
            }
            out.result("node_couple", Value::Object(values));
            out.report_scoped("node-couple", report);
            Ok(out)
        }
    }
}

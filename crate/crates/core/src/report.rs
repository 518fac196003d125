//! Named identity checks collected by the verifiers.

use std::fmt;

use crate::polyring::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Warn => "warn",
        })
    }
}

/// One compared pair of values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    /// Passes when the two polynomials are equal.
    pub fn equal(name: impl Into<String>, lhs: &Poly, rhs: &Poly) -> Check {
        Check {
            name: name.into(),
            status: if lhs == rhs { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn holds(name: impl Into<String>, ok: bool, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Check {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn warn(name: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Check {
        Check {
            name: name.into(),
            status: Status::Warn,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {} = {}", self.status, self.name, self.lhs, self.rhs)
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

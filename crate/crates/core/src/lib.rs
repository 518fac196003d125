//! Exact polarity calculus for hypersurfaces and the enumerative invariants
//! of surfaces in projective 3-space and their duals.

pub mod curvature;
pub mod error;
pub mod flecnodal;
pub mod localmodels;
pub mod plucker;
pub mod polarity;
pub mod polyring;
pub mod properties;
pub mod report;
pub mod salmon;

pub use error::{Error, ParseError, Result};
pub use polyring::{parse_poly, ExtNat, Field, Matrix, Poly, ProjPoint, Ring, Scalar};
pub use report::{Check, Report, Status};

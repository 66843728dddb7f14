//! Exact computations around discriminants of theta-representations and
//! projective codegrees of homogeneous varieties.

pub mod dual_degrees;
pub mod error;
pub mod kac_gradings;
pub mod root_systems;
pub mod symmetric_functions;
pub mod theta_matrix_models;

pub use error::{Error, Result};
pub use root_systems::{build_root_system, Family, LengthClass, RootSystem, RootVector};
pub use symmetric_functions::{Partition, SchurExpansion};
pub use dual_degrees::{ChowModel, CodegreeResult};
pub use kac_gradings::{GradingReport, KacDiagram, SimpleType};
pub use theta_matrix_models::{Case, CaseReport, CyclotomicNumber};

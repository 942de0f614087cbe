//! Finite closed symmetric monoidal categories, structures enriched over
//! them, and the correspondences between those structures, all as explicit
//! tables checked by exhaustive enumeration.

pub mod equiv;
pub mod error;
pub mod fincat;
pub mod instances;
pub mod interface;
pub mod monoidal;
pub mod report;
pub mod tables;
pub mod vcat;
pub mod vmodule;
pub mod vstruct;

pub use error::{Error, Result};
pub use report::{CheckReport, LAW_REGISTRY};

/// Object and morphism identifiers.
pub type Id = String;

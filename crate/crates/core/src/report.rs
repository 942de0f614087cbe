use serde::{Deserialize, Serialize};

use crate::Id;

/// One failed instance of a law.
///
/// Equation failures carry the two differing composites. Existence or
/// uniqueness failures carry the number of witnesses found instead.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CheckReport {
    pub law: String,
    pub site: Vec<Id>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<Id>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<Id>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witnesses: Option<usize>,
}

impl CheckReport {
    pub fn mismatch(law: &str, site: &[&str], lhs: &str, rhs: &str) -> Self {
        CheckReport {
            law: law.to_string(),
            site: site.iter().map(|s| s.to_string()).collect(),
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            witnesses: None,
        }
    }

    pub fn count(law: &str, site: &[&str], witnesses: usize) -> Self {
        CheckReport {
            law: law.to_string(),
            site: site.iter().map(|s| s.to_string()).collect(),
            lhs: None,
            rhs: None,
            witnesses: Some(witnesses),
        }
    }
}

/// Accumulates reports; equations are only recorded when the sides differ.
#[derive(Debug, Default)]
pub(crate) struct Reports(pub Vec<CheckReport>);

impl Reports {
    pub fn eq(&mut self, law: &str, site: &[&str], lhs: &str, rhs: &str) -> bool {
        if lhs != rhs {
            self.0.push(CheckReport::mismatch(law, site, lhs, rhs));
            false
        } else {
            true
        }
    }

    pub fn push(&mut self, r: CheckReport) {
        self.0.push(r);
    }

    pub fn extend(&mut self, rs: Vec<CheckReport>) {
        self.0.extend(rs);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn finish(mut self) -> Vec<CheckReport> {
        self.0.sort();
        self.0.dedup();
        self.0
    }
}

/// The public law registry accepted by `check --laws`.
pub const LAW_REGISTRY: &[&str] = &[
    "pentagon",
    "triangle",
    "symmetry.invol",
    "symmetry.hexagon",
    "symmetry.unit",
    "closed.bijection",
    "vcat.assoc",
    "vcat.unit",
    "vstructure.assoc",
    "vstructure.left-action",
    "vstructure.right-action",
    "cylinder.cp1-1",
    "path.cp2-1-25",
    "module.assoc",
    "module.unit",
    "moduleclosed.naturality",
    "bimodule.cp2-8-1",
    "bimodule.cp2-8-2",
    "bimodule.cp2-8-3",
    "comodule.assoc",
    "comodule.unit",
];

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed reference: table `{table}` mentions undeclared id `{id}`")]
    MalformedReference { table: String, id: String },
    #[error("missing component: table `{table}` has no entry for {key}")]
    MissingComponent { table: String, key: String },
    #[error("morphisms at positions {index} and {} are not composable", index + 1)]
    NonComposable { index: usize },
    #[error("morphisms `{f}` and `{g}` are not composable")]
    NotComposable { f: String, g: String },
    #[error("ambiguous {what}: {detail}")]
    Ambiguous { what: String, detail: String },
    #[error("{what} at {site:?}: found {count} witnesses, expected exactly one")]
    Witness { what: String, site: Vec<String>, count: usize },
    #[error("no inverse for `{0}`")]
    InverseAbsent(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("symmetry data required for {0}")]
    SymmetryRequired(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("engine bug: derived law `{law}` failed at {site:?} on input that passes the axioms ({detail})")]
    EngineBug { law: String, site: Vec<String>, detail: String },
}

impl Error {
    pub fn missing(table: &str, key: impl std::fmt::Debug) -> Self {
        Error::MissingComponent { table: table.to_string(), key: format!("{key:?}") }
    }

    pub fn witness(what: &str, site: &[&str], count: usize) -> Self {
        Error::Witness {
            what: what.to_string(),
            site: site.iter().map(|s| s.to_string()).collect(),
            count,
        }
    }

    /// Invalid input (as opposed to a failed construction or an evaluator defect).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedReference { .. }
                | Error::MissingComponent { .. }
                | Error::NonComposable { .. }
                | Error::NotComposable { .. }
                | Error::ShapeMismatch(_)
                | Error::SymmetryRequired(_)
                | Error::Parameter(_)
        )
    }
}

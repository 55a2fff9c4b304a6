use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system: type {cartan_type} rank {rank}")]
    UnsupportedRootSystem { cartan_type: String, rank: usize },

    #[error("{0} is not a positive root")]
    NotPositive(String),

    #[error("Weyl group of order {order} exceeds the enumeration limit {limit}")]
    GroupTooLarge { order: u128, limit: u128 },

    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A root vanishes on S without lying in the span of the vanishing simple roots.
    #[error("S is not in standard position: root {root} vanishes on S but is not in the span of the vanishing simple roots{}", suggestion_text(.suggestion))]
    NotStandardPosition {
        root: String,
        suggestion: Option<Vec<usize>>,
    },

    #[error("invalid Hessenberg space: {0}")]
    InvalidHessenberg(String),

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenbergFunction(String),

    #[error("operation requires the standard Hessenberg space")]
    UnsupportedHessenberg,

    #[error("invalid Weyl group word {0:?}")]
    InvalidWord(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("missing value for variable {0}")]
    MissingAssignment(String),

    #[error("matrix is not lower unitriangular")]
    NotUnitriangular,

    #[error("polynomial ring has {vars} variables, limit is {limit}")]
    GuardExceeded { vars: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    /// Tangent space smaller than the local dimension: the inputs are inconsistent.
    #[error("internal inconsistency at {word}: tangent dimension {tangent} < local dimension {local}")]
    Inconsistency {
        word: String,
        tangent: usize,
        local: usize,
    },
}

fn suggestion_text(s: &Option<Vec<usize>>) -> String {
    match s {
        Some(p) => {
            let one_based: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
            format!(
                "; reorder the coordinates as ({}) to group equal values",
                one_based.join(",")
            )
        }
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

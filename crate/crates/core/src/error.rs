use thiserror::Error;

/// Errors for inputs outside an operation's domain.
///
/// Arithmetic inconsistencies (a division that should be exact but is not, a
/// negative multiplicity) are bugs and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: need {lower} <= {lower_name} <= {upper_name}, got {lower_name}={lower}, {upper_name}={upper}")]
    IndexOrder {
        lower_name: &'static str,
        lower: u32,
        upper_name: &'static str,
        upper: u32,
    },

    #[error("enumeration of {k}! permutations exceeds the cost limit k <= {limit}")]
    CostLimit { k: u32, limit: u32 },

    #[error("unknown output format `{0}` (expected markdown, csv or json)")]
    UnknownFormat(String),

    #[error("rank must be at least 1, got {0}")]
    InvalidRank(u32),

    #[error("expected {expected} Dynkin labels for A_{expected}, got {got}")]
    LabelLength { expected: usize, got: usize },

    #[error("stable label needs {needed} rows but A_{rank} admits at most {available}")]
    RankTooSmall {
        needed: usize,
        rank: u32,
        available: usize,
    },

    #[error("invalid stable label: {0}")]
    InvalidStableLabel(String),

    #[error(
        "Dynkin labels {0:?} do not name a mixed-tensor irrep of equal upper and lower degree"
    )]
    NotStable(Vec<u32>),

    #[error("Y-block extraction failed: {0}")]
    ExtractionFailed(String),

    #[error("k={k} is outside the stable range 2k <= n+1 for n={n}")]
    OutsideStableRange { k: u32, n: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors reported by the kernel. Domain errors indicate bad caller input;
/// `NonvanishingTail` is an internal consistency failure and is surfaced
/// rather than repaired.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {n}+{m} != {p}+{q}")]
    DegreeMismatch { n: usize, m: usize, p: usize, q: usize },

    #[error("q-binomial domain: k={k} exceeds n={n}")]
    BinomialDomain { n: usize, k: usize },

    #[error("margin mismatch: rows sum to {row_total}, columns to {col_total}")]
    MarginMismatch { row_total: usize, col_total: usize },

    #[error("enumeration bound exceeded: {0}")]
    ResourceLimit(String),

    #[error("weight list has length {got} but the permutation moves {want} strands")]
    WeightLength { got: usize, want: usize },

    #[error("cutoff {cutoff} is below the required degree {required}")]
    CutoffTooSmall { cutoff: usize, required: usize },

    #[error("nonvanishing tail coefficient {value} at degree {degree}")]
    NonvanishingTail { degree: usize, value: String },

    #[error("duplicate label: {0}")]
    DuplicateLabel(String),

    #[error("no value assigned to label {0}")]
    UnassignedLabel(String),

    #[error("filtration needs at least one label")]
    EmptyFiltration,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

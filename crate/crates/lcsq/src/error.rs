use thiserror::Error;

#[derive(Debug, Error)]
pub enum LcsError {
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: u32, got: u32 },

    #[error(
        "rank disagreement between primes {p1} and {p2} at multidegree {degree:?}; \
         rerun with fresh primes or --exact"
    )]
    PrimeDisagreement { p1: u64, p2: u64, degree: Vec<u32> },

    #[error("inconsistent series at {context}: {detail}")]
    InconsistentSeries { context: String, detail: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

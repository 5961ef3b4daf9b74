use crate::genset::GenSet;

/// Errors produced by the library.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Coxeter system {family}{rank}: {reason}")]
    UnsupportedSystem {
        family: String,
        rank: String,
        reason: String,
    },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("generator index {index} out of range for a rank {rank} system")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("elements belong to different Coxeter systems")]
    MixedSystems,
    #[error("parabolic subgroup generated by {0} is infinite")]
    InfiniteParabolic(GenSet),
    #[error("length {length} exceeds the configured cap {cap}")]
    LengthCap { length: usize, cap: usize },
    #[error("generator set too large for an exhaustive sweep: rank {rank}, limit {limit}{hint}")]
    SweepTooLarge {
        rank: usize,
        limit: usize,
        hint: &'static str,
    },
    #[error("operation requires a crystallographic root system, got {0}")]
    NotCrystallographic(String),
    #[error("operation requires a permutation group (type A), got {0}")]
    NotTypeA(String),
    #[error("could not parse element {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

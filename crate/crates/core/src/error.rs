use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Cartan type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },

    #[error("cannot parse root system tag `{0}`")]
    BadTypeTag(String),

    #[error("objects belong to different root systems")]
    ContextMismatch,

    #[error("index {index} out of range (expected at most {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("root is not positive")]
    NotPositiveRoot,

    #[error("coweight is not dominant for its class")]
    NotAppropriatelyDominant,

    #[error("weight must be dominant integral of positive level")]
    NotDominantIntegral,

    #[error("no decision procedure for this order")]
    Undecidable,

    #[error("could not certify a unique maximum of the set")]
    UncertifiedMaximum,

    #[error("element is not a minimal coset representative")]
    NotCosetRep,

    #[error("coset projections of the regular and twisted products differ")]
    SameCosetViolation,

    #[error("face witness {0} is not below the polytope's defining element")]
    WitnessOutsideInterval(String),

    #[error("element does not lie in the subgroup")]
    NotInSubgroup,

    #[error("subset J must generate a finite parabolic subgroup")]
    InfiniteParabolic,

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

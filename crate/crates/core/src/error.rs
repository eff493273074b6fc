use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported group {0}")]
    UnsupportedGroup(String),

    #[error("SO({0}) with odd n has the same cone as O({0}); use O({0})")]
    OddSpecialOrthogonal(usize),

    #[error("label {label} is not in Lambda({group})")]
    LabelNotInGroup { label: String, group: String },

    #[error("weight {0} is not dominant for {1}")]
    NonDominantWeight(String, String),

    #[error("series constant term {0} is not a unit")]
    NonUnitConstant(String),

    #[error("series times (1-t)^{a}(1-t^2)^{b} does not terminate (nonzero coefficient at t^{index})")]
    DoesNotTerminate { a: u32, b: u32, index: usize },

    #[error("need at least {needed} series terms, have {have}")]
    InsufficientTerms { needed: usize, have: usize },

    #[error("polynomials live on different grids ({0}x{0} vs {1}x{1})")]
    GridMismatch(usize, usize),

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("form matrix is singular")]
    SingularForm,

    #[error("form matrix is not {0}")]
    WrongFormKind(&'static str),

    #[error("I + S is singular")]
    SingularCayley,

    #[error("S is not skew with respect to the form")]
    NotFormSkew,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("level {level} outside supported range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("unsupported rank: SU({0}) (supported: SU(2), SU(3), SU(4))")]
    UnsupportedRank(usize),

    #[error("group order must be positive")]
    EmptyGroup,

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("invalid modular data: {0}")]
    InvalidModularData(String),

    #[error("twist {index} is not unimodular (|ω| = {modulus})")]
    NonUnimodularTwist { index: usize, modulus: f64 },

    #[error("dimension vector is not a character of the fusion ring (residual {0:e})")]
    NotADimensionFunction(f64),

    #[error("S-matrix is degenerate (unitarity residual {0:e})")]
    Degenerate(f64),

    #[error("N[{a}][{b}][{c}] = {value} is not within tolerance of a non-negative integer")]
    NonIntegralFusion {
        a: usize,
        b: usize,
        c: usize,
        value: f64,
    },

    #[error("rational reconstruction failed for commutant entry {value}")]
    RationalReconstruction { value: f64 },

    #[error("commutant element {index} fails commutation (residual {residual:e})")]
    CommutantResidual { index: usize, residual: f64 },

    #[error("mass matrix with diagonal {diagonal:?} matches no A-D-E exponent multiset")]
    UnmatchedInvariant { diagonal: Vec<i64> },

    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("negative entry {value} in G[{index}]")]
    NegativeNimrep { index: usize, value: i64 },

    #[error("nimrep identity G_a G_b = sum N_ab^c G_c fails at (a, b) = ({a}, {b})")]
    NimrepIdentity { a: usize, b: usize },

    #[error("eigenvector gauge: {0}")]
    Gauge(String),

    #[error("structure constant N[{a}][{b}][{c}] = {value} is neither near-integer nor negative")]
    AmbiguousStructureConstant {
        a: usize,
        b: usize,
        c: usize,
        value: f64,
    },

    #[error("θ must contain the identity (t[0] >= 1)")]
    ThetaWithoutIdentity,

    #[error("no non-negative integer factorization Fᵀ F = M within {budget} nodes")]
    NoFactorization { budget: u64 },

    #[error("sector adjacency solving G F = F N is not a non-negative integer matrix")]
    NonIntegralAdjacency,

    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

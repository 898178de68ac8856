use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("unknown catalog group `{0}`")]
    UnknownCatalog(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("map is not a homomorphism: f({0}*{1}) != f({0})*f({1})")]
    NotHomomorphism(usize, usize),
    #[error("group is not perfect")]
    NotPerfect,
    #[error("invalid coefficient group: {0}")]
    InvalidCoefficients(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("invalid central extension: {0}")]
    InvalidExtension(String),
    #[error("invalid crossed module: {0}")]
    InvalidCrossedModule(String),
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("matrix dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("integer overflow during exact arithmetic")]
    Overflow,
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("search space cap exceeded: {0}")]
    SearchCap(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

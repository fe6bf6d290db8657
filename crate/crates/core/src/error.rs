use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse cyclotomic value {0:?}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("product table is not associative at ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("product table is not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("identity must be element 0")]
    IdentityNotFirst,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("names: {0}")]
    BadNames(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharTableError {
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("element does not connect the two points")]
    ElementDoesNotConnect,
    #[error("eigenspace splitting stalled (dimension {0})")]
    SplittingFailed(usize),
    #[error("lifting to cyclotomics failed: {0}")]
    LiftFailed(String),
    #[error("orthogonality check failed")]
    NotOrthogonal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("M is not a transversal of G: {0}")]
    NotATransversal(String),
    #[error("factorization not closed: {0}")]
    FactorizationNotClosed(String),
    #[error("identity is not in M")]
    IdentityNotInM,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("projection failed: {0}")]
    ProjectionFailed(String),
    #[error("map is not a morphism: {0}")]
    NotAMorphism(String),
    #[error(transparent)]
    CharTable(#[from] CharTableError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("grading not respected: {0}")]
    GradingNotRespected(String),
    #[error(transparent)]
    CharTable(#[from] CharTableError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("S-tilde is singular")]
    SingularSMatrix,
    #[error("ordering: {0}")]
    Ordering(String),
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Ordering(#[from] ModularError),
}

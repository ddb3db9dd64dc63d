//! Error types shared across the crate.

use thiserror::Error;

use crate::algebra::Poly;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("variable-count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("cannot factor `{0}`: {1}")]
    UnsupportedFactorShape(String, String),
    #[error("substitution matrix is singular")]
    SingularMatrix,
    #[error("substitution matrix/shift dimensions do not match variable count")]
    BadSubstitutionShape,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("linear form is identically zero")]
    ZeroLinForm,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinSolveError {
    #[error("dimension mismatch: matrix is {rows}x{cols}, rhs has length {rhs}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        rhs: usize,
    },
    #[error("parameters must be pairwise distinct")]
    NonDistinctParameters,
    #[error("internal certification failed: solver output did not expand to the target identity")]
    CertificationFailed,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("edge label must be a nonzero polynomial ({0}-{1})")]
    ZeroLabel(String, String),
    #[error("supplied factors for edge {0}-{1} do not expand to its label")]
    BadFactors(String, String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a cycle: {0}")]
    NotACycle(String),
    #[error("cycle has fewer than three distinct edge-labels")]
    TooFewLabels,
    #[error("no window of three successive pairwise-distinct edge-labels")]
    NoDistinctWindow,
    #[error("cycle is not reduced")]
    NotReduced,
    #[error("invalid reduction log entry: {0}")]
    BadLogEntry(String),
}

/// A single edge on which a candidate vertex-labeling fails the GKM condition.
#[derive(Debug, Clone, PartialEq)]
pub struct GkmViolation {
    pub u: String,
    pub v: String,
    pub label: Poly,
    pub difference: Poly,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SplineError {
    #[error("entry count mismatch: expected {expected}, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("missing entry for vertex `{0}`")]
    MissingEntry(String),
    #[error("GKM condition fails on {} edge(s)", .0.len())]
    GkmViolations(Vec<GkmViolation>),
    #[error("splines are defined over different graphs")]
    GraphMismatch,
    #[error("element {0} is not homogeneous of a well-defined degree")]
    NonHomogeneousElement(usize),
    #[error("component vertex sets do not partition the graph")]
    BadPartition,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MgsError {
    #[error("expected a connected graph")]
    Disconnected,
    #[error("expected exactly {expected} distinct edge-label(s), found {found}")]
    WrongLabelCount { expected: usize, found: usize },
    #[error("out of supported class: {0}")]
    OutOfSupportedClass(String),
    #[error("edge label `{0}` is not the square of a linear form in x, y")]
    LabelNotSquaredLinear(String),
    #[error("edge label `{0}` has no available factorization")]
    MissingFactors(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinSolve(#[from] LinSolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spline(#[from] SplineError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PinwheelError {
    #[error("a pinwheel needs at least three rays, got {0}")]
    TooFewRays(usize),
    #[error("only smoothness r = 1 is supported, got {0}")]
    UnsupportedSmoothness(u32),
    #[error("ray {0} does not pass through the center")]
    RayMissesCenter(usize),
    #[error("ray {0} has zero linear part")]
    DegenerateRay(usize),
    #[error("consecutive rays {0} and {1} are collinear")]
    CollinearAdjacentRays(usize, usize),
    #[error("line of ray {0} appears more than twice")]
    LineAppearsTooOften(usize),
    #[error("singular-vertex formula requires n = 4, got {0}")]
    SingularNeedsFour(usize),
    #[error(transparent)]
    Mgs(#[from] MgsError),
}

/// Umbrella error for IO and CLI surfaces.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinSolve(#[from] LinSolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spline(#[from] SplineError),
    #[error(transparent)]
    Mgs(#[from] MgsError),
    #[error(transparent)]
    Pinwheel(#[from] PinwheelError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
}

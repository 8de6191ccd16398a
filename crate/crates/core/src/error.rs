use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // poset validation
    #[error("relation matrix is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{found} labels given for {n} elements")]
    LabelCount { found: usize, n: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),

    // lattice validation
    #[error("a lattice needs at least one element")]
    EmptyLattice,
    #[error("elements {0} and {1} have no meet")]
    NoMeet(usize, usize),
    #[error("elements {0} and {1} have no join")]
    NoJoin(usize, usize),
    #[error("distributivity fails at a={0}, b={1}, c={2}")]
    NotDistributive(usize, usize, usize),

    // maps
    #[error("map table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("map is not monotone: {0} <= {1} but images are not ordered")]
    NotMonotone(usize, usize),
    #[error("map is not a frame homomorphism")]
    NotAHom,
    #[error("map does not preserve all joins, so it has no right adjoint")]
    NotJoinPreserving,
    #[error("adjunction law fails at ({0}, {1})")]
    AdjunctionFailure(usize, usize),
    #[error("supplied map is not the left adjoint: adjunction fails at ({0}, {1})")]
    AdjointMismatch(usize, usize),
    #[error("left adjoint does not exist")]
    AdjointAbsent,
    #[error("map is not a localic map")]
    NotLocalic,
    #[error("maps do not compose: domains and codomains differ")]
    Incompatible,

    // duality
    #[error("frame has {size} elements; spectra are limited to {limit}")]
    FrameTooLarge { size: usize, limit: usize },
    #[error("Stone map round trip fails at element {0}")]
    RoundTripFailure(usize),
    #[error("Stone map not natural at element {0}")]
    StoneNaturalityFailure(usize),

    // sublocales
    #[error("not a nucleus: {0}")]
    NotANucleus(String),
    #[error("not a sublocale: {0}")]
    NotASublocale(String),
    #[error("image nucleus identity fails at element {0}")]
    IdentityViolation(usize),

    // verification harness
    #[error("equivalence violated: {0}")]
    EquivalenceViolation(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("frame is not subfit")]
    NotSubfit,
    #[error("counterexample check failed: {0}")]
    CounterexampleViolation(String),

    // input
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },

    #[error("size {n} refused (maximum {max})")]
    SizeRefused { n: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("algebra is not finite dimensional below path length {0}")]
    NotFiniteDimensional(usize),
    #[error("relation not admissible: {0}")]
    NotAdmissible(String),
    #[error("not associative: {0}")]
    NotAssociative(String),
    #[error("ideal contains the unit")]
    IdealIsWholeAlgebra,
    #[error("radical unavailable: {0}")]
    RadicalUnavailable(String),
    #[error("not an algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("not an algebra homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("simple module with non-split endomorphism ring: {0}")]
    NonSplitResidueField(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("roots of unity unavailable: {0}")]
    RootsOfUnityUnavailable(String),
    #[error("group is not abelian")]
    NonAbelianGroup,
    #[error("characteristic divides the group order: {0}")]
    BadCharacteristic(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("action does not permute vertices and arrows: {0}")]
    NotQuiverCompatible(String),
    #[error("regular bimodule is not a direct summand of the tensor product (summand dims {0:?})")]
    NotASummand(Vec<usize>),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("fingerprint mismatch for {id}: expected {expected}, got {actual}")]
    FingerprintMismatch { id: String, expected: String, actual: String },
    #[error("certificate rejected: {0}")]
    CertificateRejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;

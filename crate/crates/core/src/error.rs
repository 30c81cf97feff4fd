use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator index {index} out of range for an alphabet of {size} generators")]
    GeneratorOutOfRange { index: usize, size: usize },

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("cannot parse word token `{token}`: {reason}")]
    ParseWord { token: String, reason: String },

    #[error("no image given for generator `{0}`")]
    MissingImage(String),

    #[error("generator `{0}` is not meridional, exponent sum is undefined")]
    NonMeridional(String),

    #[error("relator {0} is empty after free reduction")]
    EmptyRelator(usize),

    #[error("invalid two-bridge parameters ({alpha}, {beta}): {reason}")]
    InvalidTwoBridge { alpha: i64, beta: i64, reason: String },

    #[error("generator substitution is not invertible: `{0}` does not round-trip")]
    SubstitutionRoundTrip(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("relator {relator} does not map to the identity permutation")]
    RelatorNotIdentity { relator: String },

    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("word `{0}` is not in the subgroup")]
    NotInSubgroup(String),

    #[error("coset table is inconsistent: {0}")]
    InconsistentTable(String),

    #[error("relator {relator} is not killed by the quotient map (image `{image}`)")]
    RelatorNotKilled { relator: usize, image: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix for generator `{0}` is not invertible")]
    NotInvertible(String),

    #[error("relation residual {residual:e} exceeds tolerance {tol:e}")]
    RelationResidual { residual: f64, tol: f64 },

    #[error("representation is not special linear: |det - 1| = {0:e}")]
    NotSpecialLinear(f64),

    #[error("representations live on different presentations")]
    PresentationMismatch,

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("input representation is reducible: {0}")]
    ReducibleInput(String),

    #[error("word samples differ between the two trace vectors")]
    SampleMismatch,

    #[error("sampling failed: {0}")]
    Sampling(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("bundle check `{0}` failed")]
    Bundle(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

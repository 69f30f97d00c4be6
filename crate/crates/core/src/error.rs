use thiserror::Error;

/// Errors raised anywhere in the engine.
///
/// Variant names double as the stable diagnostic tokens printed by the CLI
/// (`gorlab ring check` prints `Degenerate`, and so on).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NotPrime: {0} is not a prime below 65536")]
    NotPrime(u64),
    #[error("NotSymmetric: form entry ({0},{1}) differs from ({1},{0})")]
    NotSymmetric(usize, usize),
    #[error(
        "Degenerate: the bilinear form has zero determinant, the ring would not be Gorenstein"
    )]
    Degenerate,
    #[error("EmbeddingDimTooSmall: e = {0}, need e >= 2")]
    EmbeddingDimTooSmall(usize),
    #[error("RingMismatch: operands live over different rings")]
    RingMismatch,
    #[error("NotUnital: basis vector 0 does not act as the identity")]
    NotUnital,
    #[error("NotCommutative: basis products {0}*{1} and {1}*{0} differ")]
    NotCommutative(usize, usize),
    #[error("NotAssociative: ({0}*{1})*{2} differs from {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("CubeNotZero: m^3 contains {0}*{1}*{2} != 0")]
    CubeNotZero(usize, usize, usize),
    #[error("SocleRankNot1: socle has rank {0}")]
    SocleRankNot1(usize),
    #[error("SocleNotRadicalSquare: socle differs from m^2")]
    SocleNotRadicalSquare,
    #[error("NotGraded: products leave the span of w, no bilinear-form normal form")]
    NotGraded,
    #[error("UnitIdeal: generator {0} is a unit, the quotient is zero")]
    UnitIdeal(usize),
    #[error("GeneratorInRadical: the chosen element lies in mM")]
    GeneratorInRadical,
    #[error("InvalidModule: {0}")]
    InvalidModule(String),
    #[error("NotModuleMap: {0}")]
    NotModuleMap(String),
    #[error("RadicalSquareNonzero: m^2 M != 0")]
    RadicalSquareNonzero,
    #[error("InsufficientDegree: truncation {truncation}, tail start {tail_start}, margin {margin} < {required} (last recurrence violation at index {last_violation:?})")]
    InsufficientDegree {
        truncation: usize,
        tail_start: usize,
        margin: usize,
        required: usize,
        last_violation: Option<usize>,
    },
    #[error("ConfigError: {0}")]
    Config(String),
    #[error("SchemaError at {pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("IoError: {0}")]
    Io(String),
    #[error("ResourceLimit: {what} needs a {rows}x{cols} dense system (work {work:.3e}, limit {limit:.3e})")]
    ResourceLimit {
        what: String,
        rows: usize,
        cols: usize,
        work: f64,
        limit: f64,
    },
}

impl Error {
    pub fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            pointer: pointer.into(),
            message: message.into(),
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

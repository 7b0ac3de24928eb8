use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,
    #[error("no non-zero entry")]
    NoNonZeroEntry,
    #[error("pairs must have positive values and gaps, found ({value}, {gap})")]
    ZeroPair { value: u32, gap: u32 },
    #[error("matrix shape mismatch: expected {rows}x{cols}, got {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("not an embedding datum class for ({f},{r})")]
    NotEmbeddingClass { f: usize, r: usize },
    #[error("invalid embedding datum: column {column} has no positive entry")]
    InvalidDatum { column: usize },
    #[error("size mismatch: entries sum to {found}, expected {expected}")]
    SizeMismatch { expected: u32, found: u32 },
    #[error("wrong length: expected {expected}, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("invalid context: m and d must be positive (m={m}, d={d})")]
    InvalidContext { m: usize, d: u32 },
    #[error("invalid lattice chain: {0}")]
    InvalidChain(&'static str),
    #[error("not a split hereditary order")]
    NotHereditaryOrder,
    #[error("not an edge: the two vertices are homothetic")]
    NotAnEdge,
    #[error("not applicable: E must be unramified of degree dividing d (f={f}, d={d})")]
    NotApplicable { f: u32, d: u32 },
    #[error("not a local type for ({f},{r})")]
    NotLocalType { f: usize, r: usize },
    #[error("invalid local type: {0}")]
    InvalidLocalType(&'static str),
    #[error("invalid range: all bounds and the worker count must be positive")]
    InvalidRange,
    #[error("zero denominator")]
    ZeroDenominator,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

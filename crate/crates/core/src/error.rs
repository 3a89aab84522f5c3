use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid polygon parameters n={n}, m={m}: need n >= 2 and m >= 1")]
    InvalidConfig { n: u32, m: u32 },

    #[error("({a},{b}) is not a diagonal of the {size}-gon")]
    InvalidDiagonal { a: i64, b: i64, size: u32 },

    #[error("{0} is not an m-diagonal")]
    NotMDiagonal(String),

    #[error("root {0} is not almost positive")]
    NotAlmostPositive(String),

    #[error("invalid colored root: {0}")]
    InvalidRoot(String),

    #[error("translation quiver is not stable")]
    NotStable,

    #[error("quiver has multiple arrows {src} -> {dst} (x{mult}); mesh categories are only defined without them")]
    MultipleArrows { src: String, dst: String, mult: u32 },

    #[error("truncation length must be at least 1, got {0}")]
    InvalidTruncation(usize),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("malformed quiver: {0}")]
    Malformed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("root/diagonal correspondence is inconsistent: {0}")]
    RootBijection(String),

    #[error("psi verification failed: {0}")]
    PsiVerification(String),
}

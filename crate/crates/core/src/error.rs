use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: S_{0} vs S_{1}")]
    RankMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("generator s_{index} does not exist in S_{n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("cell index ({i}, {j}) out of range for n = {n}")]
    CellIndexOutOfRange { n: usize, i: usize, j: usize },

    #[error("rank n = {n} is too small (need n >= {min})")]
    RankTooSmall { n: usize, min: usize },

    #[error("triple (i, j, k) = ({i}, {j}, {k}) is out of bounds for n = {n}")]
    TripleOutOfBounds { n: usize, i: usize, j: usize, k: usize },

    #[error("{0} is not bigrassmannian")]
    NotBigrassmannian(String),

    #[error("{v} is not strictly below {w} in Bruhat order")]
    NotBruhatBelow { v: String, w: String },

    #[error("wall index {index} out of range for n = {n}")]
    InvalidWall { index: usize, n: usize },

    #[error("integer overflow in Laurent polynomial arithmetic")]
    Overflow,

    #[error("{what} at n = {n} exceeds the limit n <= {max}; pass --force to run it anyway")]
    RankAboveLimit { what: &'static str, n: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank k = {0} is not supported (k must be at least 2)")]
    RankTooSmall(usize),
    #[error("index {index} is out of range 0..={k}")]
    IndexOutOfRange { index: i64, k: usize },
    #[error("rank mismatch: k = {left} vs k = {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("not a Bruhat cover")]
    NotACover,
    #[error("a cyclically decreasing element needs a proper subset of the index set")]
    FullSubset,
    #[error("duplicate index {0} in subset")]
    DuplicateIndex(usize),
    #[error("{0:?} is not a partition (parts must be weakly decreasing)")]
    NotAPartition(Vec<usize>),
    #[error("partition {parts:?} is not {k}-bounded")]
    NotBounded { parts: Vec<usize>, k: usize },
    #[error("partition {parts:?} is not a {p}-core")]
    NotACore { parts: Vec<usize>, p: usize },
    #[error("({c}, {r}) is not a k-rectangle for k = {k} (need c, r >= 1 and c + r = k + 1)")]
    NotAKRectangle { c: usize, r: usize, k: usize },
    #[error("h_{i} is not a generator for k = {k}")]
    HIndexOutOfRange { i: i64, k: usize },
    #[error("method {method} does not apply to {parts:?} at k = {k}")]
    MethodNotApplicable {
        method: &'static str,
        parts: Vec<usize>,
        k: usize,
    },
    #[error("element is not in the affine Fomin-Stanley subalgebra: {0}")]
    NotInSubalgebra(String),
    #[error("internal defect: {0}")]
    Internal(String),
}

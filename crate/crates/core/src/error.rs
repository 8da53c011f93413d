use thiserror::Error;

/// Failure to read one of the text literals (compositions, permutations,
/// trees, JSON combinations).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {what} from {input:?}: {reason}")]
pub struct ParseError {
    pub what: &'static str,
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        ParseError {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("blocks must be non-empty and pairwise disjoint")]
    InvalidBlocks,

    #[error("{0:?} is not a subset of the support {1:?}")]
    NotSubset(Vec<u32>, Vec<u32>),

    #[error("supports differ: {0:?} vs {1:?}")]
    SupportMismatch(Vec<u32>, Vec<u32>),

    #[error("supports overlap: {0:?} and {1:?}")]
    SupportsOverlap(Vec<u32>, Vec<u32>),

    #[error("support {0:?} is not an initial segment [n]")]
    NotInitialSegment(Vec<u32>),

    #[error("{0:?} and {1:?} do not form a disjoint cover of the support")]
    NotDisjointCover(Vec<u32>, Vec<u32>),

    #[error("block {0:?} is not a singleton")]
    NonSingletonBlock(Vec<u32>),

    #[error("order isomorphism needs sets of equal size ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("a wedge needs at least two children, got {0}")]
    TooFewChildren(usize),

    #[error("level function is not strictly increasing towards the root")]
    NotIncreasing,

    #[error("level function is not standard (image is not [k])")]
    NonStandardLevels,

    #[error("tree has {vertices} vertices but {levels} levels were given")]
    LevelCountMismatch { vertices: usize, levels: usize },

    #[error("label {label} out of range 1..={max}")]
    LabelOutOfRange { label: u32, max: usize },

    #[error("basis kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },

    #[error("a word is not a permutation of 1..n: {0:?}")]
    NotAPermutation(Vec<u32>),

    #[error("degree {requested} exceeds the supported bound {cap}")]
    DegreeTooLarge { requested: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

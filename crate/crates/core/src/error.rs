use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("clan has {found} symbols, expected p+q = {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("pair id {id} occurs {count} times, expected exactly twice")]
    PairCount { id: u32, count: usize },
    #[error("clan has {plus} '+' and {minus} '-' symbols, difference must be p-q = {diff}")]
    SignBalance {
        plus: usize,
        minus: usize,
        diff: i64,
    },
    #[error("invalid clan token {0:?}")]
    InvalidToken(String),
    #[error("compact clan format only supports pair ids 1..=9; use whitespace-separated tokens")]
    CompactOverflow,
    #[error("invalid partition {0:?}")]
    InvalidPartition(String),
    #[error("partition {partition} does not fit in a {p}x{q} box")]
    PartitionOutOfBox {
        partition: String,
        p: usize,
        q: usize,
    },
    #[error("clan {0} is not matchless")]
    NotMatchless(String),
    #[error("rook at (column {column}, height {height}) lies outside the shape")]
    RookOutsideShape { column: usize, height: usize },
    #[error("rooks attack each other along {0}")]
    AttackingRooks(String),
    #[error("rook placements have different shapes")]
    ShapeMismatch,
    #[error("clans {0} and {1} lie in different sects")]
    DifferentSects(String, String),
    #[error("clan {lower} is not below {upper}")]
    NotBelow { lower: String, upper: String },
    #[error("{upper} does not cover {lower} in its sect")]
    NotACover { lower: String, upper: String },
    #[error("no covering move of {clan} carries label {label}")]
    NoCoveringClan { clan: String, label: String },
    #[error("clan {0} is not an element of this poset")]
    UnknownElement(String),
    #[error("interval has {count} maximal chains, above the limit of {limit}")]
    ChainLimitExceeded { count: u128, limit: u128 },
    #[error("malformed poset document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;

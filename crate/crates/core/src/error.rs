use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unexpected character {found:?} at byte {offset} in word")]
pub struct WordParseError {
    pub offset: usize,
    pub found: char,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid board height {0:?}")]
pub struct BoardParseError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RookError {
    #[error("nothing to decompose: board is empty")]
    EmptyBoard,
    #[error("board too large for brute force: {cells} cells exceeds limit {limit}")]
    TooLargeForBruteForce { cells: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("word length {len} exceeds rewrite limit {limit}")]
    LimitExceeded { len: usize, limit: usize },
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for family `{family}`: {msg}")]
    BadParams { family: String, msg: String },
    #[error("detector set is empty")]
    EmptyDetectorSet,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("input is not a tree")]
    NotATree,
    #[error("set is not locating-dominating: {0}")]
    NotLocatingDominating(String),
    #[error("constructed set failed verification, unidentified pair ({0}, {1})")]
    ConstructionInvalid(usize, usize),
    #[error("universe element {{{0}, {1}}} is not coverable by any hyperedge")]
    Uncoverable(usize, usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

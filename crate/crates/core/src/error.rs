use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graphs with {0} vertices are not supported (1..=62)")]
    UnsupportedSize(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid size {size} for graph family `{family}`")]
    InvalidFamilySize { family: &'static str, size: usize },

    #[error("alternation needs two distinct letters, got {0} twice")]
    SameLetter(usize),

    #[error("letter {0} does not occur in the word")]
    LetterAbsent(usize),

    #[error("letter {letter} outside alphabet 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("word is missing letters {0:?}")]
    MissingLetters(Vec<usize>),

    #[error("word alphabet has {word} letters but the graph has {graph} vertices")]
    AlphabetMismatch { word: usize, graph: usize },

    #[error("malformed word: {0}")]
    WordSyntax(String),

    #[error("invalid position assignment: {0}")]
    InvalidAssignment(String),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("orientation contains a directed cycle")]
    CyclicOrientation,

    #[error("shortcut length must be at least 3 arcs, got {0}")]
    ShortcutLength(usize),

    #[error("uniform multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("graph is word-representable but no representant with at most {cap} copies per letter was found")]
    CapExceeded { cap: usize },

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("malformed {0}")]
    Malformed(String),

    #[error("checkpoint does not match this run: {0}")]
    CheckpointMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Strips `Line` wrappers down to the underlying cause.
    pub fn root(&self) -> &Error {
        match self {
            Error::Line { source, .. } => source.root(),
            e => e,
        }
    }
}

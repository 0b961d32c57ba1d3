use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("empty basis family")]
    EmptyFamily,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("ground set of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("contract and delete sets overlap")]
    Overlap,
    #[error("label `{0}` appears in both operands")]
    LabelCollision(String),
    #[error("basepoint `{0}` is a loop or coloop")]
    DegenerateBasepoint(String),
    #[error("element `{0}` is a loop or coloop where that is not allowed")]
    DegenerateElement(String),
    #[error("matroid too small: {0}")]
    TooSmall(String),
    #[error("not an exact 2-separation of a connected matroid")]
    NotA2Separation,
    #[error("truncation of a rank-0 matroid")]
    RankZero,
    #[error("not a circuit-hyperplane")]
    NotCircuitHyperplane,
    #[error("bad relabeling choice: {0}")]
    BadChoice(String),
    #[error("matroid is not connected")]
    NotConnected,
    #[error("no such tree edge: {0}")]
    BadEdge(String),
    #[error("N must be 3-connected with at least four elements")]
    BadN,
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("no proof construction applies to this N")]
    UnsupportedN,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("expected {expected} elements, got {got}")]
    BadSize { expected: usize, got: usize },
    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;

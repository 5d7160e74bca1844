use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("distance matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("distance matrix is empty")]
    EmptyMatrix,
    #[error("non-finite value at ({i}, {j})")]
    NonFinite { i: usize, j: usize },
    #[error("asymmetric distances: d({i},{j}) = {dij} but d({j},{i}) = {dji}")]
    AsymmetricMatrix {
        i: usize,
        j: usize,
        dij: f64,
        dji: f64,
    },
    #[error("negative distance d({i},{j}) = {value}")]
    NegativeDistance { i: usize, j: usize, value: f64 },
    #[error("nonzero diagonal entry d({i},{i}) = {value}")]
    NonzeroDiagonal { i: usize, value: f64 },
    #[error("triangle inequality violated: d({i},{j}) = {direct} > d({i},{via}) + d({via},{j}) = {detour}")]
    TriangleViolation {
        i: usize,
        via: usize,
        j: usize,
        direct: f64,
        detour: f64,
    },
    #[error("committee size k = {k} must satisfy 1 <= k <= n = {n}")]
    BadK { k: usize, n: usize },
    #[error("agent set is empty")]
    EmptySet,
    #[error("invalid committee: {0}")]
    InvalidCommittee(String),
    #[error("agent index {index} out of range for n = {n}")]
    AgentOutOfRange { index: usize, n: usize },
    #[error("asked for {wanted} agents but only {available} are available")]
    NotEnoughAgents { wanted: usize, available: usize },
    #[error("work budget of {limit} search nodes exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("alpha must be a finite value >= 1, got {0}")]
    BadAlpha(f64),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("k = {k} does not divide n = {n}")]
    Indivisible { n: usize, k: usize },
    #[error("zero-class of agent {class_rep} has {size} agents but {reps} representatives were mapped into it")]
    ClassOverflow {
        class_rep: usize,
        size: usize,
        reps: usize,
    },
    #[error("no committee satisfies the requested axioms")]
    NoFeasibleCommittee,
    #[error("invalid generator parameters: {0}")]
    BadParams(String),
    #[error("invalid input: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

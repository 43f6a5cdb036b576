use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("closure exceeds {limit} elements")]
    ClosureTooLarge { limit: usize },
    #[error("group order {order} exceeds the supported maximum of 128")]
    OrderTooLarge { order: usize },
    #[error("generator {index} is singular")]
    SingularGenerator { index: usize },
    #[error("unsupported matrix group over F_{p} in dimension {dim}")]
    UnsupportedField { p: u32, dim: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("action has order {action_order}, which does not divide {m}")]
    ActionOrderMismatch { action_order: usize, m: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("{p} does not divide the group order {order}")]
    PNotDividing { p: usize, order: usize },
    #[error("fingerprint mismatch for {id}: {detail}")]
    FingerprintMismatch { id: String, detail: String },
    #[error("cannot construct {id}: {detail}")]
    ConstructionError { id: String, detail: String },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("factor sizes multiply to {product}, group order is {order}")]
    SizeMismatch { product: usize, order: usize },
    #[error("identity {0} does not hold")]
    IdentityFailed(String),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("budget exhausted for {group} with shape {shape}")]
    BudgetExhausted { group: String, shape: String },
    #[error("catalog incomplete: {0}")]
    CatalogIncomplete(String),
}

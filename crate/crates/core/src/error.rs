use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication table is empty")]
    EmptyTable,
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedTable { row: usize, len: usize, expected: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative { a: usize, b: usize, c: usize, left: usize, right: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("row or column {index} of the table is not a permutation")]
    NotBijectiveRows { index: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    InvalidPermutation { index: usize, degree: usize },
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("subgroup enumeration stopped after {count} subgroups (cap {cap})")]
    SubgroupLimitExceeded { count: usize, cap: usize },
    #[error("group of order {order} exceeds the lattice cap of {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHomomorphism(String),
    #[error("element {element} is outside the group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not an abelian normal subgroup")]
    NotAbelianNormal,
    #[error("given subgroup is not a supplement of H")]
    NotASupplement,
    #[error("no permutable complement found")]
    NoComplementFound,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not a semidirect decomposition: {0}")]
    NotSemidirect(String),
    #[error("line {line} is not invariant under conjugation")]
    LineNotInvariant { line: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("subgroup family is not compatible at level {level}: {reason}")]
    NotCompatible { level: usize, reason: String },
    #[error("invalid inverse system: {0}")]
    InvalidSystem(String),
    #[error("no complement chain found at level {level}")]
    NoChainFound { level: usize },
    #[error("at level {level}: {source}")]
    AtLevel {
        level: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a configured size cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        match self {
            Error::OrderCapExceeded { .. }
            | Error::SubgroupLimitExceeded { .. }
            | Error::LatticeCapExceeded { .. } => true,
            Error::AtLevel { source, .. } => source.is_cap(),
            _ => false,
        }
    }

    pub(crate) fn at_level(level: usize) -> impl FnOnce(Error) -> Error {
        move |e| Error::AtLevel { level, source: Box::new(e) }
    }
}

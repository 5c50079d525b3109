use std::fmt;

use thiserror::Error;

/// Which line of a Cayley table broke the Latin-square property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table must be a non-empty {0}x{0} square")]
    BadShape(usize),
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("{axis} {index} repeats element {value}")]
    NotLatinSquare { axis: Axis, index: usize, value: usize },
    #[error("no element acts as a two-sided identity")]
    NoIdentity,
    #[error("({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("order {order} exceeds the cap of {cap}")]
    OrderCap { order: u128, cap: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("group is not a Blackburn 2-group")]
    NotBlackburn2Group,
    #[error("no 2-group form matched")]
    NoFormMatched,
    #[error("trichotomy violated: {0}")]
    TrichotomyViolated(String),
    #[error("no witness found")]
    NoWitness,
    #[error("claim failed: {0}")]
    ClaimFailed(String),
    #[error("action property failed: {0}")]
    ActionPropertyFailed(String),
    #[error("{0} is not a supported odd prime")]
    BadPrime(u64),
    #[error("counterexample in {group}: {detail}")]
    CounterexampleFound { group: String, detail: String },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("generator {0} is not a permutation")]
    NotPermutation(usize),
    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

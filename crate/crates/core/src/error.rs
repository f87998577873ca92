use alloc::string::String;

use crate::registry::DimensionRule;

/// Errors raised by catalog lookups, evaluation and the tools built on them.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("{function} accepts {rule}, got dimension {got}")]
    DimensionMismatch {
        function: &'static str,
        rule: DimensionRule,
        got: usize,
    },
    #[error("domain error in {function}: {reason}")]
    Domain {
        function: &'static str,
        reason: &'static str,
    },
    #[error("non-finite result in {function}: {context}")]
    NonFiniteResult {
        function: &'static str,
        context: &'static str,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid manifest: {}", .0.join("; "))]
    InvalidManifest(alloc::vec::Vec<String>),
    #[error("evaluation budget exhausted")]
    BudgetExhausted,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

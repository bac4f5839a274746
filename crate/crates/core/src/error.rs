use thiserror::Error;

use crate::growth::GrowthTable;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol {symbol} out of range for alphabet of size {alphabet}")]
    SymbolOutOfRange { symbol: usize, alphabet: usize },

    #[error("state {state} out of range for machine with {states} states")]
    StateOutOfRange { state: usize, states: usize },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("state count mismatch: {left} vs {right}")]
    StateCountMismatch { left: usize, right: usize },

    #[error("machine has no states")]
    EmptyMachine,

    #[error("invalid machine table: {0}")]
    InvalidTable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("refusing search: {0}")]
    SearchTooLarge(String),

    #[error("guard exceeded: {what} would reach {requested}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// The element budget ran out during a growth computation. The table holds
    /// every level that completed before the budget was hit.
    #[error("element limit {limit} exceeded after {} complete levels", partial.values.len())]
    GrowthLimit {
        limit: usize,
        partial: Box<GrowthTable>,
    },

    #[error("value does not fit: {0}")]
    Overflow(String),
}

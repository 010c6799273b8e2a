//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Identifiers shaped like `v<digits>`/`V<digits>` or `sk<digits>` are
    /// reserved for generated variables and Skolem constants.
    #[error("reserved identifier `{0}` is not allowed in input")]
    ReservedIdentifier(String),

    #[error("expected a ground {kind}, got `{offender}`")]
    NotGround { kind: &'static str, offender: String },

    #[error("expected a Horn clause, got `{0}`")]
    NotHorn(String),

    #[error("premise is not function-free: `{0}`")]
    FunctionalPremise(String),

    #[error("not a Skolem substitution for the given clauses: {0}")]
    NotSkolem(String),

    #[error("background literals contain a complementary pair: {0}")]
    ContradictoryBackground(String),

    #[error("tautologous input: `{0}`")]
    Tautology(String),

    #[error("empty term collection for non-ground clause `{0}`")]
    EmptyTermSet(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;

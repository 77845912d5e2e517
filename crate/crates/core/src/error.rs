use thiserror::Error;

use crate::growth::BallTable;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Operands from different families, ranks, dimensions or degrees, or a
    /// malformed element.
    #[error("structural error: {0}")]
    Structural(String),

    /// A group, polytope or lattice description that cannot be used as given.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("argument error: {0}")]
    Argument(String),

    /// The element budget ran out. `partial` holds every radius that was
    /// completed before the cap was hit.
    #[error("element budget of {budget} exceeded while expanding radius {} (last completed radius {last_completed_radius})", last_completed_radius + 1)]
    BudgetExceeded {
        budget: usize,
        last_completed_radius: usize,
        partial: Box<BallTable>,
    },

    /// A numeric check that must hold did not.
    #[error("check failed at t = {t}: {detail}")]
    CheckFailure { t: u64, detail: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

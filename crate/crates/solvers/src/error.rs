use std::fmt;

/// Hard failures of a solver invocation. Infeasible or unbounded problems are
/// reported through the solution status instead, never through this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverError {
    /// Non-finite entries or inconsistent dimensions in the problem data.
    BadInput(String),
    /// The iteration cap was hit before convergence.
    IterationLimit { iterations: usize },
    /// A factorization failed (degenerate basis or KKT system).
    Singular(String),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::BadInput(msg) => write!(f, "bad solver input: {msg}"),
            SolverError::IterationLimit { iterations } => {
                write!(f, "iteration limit reached after {iterations} iterations")
            }
            SolverError::Singular(msg) => write!(f, "singular system: {msg}"),
        }
    }
}

impl std::error::Error for SolverError {}

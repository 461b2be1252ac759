use thiserror::Error;

use crate::series::DimVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = 1")]
    PoleAtQOne,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("series bounds differ: {0} vs {1}")]
    BoundMismatch(DimVector, DimVector),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("reconstruction differs from the partition series at d = {0}")]
    ReconstructionMismatch(DimVector),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for failures that indicate a broken identity rather than bad
    /// input.
    pub fn is_consistency_failure(&self) -> bool {
        matches!(
            self,
            Error::ReconstructionMismatch(_) | Error::Consistency(_)
        )
    }
}

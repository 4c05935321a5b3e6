use crate::path::PathTypeId;

/// Errors produced by the solvers and the sampling harness.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A turning radius was zero, negative, or not finite.
    #[error("turning radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    /// A numeric argument was NaN or infinite.
    #[error("non-finite value for {0}")]
    NonFinite(&'static str),

    /// The dispatched path type could not be evaluated. This signals a
    /// partition bug and is never silently recovered from.
    #[error("dispatch selected {type_id:?} but its evaluation is infeasible ({reason})")]
    InternalInconsistency {
        type_id: PathTypeId,
        reason: &'static str,
    },

    /// A sample specification or grid dimension was rejected.
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_radius(r: f64) -> Result<f64> {
    if r.is_finite() && r > 0.0 {
        Ok(r)
    } else {
        Err(Error::InvalidRadius(r))
    }
}

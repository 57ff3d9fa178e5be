use thiserror::Error;

use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra dimension {dim} exceeds the ceiling of {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("element is not a versor")]
    NotVersor,
    #[error("element is not an invertible blade")]
    NotBlade,
    #[error("expected a grade-1 element")]
    NotVector,
    #[error("projection kinds differ")]
    KindMismatch,
    #[error("random generation failed after {attempts} attempts: {what}")]
    GenerationFailed { what: &'static str, attempts: usize },
}

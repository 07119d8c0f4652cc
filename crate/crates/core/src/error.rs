use thiserror::Error;

use crate::tensor::GroupKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial matrix sizes differ: {left} vs {right}")]
    MatrixSizeMismatch { left: usize, right: usize },

    #[error("{what} = {value} exceeds the bound {max} (raise INVINT_MAX_DIM to override)")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("the symplectic group needs an even dimension, got {0}")]
    OddSymplecticDim(usize),

    #[error("cycle type {parts:?} is not admissible for {kind} at dim {dim} (parts must be <= {max_part})")]
    Inadmissible {
        parts: Vec<usize>,
        kind: GroupKind,
        dim: usize,
        max_part: usize,
    },

    #[error("singular Gram matrix for kind={kind}, dim={dim}, degree={degree}")]
    SingularGram {
        kind: GroupKind,
        dim: usize,
        degree: usize,
    },

    #[error("representative dependence for kind={kind}, dim={dim}, degree={degree}: {detail}")]
    RepresentativeDependence {
        kind: GroupKind,
        dim: usize,
        degree: usize,
        detail: String,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid irreducible representation table: {0}")]
    InvalidIrreps(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("identity check failed: {0}")]
    IdentityViolation(String),

    #[error("{path}: {message}")]
    Json { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

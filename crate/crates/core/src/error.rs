use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector not primitivizable")]
    ZeroVector,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("lattice enumeration requires bounded polyhedron")]
    Unbounded,
    #[error("cone is not contained in the candidate host cone")]
    NotSubcone,
    #[error("invalid variety data: {0}")]
    InvalidData(String),
    #[error("fan cone supported neither on a leaf nor big: invalid fan for this variety")]
    InvalidFanCone,
    #[error("not Q-Gorenstein: cell {0} admits no defining linear form")]
    NotQGorenstein(String),
    #[error("class not ample for any model")]
    NotAmple,
    #[error("anticanonical class is not ample (not Fano)")]
    NotFano,
    #[error("variety is not Q-factorial")]
    NotQFactorial,
    #[error("only principal ideals supported")]
    MultiRelation,
    #[error("{0}")]
    Msg(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Constrained Delaunay tetrahedrization of piecewise-linear complexes.
//!
//! The mesher keeps every input vertex, segment and face exactly: Steiner
//! points inserted on input segments are stored implicitly as linear
//! combinations of the segment endpoints, and all geometric decisions are
//! taken with exact-sign indirect predicates. The pipeline follows the
//! classical recipe (Delaunay tetrahedrization of the vertices, segment
//! recovery, face recovery, interior/exterior labeling) and falls back to a
//! perturbation-aware gift-wrapping when local cavity expansion cannot
//! proceed.

pub mod exact;
pub mod face_recovery;
pub mod giftwrap;
pub mod io;
pub mod labeling;
pub mod pipeline;
pub mod plc;
pub mod postprocess;
pub mod predicates;
pub mod segment_recovery;
pub mod tetmesh;

use thiserror::Error;

/// Error type shared across the pipeline. The CLI maps each variant to a
/// distinct exit code.
#[derive(Debug, Error)]
pub enum CdtError {
    #[error("invalid PLC: {0}")]
    InvalidPlc(String),
    #[error("input does not bound a volume: {0}")]
    NotAVolume(String),
    #[error("I/O error: {0}")]
    Io(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("precision failure: {0}")]
    Precision(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<std::io::Error> for CdtError {
    fn from(e: std::io::Error) -> Self {
        CdtError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CdtError>;

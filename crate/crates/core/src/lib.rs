//! Combinatorial toolkit for 1-plane drawings.
//!
//! The crate classifies the crossings of a 1-plane drawing (type-k, type-2A,
//! nice), computes matchings, connectivity, Tutte-Berge deficiency and the
//! scattering number, and runs the component-contraction argument which shows
//! that 6-connected type-2A 1-planar graphs satisfy `c(G - S) - |S| <= 1` for
//! every vertex set `S`. Each run of that argument produces a
//! [`reduction::CutCertificate`] that records every intermediate check.
//!
//! Module map:
//! - [`graph`]: simple graphs, components, contraction, boundaries.
//! - [`drawing`]: crossing-pair drawings, validation, classification, subdrawings.
//! - [`algorithms`]: blossom matching, brute-force oracles, connectivity, deficiency.
//! - [`reduction`]: cut certificates.
//! - [`constructions`]: fixtures and seeded instance generators.
//! - [`cli`]: the `oneplane` command line.

pub mod algorithms;
pub mod cli;
pub mod constructions;
pub mod drawing;
pub mod graph;
pub mod reduction;

pub use drawing::{CrossingClass, CrossingPair, DrawingReport, OnePlaneDrawing, Rotation};
pub use graph::{Edge, Graph, GraphError, VertexSet};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{at}: {message}")]
    Schema { at: String, message: String },
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("refused by guard '{guard}': {detail}")]
    Guard { guard: &'static str, detail: String },
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn schema(at: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Error::Schema { at: at.into(), message: err.to_string() }
    }

    pub(crate) fn guard(guard: &'static str, detail: impl Into<String>) -> Self {
        Error::Guard { guard, detail: detail.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

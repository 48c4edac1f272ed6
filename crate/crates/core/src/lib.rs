//! Signed graphs, their spectra, and the tools to verify spectral Turán-type
//! results for graphs without unbalanced cliques.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod spectral;
pub mod subgraphs;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CycleSignSignature, Sign, SignedGraph, VertexSet};
pub use spectral::{eigenvalues, Spectrum};

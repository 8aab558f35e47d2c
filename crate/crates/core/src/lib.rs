//! Planar covers of graphs, embedding schemes and the induced quotient
//! embeddings of their bases.

pub mod automorphism;
pub mod cli;
pub mod corpus;
pub mod covering;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod interchange;
pub mod lifting;
pub mod negami;
pub mod perm;
pub mod planarity;
pub mod scheme;

pub use enumerate::Budget;
pub use error::{Error, Result};
pub use graph::{Dart, Edge, Graph, Vertex};
pub use perm::{Perm, Sign};
pub use scheme::{EmbeddingScheme, SurfaceId};

pub mod builtins;
pub mod complex;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod gorenstein;
pub mod graph;
pub mod homology;
pub mod independence;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};

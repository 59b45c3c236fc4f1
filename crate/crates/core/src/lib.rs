//! Explicit (q+1,8)-cages over GF(q), their perfect dominating sets, and the
//! q-regular and (q-1)-regular girth-8 graphs obtained by removing them.

pub mod cage;
pub mod error;
pub mod field;
pub mod graph;
pub mod io;
pub mod pds;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use graph::{
    BipartiteGraph, Coord, GammaLayout, Origin, Side, Vertex, VertexId, VertexMap, VertexSet,
};

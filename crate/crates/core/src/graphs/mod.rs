//! Multigraphs, rotation systems and embedding genus, and the bridge to
//! the multibranched surface `G x S^1`.

mod embedding;
mod graph;
mod product;
mod rotation;
mod xuong;

pub use embedding::{
    enumerate_rotation_systems, faces, genus_extremes, max_genus, min_genus, rotation_count,
    EmbeddingResult, GenusExtremes, DEFAULT_SEARCH_LIMIT,
};
pub use graph::{DartRef, Edge, End, Multigraph};
pub use product::{rotation_to_permutation, times_circle, verify_product_theorem, ProductReport};
pub use rotation::RotationSystem;
pub use xuong::{xuong_max_genus, XuongResult};

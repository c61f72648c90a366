//! Regular multibranched surfaces: first homology, boundaries of their
//! 3-dimensional neighborhoods, bounds on embeddable genus, and the bridge
//! to cellular embeddings of graphs via `G x S^1`.
//!
//! ```
//! use multibranched::{families::rose, homology::h1, neighborhood::{genus_range, SearchMode}};
//!
//! let x = rose(1);
//! assert_eq!(h1(&x).unwrap().to_string(), "Z^3");
//! let range = genus_range(&x, SearchMode::Exhaustive).unwrap();
//! assert_eq!((range.min_genus, range.max_genus), (1, 3));
//! ```

pub mod bounds;
pub mod cli;
mod cyclic;
pub mod error;
pub mod families;
pub mod graphs;
pub mod homology;
pub mod io;
pub mod neighborhood;
pub mod surface;
mod unionfind;

pub use error::{Error, Result};
pub use surface::{disk_sum, MultibranchedSurface, SectorShape, ValidationReport, Violation};

//! Neighborhoods of a multibranched surface in a 3-manifold.
//!
//! A neighborhood is fixed by a circular permutation system (how the
//! thickened sectors are stacked around each branch) and a slope system
//! (how they wind along it). Only the boundary surface is computed. Which
//! sides the strips join depends on the permutation system alone, so the
//! slope system is validated and reported but does not enter the genus.

mod permutation;
mod search;
mod slope;
mod trace;

pub use permutation::CircularPermutationSystem;
pub use search::{
    enumerate_permutation_systems, genus_range, genus_values, permutation_system_at, system_count,
    GenusRange, SearchMode,
};
pub use slope::{validate_slopes, Slope, SlopeSystem, SlopeViolation};
pub use trace::{
    boundary_genus, trace_boundary, BoundaryComponent, BoundarySurface, SectorSide, Side,
};

pub(crate) use trace::Tracer;

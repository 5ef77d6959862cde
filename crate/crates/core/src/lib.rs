//! Construction, enumeration and analysis of fullerene graphs with a focus
//! on pentagon clusters: incidence partitions, separation numbers, patch
//! boundary bounds, Goldberg (5,0) inflation and nanotube witnesses.

pub mod analysis;
pub mod bounds;
pub mod clusters;
pub mod error;
pub mod generator;
pub mod goldberg;
pub mod graph;
pub mod patch;
pub mod planar_code;
pub mod seeds;
pub mod spiral;
pub mod symmetry;

pub use error::*;
pub use graph::{validate_fullerene, DualGraph, Face, FullereneGraph, PlaneGraph};
pub use spiral::{canonical_spiral, wind_from_spiral, SpiralCode};

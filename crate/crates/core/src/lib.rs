//! Fixed-side hotspots of orthogonal trajectories.
//!
//! A trajectory is a polyline of timestamped vertices whose edges are all
//! parallel to a coordinate axis. The weight of an axis-parallel square (or
//! cube, in three dimensions) of side `s` is the time the moving entity spends
//! inside it; a hotspot is a placement of maximum weight.
//!
//! Three procedures are provided for the plane:
//!
//! * [`exact_hotspot_2d`]: brute force over the candidate grid, `O(n^3)`.
//! * [`quarter_hotspot`]: Fenwick-tree plane sweep, 1/4-approximate, `O(n log n)`.
//! * [`half_hotspot`]: segment-tree kinetic tournament sweep, 1/2-approximate,
//!   `O(n log^3 n)`; exact on trajectories whose edges are all x-parallel.
//!
//! [`cube_hotspot`] lifts any of them to cubes by projecting slabs.

pub mod algo;
pub mod contribution;
pub mod cube;
pub mod error;
pub mod fenwick;
pub mod gen;
pub mod harness;
pub mod io;
pub mod kinetic;
pub mod model;
pub mod oracle;
pub mod plot;
pub mod quarter;
pub mod scalar;

pub use algo::{Algorithm, SweepStats};
pub use contribution::{classify_case, contribution_at, update_events, Case, LinearFn};
pub use cube::{cube_hotspot, project_slab, Slab};
pub use error::{HotspotError, Result};
pub use fenwick::FenwickPair;
pub use kinetic::{half_hotspot, half_hotspot_horizontal, half_hotspot_traced, KineticSweep, KineticTree};
pub use model::{
    build_edge_set, cube_weight, partition, rotate, square_weight, Dim, EdgeSet, Orientation,
    Placement, TimedVertex, WeightedEdge,
};
pub use oracle::{corner_anchored_oracle, exact_hotspot_2d, exact_hotspot_3d};
pub use quarter::{corner_anchored_max, quarter_hotspot};
pub use scalar::{Rational, Scalar};

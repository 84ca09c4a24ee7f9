//! Centroidal locating sets in graphs: verification, exact and approximate
//! solvers for the centroidal dimension, bound calculators, extremal
//! constructions, and exhaustive small-graph enumeration.

pub mod approx;
pub mod bounds;
pub mod constructions;
pub mod dist;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod graph;
pub mod locate;

pub use dist::{all_pairs_distances, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{generate, parse_edge_list, Family, Graph};

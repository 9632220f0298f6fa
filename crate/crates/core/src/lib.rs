//! Heawood-type list colouring for graphs on surfaces.

pub mod genus;
pub mod coloring;
pub mod constructions;
pub mod criticality;
pub mod embedding;
pub mod formats;
pub mod graph;
pub mod verify;

pub use graph::{Graph, GraphError};

/// Window arithmetic at machine width.
pub type HeawoodWindow = genus::GenusWindow<i64>;

pub mod action;
pub mod cell;
pub mod config;
pub mod contraction;
pub mod dot;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod loops;
pub mod orbits;
pub mod verify;

pub use action::{BraidWord, Sign};
pub use cell::{CellGraph, LabeledEdge};
pub use config::SectorConfig;
pub use contraction::Contraction;
pub use enumeration::{enum_chord_diagrams, enum_junction_trees, enum_standard_graphs, schroeder, ChordDiagram};
pub use error::{Error, Result};
pub use loops::{verify_commutation, LoopSystem, LoopWord};
pub use orbits::{classify_components, orbit_bfs, zeros_of_eigenfunction, Component};
pub use graph::{HalfEdge, Item, StandardGraph, Structure, StructureKind, VertexId, Violation};

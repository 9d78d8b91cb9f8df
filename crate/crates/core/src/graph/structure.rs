//! `j`-junctions and the I/V/Y structures hanging at them.
//!
//! With the ray convention of this crate the structures are local:
//! * `I` (sector `j+1` dominant): ray `j+1` at its attachment vertex.
//! * `V` (sector `j+1` subdominant): rays `j+1`, `j+2` consecutive at a
//!   vertex of degree at least 4.
//! * `Y` (sector `j+1` subdominant): rays `j+1`, `j+2` on a degree-3 vertex
//!   (the Y-junction), joined by a stem of double edges to the junction
//!   where faces `j` and `j+2` separate.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{HalfEdge, Item, StandardGraph, VertexId};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StructureKind {
    I,
    V,
    Y,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureKind::I => "I",
            StructureKind::V => "V",
            StructureKind::Y => "Y",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Structure {
    pub kind: StructureKind,
    /// The `j`-junction, where `j`- and `j₊`-edges separate.
    pub junction: VertexId,
    pub label: usize,
    /// For `Y`: the vertex where the two paths meet.
    pub y_junction: Option<VertexId>,
}

impl StandardGraph {
    /// Locates the structure at the `j`-junction, if there is one.
    pub fn find_structure(&self, j: usize) -> Result<Option<Structure>> {
        self.config.require_dominant(j)?;
        let cfg = &self.config;
        let r1 = cfg.succ(j);
        if cfg.is_dominant(r1) {
            return Ok(self.attach(r1).map(|u| Structure {
                kind: StructureKind::I,
                junction: u,
                label: j,
                y_junction: None,
            }));
        }
        let r2 = cfg.succ(r1);
        let (Some(h1), Some(x2)) = (self.ray_half_edge(r1), self.attach(r2)) else {
            return Ok(None);
        };
        let x = h1.vertex;
        if x != x2 || self.item(self.ccw(h1)) != Item::Ray(r2) {
            return Ok(None);
        }
        if self.degree(x) >= 4 {
            return Ok(Some(Structure {
                kind: StructureKind::V,
                junction: x,
                label: j,
                y_junction: None,
            }));
        }
        if self.degree(x) < 3 {
            return Ok(None);
        }
        let Item::Edge(first) = self.item(self.ccw(self.ccw(h1))) else {
            return Ok(None);
        };
        let (_, u) = self.walk_chain(x, first);
        Ok(Some(Structure {
            kind: StructureKind::Y,
            junction: u,
            label: j,
            y_junction: Some(x),
        }))
    }

    /// Follows degree-2 vertices from `from` through `first` until a
    /// junction; returns `(vertex before the junction, junction)`.
    pub(crate) fn walk_chain(&self, from: VertexId, first: VertexId) -> (VertexId, VertexId) {
        let mut prev = from;
        let mut cur = first;
        while self.degree(cur) == 2 {
            let next = self
                .neighbors(cur)
                .find(|&w| w != prev)
                .expect("chain vertex has two tree neighbours");
            prev = cur;
            cur = next;
        }
        (prev, cur)
    }

    /// All structures, by increasing dominant label.
    pub fn structures(&self) -> Vec<Structure> {
        self.config
            .dominant()
            .into_iter()
            .filter_map(|j| self.find_structure(j).ok().flatten())
            .collect()
    }

    pub fn y_junctions(&self) -> Vec<VertexId> {
        let mut ys: Vec<VertexId> = self.structures().into_iter().filter_map(|s| s.y_junction).collect();
        ys.sort();
        ys.dedup();
        ys
    }

    /// True when all junctions but one are Y-junctions.
    pub fn is_ivy(&self) -> bool {
        let ys = self.y_junctions();
        self.junctions().iter().filter(|v| !ys.contains(v)).count() == 1
    }

    /// The contiguous run of items at the structure's junction that belong
    /// to the structure, as `(first half-edge, length)`.
    pub(crate) fn structure_block(&self, s: &Structure) -> (HalfEdge, usize) {
        let j = s.label;
        let r1 = self.config.succ(j);
        match s.kind {
            StructureKind::I => (self.ray_half_edge(r1).expect("ray attached"), 1),
            StructureKind::V => (self.ray_half_edge(r1).expect("ray attached"), 2),
            StructureKind::Y => {
                let y = s.y_junction.expect("Y structure has a Y-junction");
                let stem = self
                    .neighbors(y)
                    .next()
                    .expect("Y-junction has a stem");
                let (last, u) = self.walk_chain(y, stem);
                debug_assert_eq!(u, s.junction);
                let index = self.position(u, Item::Edge(last)).expect("stem reaches junction");
                (HalfEdge { vertex: u, index }, 1)
            }
        }
    }

    /// Length of the stem of a Y structure, in edges.
    pub fn stem_length(&self, s: &Structure) -> Option<usize> {
        let y = s.y_junction?;
        Some(self.distances(y)[&s.junction])
    }
}

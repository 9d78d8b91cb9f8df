//! Finite encoding of standard graphs.
//!
//! A standard graph is stored as its normalized core: junctions plus the
//! chains of degree-2 vertices between them. Each vertex carries its
//! incident items (tree edges and ray stubs) in counterclockwise order.
//! Ray `i` separates the unbounded faces `S_{i-1}` (clockwise side) and
//! `S_i` (counterclockwise side). Walking outward along ray `i`, face `S_i`
//! is on the left.
//!
//! Edge directions and labels are derived, never stored: the `j`-edges run
//! counterclockwise around face `S_j`, i.e. with `S_j` on their left.

mod canonical;
mod structure;
mod validate;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::SectorConfig;
use crate::error::{Error, Result};

pub use structure::{Structure, StructureKind};
pub use validate::Violation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// One entry in a vertex's rotation. Written `v3` or `r2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Item {
    Edge(VertexId),
    Ray(usize),
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Edge(v) => write!(f, "{v}"),
            Item::Ray(r) => write!(f, "r{r}"),
        }
    }
}

impl std::str::FromStr for Item {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("expected `v<id>` or `r<ray>`, got {s:?}");
        let (kind, num) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        match kind {
            "v" => num.parse().map(|v| Item::Edge(VertexId(v))).map_err(|_| bad()),
            "r" => num.parse().map(Item::Ray).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

impl From<Item> for String {
    fn from(item: Item) -> String {
        item.to_string()
    }
}

impl TryFrom<String> for Item {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, String> {
        s.parse()
    }
}

/// A half-edge: the item at position `index` in the rotation of `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub vertex: VertexId,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct StandardGraph {
    config: SectorConfig,
    vertices: BTreeMap<VertexId, Vec<Item>>,
    next_id: u32,
}

// Literal equality of ids and rotations; the id allocator is not compared.
impl PartialEq for StandardGraph {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config && self.vertices == other.vertices
    }
}

impl Eq for StandardGraph {}

/// Left face of every half-edge, obtained by tracing the unbounded faces.
#[derive(Debug, Clone)]
pub struct FaceMap {
    left: HashMap<HalfEdge, usize>,
}

impl FaceMap {
    pub fn left(&self, h: HalfEdge) -> usize {
        self.left[&h]
    }
}

impl StandardGraph {
    /// Wraps a rotation system without validating it.
    pub fn from_rotations(config: SectorConfig, vertices: BTreeMap<VertexId, Vec<Item>>) -> Self {
        let next_id = vertices.keys().map(|v| v.0 + 1).max().unwrap_or(0);
        StandardGraph {
            config,
            vertices,
            next_id,
        }
    }

    /// The one-vertex graph with all `n` rays on a single junction.
    pub fn star(config: SectorConfig) -> Self {
        let items = (0..config.n()).map(Item::Ray).collect();
        let mut vertices = BTreeMap::new();
        vertices.insert(VertexId(0), items);
        Self::from_rotations(config, vertices)
    }

    pub fn config(&self) -> &SectorConfig {
        &self.config
    }

    pub fn n(&self) -> usize {
        self.config.n()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn rotations(&self) -> &BTreeMap<VertexId, Vec<Item>> {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn items(&self, v: VertexId) -> &[Item] {
        &self.vertices[&v]
    }

    pub fn item(&self, h: HalfEdge) -> Item {
        self.vertices[&h.vertex][h.index]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[&v].len()
    }

    pub fn is_junction(&self, v: VertexId) -> bool {
        self.degree(v) >= 3
    }

    pub fn junctions(&self) -> Vec<VertexId> {
        self.vertex_ids().filter(|&v| self.is_junction(v)).collect()
    }

    /// Index of `item` in the rotation of `v`.
    pub fn position(&self, v: VertexId, item: Item) -> Option<usize> {
        self.vertices.get(&v)?.iter().position(|&x| x == item)
    }

    /// The half-edge pointing back along `h`, if `h` is a tree edge.
    pub fn twin(&self, h: HalfEdge) -> Option<HalfEdge> {
        match self.item(h) {
            Item::Edge(w) => self.position(w, Item::Edge(h.vertex)).map(|index| HalfEdge { vertex: w, index }),
            Item::Ray(_) => None,
        }
    }

    /// Rotation neighbour clockwise of `h` at the same vertex.
    pub fn cw(&self, h: HalfEdge) -> HalfEdge {
        let d = self.degree(h.vertex);
        HalfEdge {
            vertex: h.vertex,
            index: (h.index + d - 1) % d,
        }
    }

    /// Rotation neighbour counterclockwise of `h` at the same vertex.
    pub fn ccw(&self, h: HalfEdge) -> HalfEdge {
        let d = self.degree(h.vertex);
        HalfEdge {
            vertex: h.vertex,
            index: (h.index + 1) % d,
        }
    }

    /// The vertex carrying ray `r`.
    pub fn attach(&self, r: usize) -> Option<VertexId> {
        self.ray_half_edge(r).map(|h| h.vertex)
    }

    pub fn ray_half_edge(&self, r: usize) -> Option<HalfEdge> {
        self.vertices.iter().find_map(|(&v, items)| {
            items
                .iter()
                .position(|&x| x == Item::Ray(r))
                .map(|index| HalfEdge { vertex: v, index })
        })
    }

    /// Tree neighbours of `v` (rays excluded), in rotation order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices[&v].iter().filter_map(|x| match x {
            Item::Edge(w) => Some(*w),
            Item::Ray(_) => None,
        })
    }

    /// Traces the boundary of face `S_r`, entering along ray `r+1`.
    /// Returns the outgoing half-edges with `S_r` on their left, ending
    /// with the exit ray, or the ray actually reached if it is not `r`.
    pub(crate) fn trace_face(&self, r: usize) -> std::result::Result<Vec<HalfEdge>, TraceFailure> {
        let n = self.n();
        let entry = (r + 1) % n;
        let mut arrival = self.ray_half_edge(entry).ok_or(TraceFailure::MissingRay(entry))?;
        let limit = 2 * self.vertices.values().map(Vec::len).sum::<usize>() + 2;
        let mut out = Vec::new();
        for _ in 0..limit {
            let next = self.cw(arrival);
            out.push(next);
            match self.item(next) {
                Item::Ray(k) if k == r => return Ok(out),
                Item::Ray(k) => return Err(TraceFailure::WrongExit { face: r, reached: k }),
                Item::Edge(_) => {
                    arrival = self.twin(next).ok_or(TraceFailure::BrokenEdge(next.vertex))?;
                }
            }
        }
        Err(TraceFailure::NoExit(r))
    }

    /// Left face of every half-edge. Fails on graphs that do not trace.
    pub fn faces(&self) -> Result<FaceMap> {
        let mut left = HashMap::new();
        for r in 0..self.n() {
            let path = self
                .trace_face(r)
                .map_err(|e| Error::InvalidGraph(e.to_string()))?;
            for h in path {
                if left.insert(h, r).is_some() {
                    return Err(Error::InvalidGraph(format!(
                        "half-edge at {} lies on two faces",
                        h.vertex
                    )));
                }
            }
        }
        let total: usize = self.vertices.values().map(Vec::len).sum();
        if left.len() != total {
            return Err(Error::InvalidGraph("some half-edges lie on no unbounded face".into()));
        }
        Ok(FaceMap { left })
    }

    /// `(left, right)` faces of a half-edge.
    pub fn sides(&self, faces: &FaceMap, h: HalfEdge) -> (usize, usize) {
        let left = faces.left(h);
        let right = match self.item(h) {
            Item::Ray(k) => self.config.pred(k),
            Item::Edge(_) => faces.left(self.twin(h).expect("tree edge has a twin")),
        };
        (left, right)
    }

    /// Each undirected core edge once, as a half-edge from the smaller id.
    pub fn core_edges(&self) -> Vec<HalfEdge> {
        let mut out = Vec::new();
        for (&v, items) in &self.vertices {
            for (index, item) in items.iter().enumerate() {
                if let Item::Edge(w) = item {
                    if v < *w {
                        out.push(HalfEdge { vertex: v, index });
                    }
                }
            }
        }
        out
    }

    /// Number of bounded faces: core edges between two dominant faces,
    /// plus each ray whose two sides are dominant (counted once, for its
    /// first segment).
    pub fn bounded_face_count(&self) -> usize {
        let faces = self.faces().expect("bounded_face_count needs a valid graph");
        let cfg = &self.config;
        let core = self
            .core_edges()
            .into_iter()
            .filter(|&h| {
                let (l, r) = self.sides(&faces, h);
                cfg.is_dominant(l) && cfg.is_dominant(r)
            })
            .count();
        let rays = (0..self.n())
            .filter(|&r| cfg.is_dominant(r) && cfg.is_dominant(cfg.pred(r)))
            .count();
        core + rays
    }

    /// Tree distances from `from` to every core vertex.
    pub fn distances(&self, from: VertexId) -> HashMap<VertexId, usize> {
        let mut dist = HashMap::new();
        dist.insert(from, 0);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for w in self.neighbors(v) {
                if !dist.contains_key(&w) {
                    dist.insert(w, d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The vertex path from `a` to `b`, both ends included.
    pub fn path(&self, a: VertexId, b: VertexId) -> Option<Vec<VertexId>> {
        let mut parent: HashMap<VertexId, VertexId> = HashMap::new();
        let mut queue = VecDeque::from([a]);
        parent.insert(a, a);
        while let Some(v) = queue.pop_front() {
            if v == b {
                let mut out = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[&cur];
                    out.push(cur);
                }
                out.reverse();
                return Some(out);
            }
            for w in self.neighbors(v) {
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                    e.insert(v);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// `Σ (deg(v) − 2) · |v − u0|` over all core vertices.
    pub fn u_metric(&self, u0: VertexId) -> Result<usize> {
        if !self.contains(u0) {
            return Err(Error::UnknownVertex(u0));
        }
        let dist = self.distances(u0);
        Ok(self
            .vertices
            .iter()
            .map(|(v, items)| items.len().saturating_sub(2) * dist.get(v).copied().unwrap_or(0))
            .sum())
    }

    /// Lengths (in edges) of the maximal chains between junctions.
    pub fn chain_lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for u in self.junctions() {
            for first in self.neighbors(u).collect::<Vec<_>>() {
                let mut prev = u;
                let mut cur = first;
                let mut len = 1;
                while !self.is_junction(cur) {
                    let next = self.neighbors(cur).find(|&w| w != prev);
                    match next {
                        Some(w) => {
                            prev = cur;
                            cur = w;
                            len += 1;
                        }
                        None => break,
                    }
                }
                if u < cur {
                    out.push(len);
                }
            }
        }
        out
    }

    pub fn max_chain(&self) -> usize {
        self.chain_lengths().into_iter().max().unwrap_or(0)
    }

    // ---- mutation helpers used by the actions ----

    pub(crate) fn items_mut(&mut self, v: VertexId) -> &mut Vec<Item> {
        self.vertices.get_mut(&v).expect("vertex exists")
    }

    pub(crate) fn add_vertex(&mut self, items: Vec<Item>) -> VertexId {
        let id = VertexId(self.next_id);
        self.next_id += 1;
        self.vertices.insert(id, items);
        id
    }

    /// Puts a fresh vertex on ray `r` next to its current attachment `u`.
    /// The new vertex carries the ray; `u` gets an edge in its place.
    pub(crate) fn materialize_on_ray(&mut self, u: VertexId, r: usize) -> VertexId {
        let idx = self.position(u, Item::Ray(r)).expect("ray attached at u");
        let w = self.add_vertex(vec![Item::Edge(u), Item::Ray(r)]);
        self.items_mut(u)[idx] = Item::Edge(w);
        w
    }

    /// Re-points the edge at `v` that leads to `old` so it leads to `new`.
    pub(crate) fn redirect(&mut self, v: VertexId, old: VertexId, new: VertexId) {
        let idx = self.position(v, Item::Edge(old)).expect("edge present");
        self.items_mut(v)[idx] = Item::Edge(new);
    }

    /// Absorbs degree-2 vertices carrying a ray into their neighbour,
    /// starting at `v` and cascading along the chain.
    pub(crate) fn normalize_from(&mut self, mut v: VertexId) {
        loop {
            let Some(items) = self.vertices.get(&v) else { return };
            if items.len() != 2 {
                return;
            }
            let (ray, other) = match (items[0], items[1]) {
                (Item::Ray(r), Item::Edge(w)) | (Item::Edge(w), Item::Ray(r)) => (r, w),
                _ => return,
            };
            self.vertices.remove(&v);
            let idx = self.position(other, Item::Edge(v)).expect("neighbour links back");
            self.items_mut(other)[idx] = Item::Ray(ray);
            v = other;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TraceFailure {
    MissingRay(usize),
    WrongExit { face: usize, reached: usize },
    BrokenEdge(VertexId),
    NoExit(usize),
}

impl fmt::Display for TraceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceFailure::MissingRay(r) => write!(f, "ray {r} is not attached"),
            TraceFailure::WrongExit { face, reached } => {
                write!(f, "face S_{face} leaves along ray {reached}")
            }
            TraceFailure::BrokenEdge(v) => write!(f, "edge at {v} has no reverse"),
            TraceFailure::NoExit(r) => write!(f, "face S_{r} never reaches infinity"),
        }
    }
}

use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::{Item, StandardGraph, TraceFailure, VertexId};

/// One broken invariant of a standard graph. Validation collects these
/// instead of failing, so enumeration filters can tally rejection reasons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Config(String),
    EmptyGraph,
    SelfLoop(VertexId),
    DanglingEdge { from: VertexId, to: VertexId },
    AsymmetricEdge { from: VertexId, to: VertexId },
    RayOutOfRange(usize),
    RayMissing(usize),
    RayRepeated(usize),
    NotATree,
    CyclicRayOrder { face: usize, reached: usize },
    FaceTrace(String),
    NotNormalized { vertex: VertexId, reason: &'static str },
    SubdominantEdge { vertex: VertexId, left: usize, right: usize },
    LabelOrder(VertexId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Config(m) => write!(f, "config: {m}"),
            Violation::EmptyGraph => write!(f, "graph has no vertices"),
            Violation::SelfLoop(v) => write!(f, "self loop at {v}"),
            Violation::DanglingEdge { from, to } => write!(f, "edge {from} -> {to} points to a missing vertex"),
            Violation::AsymmetricEdge { from, to } => {
                write!(f, "edge {from} -> {to} has no matching reverse entry")
            }
            Violation::RayOutOfRange(r) => write!(f, "ray {r} is out of range"),
            Violation::RayMissing(r) => write!(f, "ray {r} is missing"),
            Violation::RayRepeated(r) => write!(f, "ray {r} appears more than once"),
            Violation::NotATree => write!(f, "core is not a tree"),
            Violation::CyclicRayOrder { face, reached } => write!(
                f,
                "cyclic ray order: face S_{face} entering along ray {} leaves along ray {reached}",
                face + 1
            ),
            Violation::FaceTrace(m) => write!(f, "face trace: {m}"),
            Violation::NotNormalized { vertex, reason } => write!(f, "not normalized at {vertex}: {reason}"),
            Violation::SubdominantEdge { vertex, left, right } => write!(
                f,
                "edge at {vertex} separates two subdominant faces S_{left} and S_{right}"
            ),
            Violation::LabelOrder(v) => write!(f, "face labels not cyclically increasing around {v}"),
        }
    }
}

impl StandardGraph {
    /// Checks every standard-graph invariant and returns all violations.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out: Vec<Violation> = self
            .config
            .problems()
            .into_iter()
            .map(Violation::Config)
            .collect();
        if self.vertices.is_empty() {
            out.push(Violation::EmptyGraph);
            return out;
        }
        let n = self.n();

        let mut structural_ok = true;
        let mut seen_rays = vec![0usize; n];
        let mut edge_count = 0usize;
        for (&v, items) in &self.vertices {
            let mut local = HashSet::new();
            for &item in items {
                match item {
                    Item::Ray(r) if r >= n => {
                        out.push(Violation::RayOutOfRange(r));
                        structural_ok = false;
                    }
                    Item::Ray(r) => seen_rays[r] += 1,
                    Item::Edge(w) if w == v => {
                        out.push(Violation::SelfLoop(v));
                        structural_ok = false;
                    }
                    Item::Edge(w) => {
                        edge_count += 1;
                        if !local.insert(w) {
                            out.push(Violation::NotATree);
                            structural_ok = false;
                        }
                        match self.vertices.get(&w) {
                            None => {
                                out.push(Violation::DanglingEdge { from: v, to: w });
                                structural_ok = false;
                            }
                            Some(back) if !back.contains(&Item::Edge(v)) => {
                                out.push(Violation::AsymmetricEdge { from: v, to: w });
                                structural_ok = false;
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        for (r, &count) in seen_rays.iter().enumerate() {
            match count {
                0 => out.push(Violation::RayMissing(r)),
                1 => {}
                _ => out.push(Violation::RayRepeated(r)),
            }
            if count != 1 {
                structural_ok = false;
            }
        }
        if structural_ok && !self.is_tree(edge_count / 2) {
            out.push(Violation::NotATree);
            structural_ok = false;
        }
        if !structural_ok {
            return out;
        }

        for (&v, items) in &self.vertices {
            let rays = items.iter().filter(|x| matches!(x, Item::Ray(_))).count();
            match items.len() {
                0 => out.push(Violation::NotNormalized { vertex: v, reason: "isolated vertex" }),
                1 if self.vertices.len() > 1 => out.push(Violation::NotNormalized {
                    vertex: v,
                    reason: "leaf vertex without rays beyond it",
                }),
                2 if rays > 0 => out.push(Violation::NotNormalized {
                    vertex: v,
                    reason: "degree-2 vertex between a junction and a ray",
                }),
                _ => {}
            }
        }

        let mut traced = true;
        for r in 0..n {
            match self.trace_face(r) {
                Ok(_) => {}
                Err(TraceFailure::WrongExit { face, reached }) => {
                    out.push(Violation::CyclicRayOrder { face, reached });
                    traced = false;
                }
                Err(e) => {
                    out.push(Violation::FaceTrace(e.to_string()));
                    traced = false;
                }
            }
        }
        if !traced {
            return out;
        }
        let faces = match self.faces() {
            Ok(f) => f,
            Err(e) => {
                out.push(Violation::FaceTrace(e.to_string()));
                return out;
            }
        };

        for h in self.core_edges() {
            let (l, r) = self.sides(&faces, h);
            if self.config.is_subdominant(l) && self.config.is_subdominant(r) {
                out.push(Violation::SubdominantEdge { vertex: h.vertex, left: l, right: r });
            }
        }

        // Around every vertex the faces must increase counterclockwise, so
        // at most one step of the cyclic sequence wraps around.
        for &v in self.vertices.keys() {
            let d = self.degree(v);
            if d < 2 {
                continue;
            }
            let seq: Vec<usize> = (0..d)
                .map(|index| faces.left(super::HalfEdge { vertex: v, index }))
                .collect();
            let descents = (0..d).filter(|&i| seq[(i + 1) % d] <= seq[i]).count();
            if descents != 1 {
                out.push(Violation::LabelOrder(v));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn is_tree(&self, edges: usize) -> bool {
        let Some(&start) = self.vertices.keys().next() else {
            return false;
        };
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len() && edges + 1 == self.vertices.len()
    }
}

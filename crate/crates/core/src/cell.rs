//! General cell graphs: directed, label-edged graphs with an explicit
//! assignment of labels to the unbounded faces.
//!
//! A cell graph materializes a finite window of the infinite graph: the
//! core plus `window` vertices along every ray. Beyond the outermost
//! vertex of ray `r` the graph continues periodically, with the label of
//! sector `r` running outward and the label of sector `r-1` running
//! inward; those far-field edges are implied, not stored.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::config::SectorConfig;
use crate::error::{Error, Result};
use crate::graph::{Item, StandardGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabeledEdge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellGraph {
    pub(crate) config: SectorConfig,
    pub(crate) vertex_count: usize,
    /// Vertices `0..core_count` come from the core of a standard graph.
    pub(crate) core_count: usize,
    pub(crate) edges: Vec<LabeledEdge>,
    /// `face_assignment[s]` is the label of the unbounded face in sector `s`.
    pub(crate) face_assignment: Vec<usize>,
    pub(crate) window: usize,
    /// Materialized vertices along each ray, innermost first.
    pub(crate) ray_tails: Vec<Vec<usize>>,
}

impl CellGraph {
    pub fn config(&self) -> &SectorConfig {
        &self.config
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn core_count(&self) -> usize {
        self.core_count
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }

    pub fn face_assignment(&self) -> &[usize] {
        &self.face_assignment
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn ray_tails(&self) -> &[Vec<usize>] {
        &self.ray_tails
    }

    pub fn frontier(&self, r: usize) -> usize {
        *self.ray_tails[r].last().expect("window is at least 1")
    }

    pub fn is_standard_order(&self) -> bool {
        self.face_assignment.iter().enumerate().all(|(s, &l)| s == l)
    }

    /// Pairs of vertices joined by two directed edges.
    pub fn double_edges(&self) -> Vec<(usize, usize)> {
        let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in &self.edges {
            *count.entry((e.from.min(e.to), e.from.max(e.to))).or_default() += 1;
        }
        count.into_iter().filter(|&(_, c)| c >= 2).map(|(k, _)| k).collect()
    }

    /// Double edges with at least one endpoint in the core.
    pub fn core_double_edge_count(&self) -> usize {
        self.double_edges()
            .into_iter()
            .filter(|&(a, b)| a < self.core_count || b < self.core_count)
            .count()
    }

    /// Far-field edges implied at the frontier of ray `r`:
    /// `(outbound label, inbound label)`, each present only if dominant.
    pub(crate) fn far_field(&self, faces: &[usize], r: usize) -> (Option<usize>, Option<usize>) {
        let cfg = &self.config;
        let out = cfg.is_dominant(r).then(|| faces[r]);
        let inn = cfg.is_dominant(cfg.pred(r)).then(|| faces[cfg.pred(r)]);
        (out, inn)
    }

    /// Every broken cell-graph invariant, as messages.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let cfg = &self.config;
        let n = cfg.n();
        if self.face_assignment.len() != n || self.ray_tails.len() != n {
            out.push("face assignment or ray tails do not have n entries".into());
            return out;
        }
        for s in 0..n {
            let l = self.face_assignment[s];
            if cfg.is_subdominant(s) != cfg.is_subdominant(l) || (cfg.is_subdominant(s) && l != s) {
                out.push(format!("sector {s} carries label {l}"));
            }
        }
        let labels: BTreeSet<usize> = self.face_assignment.iter().copied().collect();
        if labels.len() != n {
            out.push("face assignment is not a permutation".into());
        }
        if self.window == 0 || self.ray_tails.iter().any(|t| t.len() != self.window) {
            out.push("every ray must carry exactly `window` materialized vertices".into());
            return out;
        }
        let mut outs: HashMap<(usize, usize), usize> = HashMap::new();
        let mut ins: HashMap<(usize, usize), usize> = HashMap::new();
        let mut degree = vec![0usize; self.vertex_count];
        for e in &self.edges {
            if e.from >= self.vertex_count || e.to >= self.vertex_count || e.from == e.to {
                out.push(format!("bad edge {} -> {}", e.from, e.to));
                continue;
            }
            if e.label >= n || cfg.is_subdominant(e.label) {
                out.push(format!("edge {} -> {} carries subdominant label {}", e.from, e.to, e.label));
            }
            *outs.entry((e.from, e.label)).or_default() += 1;
            *ins.entry((e.to, e.label)).or_default() += 1;
            degree[e.from] += 1;
            degree[e.to] += 1;
        }
        for r in 0..n {
            let f = self.frontier(r);
            let (o, i) = self.far_field(&self.face_assignment, r);
            if let Some(l) = o {
                *outs.entry((f, l)).or_default() += 1;
                degree[f] += 1;
            }
            if let Some(l) = i {
                *ins.entry((f, l)).or_default() += 1;
                degree[f] += 1;
            }
        }
        for (&(v, l), &c) in outs.iter().chain(ins.iter()) {
            if c > 1 {
                out.push(format!("vertex {v} has {c} edges labeled {l} in one direction"));
            }
        }
        for (v, d) in degree.iter().enumerate() {
            if d % 2 == 1 {
                out.push(format!("vertex {v} has odd degree {d}"));
            }
        }
        let mut pairs: BTreeMap<(usize, usize), Vec<&LabeledEdge>> = BTreeMap::new();
        for e in &self.edges {
            pairs.entry((e.from.min(e.to), e.from.max(e.to))).or_default().push(e);
        }
        for ((a, b), es) in pairs {
            match es.as_slice() {
                [_] => {}
                [x, y] if x.from != y.from && x.label != y.label => {}
                _ => out.push(format!("edges between {a} and {b} do not bound a clockwise digon")),
            }
        }
        out
    }

    /// Recovers the standard graph from a cell graph in standard order.
    /// The rotation at each vertex is read off the edge labels: an item
    /// between faces `S_a` and `S_b` sorts between `a` and `b`.
    pub fn to_standard(&self) -> Result<StandardGraph> {
        if !self.is_standard_order() {
            return Err(Error::NonStandardOrder);
        }
        let problems = self.validate();
        if !problems.is_empty() {
            return Err(Error::NotStandard(problems.join("; ")));
        }
        let n = self.config.n();
        // key[(v, w)] = twice the position of the item w at v, mod 2n
        let mut keys: BTreeMap<usize, BTreeMap<usize, Item>> = BTreeMap::new();
        let mut put = |v: usize, key: usize, item: Item| -> Result<()> {
            let slot = keys.entry(v).or_default();
            match slot.get(&key) {
                Some(prev) if *prev != item => Err(Error::NotStandard(format!(
                    "items {prev} and {item} collide in the rotation of vertex {v}"
                ))),
                _ => {
                    slot.insert(key, item);
                    Ok(())
                }
            }
        };
        for e in &self.edges {
            // The label is the left face of from->to, i.e. the right face
            // of to->from.
            put(e.from, (2 * e.label + 2 * n - 1) % (2 * n), Item::Edge(VertexId(e.to as u32)))?;
            put(e.to, 2 * e.label + 1, Item::Edge(VertexId(e.from as u32)))?;
        }
        for r in 0..n {
            put(self.frontier(r), (2 * r + 2 * n - 1) % (2 * n), Item::Ray(r))?;
        }
        // An edge with two known sides is inserted under both keys; keep
        // one entry per neighbour.
        let mut rotations = BTreeMap::new();
        for v in 0..self.vertex_count {
            let mut items: Vec<Item> = Vec::new();
            if let Some(slot) = keys.get(&v) {
                for item in slot.values() {
                    if !items.contains(item) {
                        items.push(*item);
                    }
                }
            }
            rotations.insert(VertexId(v as u32), items);
        }
        let mut g = StandardGraph::from_rotations(self.config.clone(), rotations);
        let ids: Vec<VertexId> = g.vertex_ids().collect();
        for v in ids {
            g.normalize_from(v);
        }
        let violations = g.validate();
        if violations.is_empty() {
            Ok(g)
        } else {
            let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            Err(Error::NotStandard(msgs.join("; ")))
        }
    }
}

impl StandardGraph {
    /// Materializes the cell graph with `window` vertices along each ray.
    /// Edges follow the side rule: an edge between dominant faces `j` and
    /// `k` becomes a `j`-edge and a `k`-edge; an edge with one dominant
    /// side `j` becomes a single `j`-edge; `j`-edges keep `S_j` on their
    /// left.
    pub fn to_cell_graph(&self, window: usize) -> Result<CellGraph> {
        if window == 0 {
            return Err(Error::ZeroWindow);
        }
        let faces = self.faces()?;
        let cfg = self.config().clone();
        let n = cfg.n();
        let index: HashMap<VertexId, usize> = self.vertex_ids().enumerate().map(|(i, v)| (v, i)).collect();
        let core_count = index.len();
        let mut vertex_count = core_count;
        let mut edges = Vec::new();
        let emit = |a: usize, b: usize, left: usize, right: usize, edges: &mut Vec<LabeledEdge>| {
            if cfg.is_dominant(left) {
                edges.push(LabeledEdge { from: a, to: b, label: left });
            }
            if cfg.is_dominant(right) {
                edges.push(LabeledEdge { from: b, to: a, label: right });
            }
        };
        for h in self.core_edges() {
            let (l, r) = self.sides(&faces, h);
            let Item::Edge(w) = self.item(h) else { unreachable!() };
            emit(index[&h.vertex], index[&w], l, r, &mut edges);
        }
        let mut ray_tails = vec![Vec::new(); n];
        for (r, tail) in ray_tails.iter_mut().enumerate() {
            let mut prev = index[&self.attach(r).expect("ray attached")];
            for _ in 0..window {
                let next = vertex_count;
                vertex_count += 1;
                emit(prev, next, r, cfg.pred(r), &mut edges);
                tail.push(next);
                prev = next;
            }
        }
        edges.sort();
        Ok(CellGraph {
            config: self.config().clone(),
            vertex_count,
            core_count,
            edges,
            face_assignment: (0..n).collect(),
            window,
            ray_tails,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize, sub: &[usize]) -> StandardGraph {
        StandardGraph::star(SectorConfig::new(n, sub.iter().copied()).unwrap())
    }

    #[test]
    fn star_window_one() {
        let cg = star(6, &[0, 3]).to_cell_graph(1).unwrap();
        assert_eq!(cg.vertex_count(), 7);
        assert!(cg.validate().is_empty(), "{:?}", cg.validate());
        // rays 2 (S_1|S_2) and 5 (S_4|S_5) carry double edges
        let doubles = cg.double_edges();
        let t2 = cg.ray_tails()[2][0];
        let t5 = cg.ray_tails()[5][0];
        assert_eq!(doubles, vec![(0, t2), (0, t5)]);
        assert_eq!(cg.core_double_edge_count(), 2);
    }

    #[test]
    fn alternating_star_has_no_double_edges() {
        let cg = star(6, &[0, 2, 4]).to_cell_graph(1).unwrap();
        assert!(cg.double_edges().is_empty());
    }

    #[test]
    fn zero_window_is_rejected() {
        assert_eq!(star(6, &[0, 3]).to_cell_graph(0), Err(Error::ZeroWindow));
    }

    #[test]
    fn round_trip_through_cell_graph() {
        let g = star(7, &[1, 4]);
        for w in 1..4 {
            let back = g.to_cell_graph(w).unwrap().to_standard().unwrap();
            assert!(back.equals(&g));
        }
    }
}

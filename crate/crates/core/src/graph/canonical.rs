//! Canonical relabeling. Rays are pinned to sector indices, so the
//! embedding is rigid: a depth-first walk from the vertex carrying ray 0,
//! starting at that ray, visits vertices in an order that is invariant
//! under isotopy.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

use super::{Item, StandardGraph, VertexId};

impl StandardGraph {
    /// Vertex ids in canonical visiting order, with each vertex's rotation
    /// started at its parent item (ray 0 for the root).
    fn canonical_order(&self) -> Vec<(VertexId, usize)> {
        let Some(root) = self.ray_half_edge(0) else {
            // Malformed graph: fall back to id order.
            return self.vertex_ids().map(|v| (v, 0)).collect();
        };
        let mut order = Vec::with_capacity(self.vertex_count());
        let mut stack = vec![(root.vertex, root.index)];
        let mut seen = std::collections::HashSet::new();
        seen.insert(root.vertex);
        while let Some((v, start)) = stack.pop() {
            order.push((v, start));
            let items = self.items(v);
            let d = items.len();
            let mut children = Vec::new();
            for k in 0..d {
                if let Item::Edge(w) = items[(start + k) % d] {
                    if seen.insert(w) {
                        let back = self.position(w, Item::Edge(v)).unwrap_or(0);
                        children.push((w, back));
                    }
                }
            }
            // Reverse so the first child is visited first.
            stack.extend(children.into_iter().rev());
        }
        order
    }

    /// The same graph with vertices renumbered `0..k` in canonical order
    /// and rotations started at the canonical item.
    pub fn canonical_graph(&self) -> StandardGraph {
        let order = self.canonical_order();
        let map: HashMap<VertexId, VertexId> = order
            .iter()
            .enumerate()
            .map(|(i, (v, _))| (*v, VertexId(i as u32)))
            .collect();
        let mut vertices = BTreeMap::new();
        for (v, start) in order {
            let items = self.items(v);
            let d = items.len();
            let rotated = (0..d)
                .map(|k| match items[(start + k) % d] {
                    Item::Edge(w) => Item::Edge(map.get(&w).copied().unwrap_or(w)),
                    ray => ray,
                })
                .collect();
            vertices.insert(map[&v], rotated);
        }
        StandardGraph::from_rotations(self.config.clone(), vertices)
    }

    /// Deterministic serialization, invariant under isotopy fixing the
    /// labeled sectors.
    pub fn canonical_string(&self) -> String {
        let g = self.canonical_graph();
        let mut s = String::new();
        let subs: Vec<String> = g.config.subdominant().iter().map(|x| x.to_string()).collect();
        write!(s, "n{};s{};", g.n(), subs.join(",")).unwrap();
        for (v, items) in &g.vertices {
            write!(s, "{}:", v.0).unwrap();
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                match item {
                    Item::Edge(w) => write!(s, "v{}", w.0).unwrap(),
                    Item::Ray(r) => write!(s, "r{r}").unwrap(),
                }
            }
            s.push(';');
        }
        s
    }

    pub fn canonicalize(&self) -> Vec<u8> {
        self.canonical_string().into_bytes()
    }

    /// Isotopy equality.
    pub fn equals(&self, other: &StandardGraph) -> bool {
        self.canonical_string() == other.canonical_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::SectorConfig;

    #[test]
    fn relabeling_and_rotation_do_not_change_canonical_string() {
        let cfg = SectorConfig::new(6, [0, 3]).unwrap();
        let mut a = BTreeMap::new();
        a.insert(VertexId(0), vec![Item::Ray(1), Item::Ray(2), Item::Edge(VertexId(1))]);
        a.insert(
            VertexId(1),
            vec![Item::Edge(VertexId(0)), Item::Ray(3), Item::Ray(4), Item::Ray(5), Item::Ray(0)],
        );
        let mut b = BTreeMap::new();
        b.insert(VertexId(7), vec![Item::Edge(VertexId(3)), Item::Ray(1), Item::Ray(2)]);
        b.insert(
            VertexId(3),
            vec![Item::Ray(4), Item::Ray(5), Item::Ray(0), Item::Edge(VertexId(7)), Item::Ray(3)],
        );
        let ga = StandardGraph::from_rotations(cfg.clone(), a);
        let gb = StandardGraph::from_rotations(cfg.clone(), b);
        assert!(ga.equals(&gb));
        assert!(!ga.equals(&StandardGraph::star(cfg)));
    }
}

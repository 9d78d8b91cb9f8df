//! Graphviz export. Layouts are a hint only; nothing parses this back.
//!
//! Structures are styled by kind: I dotted, V dashed,
//! Y bold-dashed (Graphviz has no dot-dash).

use std::collections::HashMap;
use std::fmt::Write;

use crate::cell::CellGraph;
use crate::graph::{Item, StandardGraph, StructureKind, VertexId};

fn style(kind: StructureKind) -> &'static str {
    match kind {
        StructureKind::I => "dotted",
        StructureKind::V => "dashed",
        StructureKind::Y => "dashed,bold",
    }
}

impl StandardGraph {
    /// The core tree with one pseudo-node per ray. Each edge is labeled by
    /// its two faces, left first as seen from the lower-id end.
    pub fn to_dot(&self) -> String {
        let faces = self.faces().ok();
        // Edge or ray -> style of the structure it belongs to.
        let mut styled: HashMap<(VertexId, Item), &'static str> = HashMap::new();
        for s in self.structures() {
            let st = style(s.kind);
            let r1 = self.config().succ(s.label);
            match s.kind {
                StructureKind::I => {
                    styled.insert((s.junction, Item::Ray(r1)), st);
                }
                StructureKind::V => {
                    styled.insert((s.junction, Item::Ray(r1)), st);
                    styled.insert((s.junction, Item::Ray(self.config().succ(r1))), st);
                }
                StructureKind::Y => {
                    let y = s.y_junction.expect("Y has a Y-junction");
                    for &item in self.items(y) {
                        if let Item::Ray(_) = item {
                            styled.insert((y, item), st);
                        }
                    }
                    let path = self.path(y, s.junction).unwrap_or_default();
                    for w in path.windows(2) {
                        styled.insert((w[0].min(w[1]), Item::Edge(w[0].max(w[1]))), st);
                    }
                }
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "graph stokes {{");
        let _ = writeln!(out, "  label=\"{}\";", self.config());
        let _ = writeln!(out, "  node [shape=circle, fontsize=10];");
        for v in self.vertex_ids() {
            let shape = if self.is_junction(v) { "circle" } else { "point" };
            let _ = writeln!(out, "  {v} [shape={shape}];");
        }
        for (&v, items) in self.rotations() {
            for (index, &item) in items.iter().enumerate() {
                let h = crate::graph::HalfEdge { vertex: v, index };
                let sides = faces.as_ref().map(|f| self.sides(f, h));
                let label = sides.map_or(String::new(), |(l, r)| format!("S{l}|S{r}"));
                match item {
                    Item::Edge(w) if v < w => {
                        let st = styled.get(&(v, item)).copied().unwrap_or("solid");
                        let _ = writeln!(out, "  {v} -- {w} [label=\"{label}\", style=\"{st}\"];");
                    }
                    Item::Ray(r) => {
                        let st = styled.get(&(v, item)).copied().unwrap_or("solid");
                        let _ = writeln!(out, "  r{r} [shape=plaintext, label=\"ray {r}\"];");
                        let _ = writeln!(out, "  {v} -- r{r} [label=\"{label}\", style=\"{st}\"];");
                    }
                    Item::Edge(_) => {}
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl CellGraph {
    /// Directed labeled edges; parallel pairs come out as two edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph cells {{");
        let faces: Vec<String> = self
            .face_assignment()
            .iter()
            .enumerate()
            .map(|(s, l)| format!("S{s}:{l}"))
            .collect();
        let _ = writeln!(out, "  label=\"{} faces {}\";", self.config(), faces.join(" "));
        let _ = writeln!(out, "  node [shape=point];");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  c{v} [xlabel=\"{v}\"];");
        }
        for e in self.edges() {
            let _ = writeln!(out, "  c{} -> c{} [label=\"{}\", colorscheme=set19, color={}];", e.from, e.to, e.label, e.label % 9 + 1);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::SectorConfig;

    #[test]
    fn star_has_one_node_and_six_rays() {
        let g = StandardGraph::star(SectorConfig::new(6, [0, 3]).unwrap());
        let dot = g.to_dot();
        assert_eq!(dot.matches("shape=circle]").count(), 1);
        assert_eq!(dot.matches("shape=plaintext").count(), 6);
        // I at labels 1 and 4, V at 2 and 5
        assert_eq!(dot.matches("style=\"dotted\"").count(), 2);
        assert_eq!(dot.matches("style=\"dashed\"").count(), 4);
    }

    #[test]
    fn double_edges_render_twice() {
        let g = StandardGraph::star(SectorConfig::new(6, [0, 3]).unwrap());
        let cg = g.to_cell_graph(1).unwrap();
        let t = cg.ray_tails()[2][0];
        let dot = cg.to_dot();
        assert!(dot.contains(&format!("c0 -> c{t} ")));
        assert!(dot.contains(&format!("c{t} -> c0 ")));
    }
}

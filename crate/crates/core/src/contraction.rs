//! Contraction of standard graphs to canonical forms. Every routine
//! returns the resulting graph together with a word of squared actions
//! that produces it from the input.

use crate::action::{BraidWord, Sign};
use crate::error::{Error, Result};
use crate::graph::{HalfEdge, Item, StandardGraph, Structure, StructureKind, VertexId};

/// A graph together with the word that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub word: BraidWord,
    pub graph: StandardGraph,
}

impl Contraction {
    fn start(g: &StandardGraph) -> Self {
        Contraction { word: BraidWord::new(), graph: g.clone() }
    }

    fn act(&mut self, j: usize, sign: Sign) -> Result<()> {
        self.graph = self.graph.act_squared(j, sign)?;
        self.word.push_squared(j, sign);
        Ok(())
    }

    fn structure(&self, j: usize) -> Result<Structure> {
        self.graph
            .find_structure(j)?
            .ok_or_else(|| Error::Precondition(format!("no structure at label {j}")))
    }

    /// Moves the structure at `j` one vertex at a time until its junction
    /// is `target`.
    fn shuttle(&mut self, j: usize, target: VertexId) -> Result<()> {
        let limit = self.graph.vertex_count() + 2;
        for _ in 0..limit {
            let s = self.structure(j)?;
            if s.junction == target {
                return Ok(());
            }
            let path = self
                .graph
                .path(s.junction, target)
                .ok_or(Error::UnknownVertex(target))?;
            let sign = self.graph.step_sign(&s, path[1]).ok_or_else(|| {
                Error::Precondition(format!("structure at label {j} cannot move toward {target}"))
            })?;
            self.act(j, sign)?;
        }
        Err(Error::Precondition(format!("structure at label {j} did not reach {target}")))
    }
}

impl StandardGraph {
    /// The sign of the squared action that moves `s` to its neighbour
    /// `next`, if `next` lies beside the structure.
    pub(crate) fn step_sign(&self, s: &Structure, next: VertexId) -> Option<Sign> {
        let (start, len) = self.structure_block(s);
        let d = self.degree(s.junction);
        let at = |index: usize| self.item(HalfEdge { vertex: s.junction, index: index % d });
        if at(start.index + d - 1) == Item::Edge(next) {
            Some(Sign::Plus)
        } else if at(start.index + len) == Item::Edge(next) {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    /// The junction kept fixed by [`StandardGraph::to_ivy`]: the non-Y
    /// junction nearest the vertex carrying ray 0, ties broken by id.
    pub fn ivy_root(&self) -> Option<VertexId> {
        let dist = self.distances(self.attach(0)?);
        let ys = self.y_junctions();
        self.junctions()
            .into_iter()
            .filter(|v| !ys.contains(v))
            .min_by_key(|v| (dist[v], *v))
    }

    fn structure_at(&self, u0: VertexId, j: usize) -> Result<Structure> {
        match self.find_structure(j)? {
            Some(s) if s.junction == u0 => Ok(s),
            Some(s) => Err(Error::Precondition(format!(
                "the {} structure at label {j} sits on {}, not {u0}",
                s.kind, s.junction
            ))),
            None => Err(Error::Precondition(format!("no structure at label {j}"))),
        }
    }

    /// Reduces to ivy form by pulling the far junction toward the root.
    /// Also returns the metric `|Γ|_{u0}` before each step and at the end.
    pub fn to_ivy_traced(&self) -> Result<(Contraction, Vec<usize>)> {
        let mut c = Contraction::start(self);
        let u0 = self.ivy_root().ok_or_else(|| Error::InvalidGraph("no junction".into()))?;
        let mut trace = vec![self.u_metric(u0)?];
        loop {
            let g = &c.graph;
            let ys = g.y_junctions();
            let dist = g.distances(u0);
            let Some(u1) = g
                .junctions()
                .into_iter()
                .filter(|v| *v != u0 && !ys.contains(v))
                .max_by_key(|v| (dist[v], std::cmp::Reverse(*v)))
            else {
                break;
            };
            let path = g.path(u1, u0).expect("tree is connected");
            let v = path[1];
            let h = HalfEdge { vertex: u1, index: g.position(u1, Item::Edge(v)).expect("adjacent") };
            let faces = g.faces()?;
            let (left, right) = g.sides(&faces, h);
            let cfg = g.config();
            let candidates = [
                (cfg.is_dominant(left), left, Sign::Plus),
                (cfg.is_dominant(right), cfg.prev_dominant(right), Sign::Minus),
            ];
            let mut moved = false;
            for (ok, j, sign) in candidates {
                if !ok {
                    continue;
                }
                match g.find_structure(j)? {
                    Some(s) if s.junction == u1 && g.step_sign(&s, v) == Some(sign) => {
                        c.act(j, sign)?;
                        moved = true;
                        break;
                    }
                    _ => {}
                }
            }
            if !moved {
                return Err(Error::InvalidGraph(format!("no structure at {u1} moves toward {u0}")));
            }
            let m = c.graph.u_metric(u0)?;
            if m >= *trace.last().expect("nonempty") {
                return Err(Error::InvalidGraph(format!("metric did not decrease at {u1}")));
            }
            trace.push(m);
        }
        Ok((c, trace))
    }

    pub fn to_ivy(&self) -> Result<Contraction> {
        self.to_ivy_traced().map(|(c, _)| c)
    }

    /// Swaps adjacent Y and V structures at labels `j₋` and `j` on `u0`.
    /// If `u0` carries nothing else but one ray, it is absorbed once the V
    /// leaves, and the Y-junction becomes the only junction instead.
    pub fn exchange_yv(&self, u0: VertexId, j: usize) -> Result<Contraction> {
        let jm = self.config().prev_dominant(j);
        let (a, b) = (self.structure_at(u0, jm)?, self.structure_at(u0, j)?);
        let (y, v) = match (a.kind, b.kind) {
            (StructureKind::Y, StructureKind::V) => (a, b),
            (StructureKind::V, StructureKind::Y) => (b, a),
            _ => {
                return Err(Error::Precondition(format!(
                    "labels {jm} and {j} carry {} and {}, not Y and V",
                    a.kind, b.kind
                )))
            }
        };
        let mut c = Contraction::start(self);
        c.shuttle(v.label, y.y_junction.expect("Y has a Y-junction"))?;
        if c.graph.contains(u0) {
            c.shuttle(y.label, u0)?;
        }
        Ok(c)
    }

    /// Turns the Y structure beside an I structure (labels `j₋`, `j` on
    /// `u0`) into a V structure, removing its Y-junction.
    pub fn y_to_v_with_i(&self, u0: VertexId, j: usize) -> Result<Contraction> {
        let jm = self.config().prev_dominant(j);
        let (a, b) = (self.structure_at(u0, jm)?, self.structure_at(u0, j)?);
        let (i, y) = match (a.kind, b.kind) {
            (StructureKind::I, StructureKind::Y) => (a, b),
            (StructureKind::Y, StructureKind::I) => (b, a),
            _ => {
                return Err(Error::Precondition(format!(
                    "labels {jm} and {j} carry {} and {}, not I and Y",
                    a.kind, b.kind
                )))
            }
        };
        let mut c = Contraction::start(self);
        c.shuttle(i.label, y.y_junction.expect("Y has a Y-junction"))?;
        c.shuttle(y.label, u0)?;
        Ok(c)
    }

    /// Merges two Y structures at labels `j₋` and `j` on `u0` into a V and
    /// a single Y whose stem is the sum of both stems.
    pub fn merge_yy(&self, u0: VertexId, j: usize) -> Result<Contraction> {
        let jm = self.config().prev_dominant(j);
        let (a, b) = (self.structure_at(u0, jm)?, self.structure_at(u0, j)?);
        if a.kind != StructureKind::Y || b.kind != StructureKind::Y {
            return Err(Error::Precondition(format!(
                "labels {jm} and {j} carry {} and {}, not two Y",
                a.kind, b.kind
            )));
        }
        let mut c = Contraction::start(self);
        c.shuttle(j, a.y_junction.expect("Y has a Y-junction"))?;
        // With a single ray left beside the first stem, u0 dissolves into
        // the stem and the junction count has already dropped.
        if c.graph.contains(u0) {
            c.shuttle(jm, u0)?;
        }
        Ok(c)
    }

    /// Contracts to the one-junction graph. Needs two adjacent dominant
    /// faces.
    pub fn to_single_junction(&self) -> Result<Contraction> {
        if !self.config().has_adjacent_dominant() {
            return Err(Error::Precondition("no adjacent dominant pair".into()));
        }
        let mut c = self.to_ivy()?;
        loop {
            let u0 = c.graph.ivy_root().expect("ivy graph has a root");
            let kinds = kinds_around(&c.graph);
            let n = kinds.len();
            if kinds.iter().all(|(_, k)| *k != StructureKind::Y) {
                break;
            }
            // The first Y after some I, looking past V structures.
            let (i_pos, y_pos) = (0..n)
                .filter(|&p| kinds[p].1 == StructureKind::I)
                .find_map(|p| {
                    let q = (1..n).map(|d| (p + d) % n).find(|&q| kinds[q].1 != StructureKind::V)?;
                    (kinds[q].1 == StructureKind::Y).then_some((p, q))
                })
                .expect("some I is followed by a Y");
            let step = if (y_pos + n - 1) % n == i_pos {
                c.graph.y_to_v_with_i(u0, kinds[y_pos].0)?
            } else {
                c.graph.exchange_yv(u0, kinds[y_pos].0)?
            };
            c.word.extend(&step.word);
            c.graph = step.graph;
        }
        Ok(c)
    }

    /// Contracts a graph without adjacent dominant faces to ivy form with
    /// at most one Y structure, placed at the smallest dominant label.
    pub fn to_one_y(&self) -> Result<Contraction> {
        if self.config().has_adjacent_dominant() {
            return Err(Error::Precondition("two dominant faces are adjacent".into()));
        }
        let mut c = self.to_ivy()?;
        loop {
            let u0 = c.graph.ivy_root().expect("ivy graph has a root");
            let kinds = kinds_around(&c.graph);
            let n = kinds.len();
            let ys: Vec<usize> = (0..n).filter(|&p| kinds[p].1 == StructureKind::Y).collect();
            if ys.len() <= 1 {
                break;
            }
            // Bring the second Y back next to the first, then merge.
            let q = ys[1];
            let step = if (q + n - 1) % n == ys[0] {
                c.graph.merge_yy(u0, kinds[q].0)?
            } else {
                c.graph.exchange_yv(u0, kinds[q].0)?
            };
            c.word.extend(&step.word);
            c.graph = step.graph;
        }
        let kinds = kinds_around(&c.graph);
        if let Some(mut q) = kinds.iter().position(|(_, k)| *k == StructureKind::Y) {
            let u0 = c.graph.ivy_root().expect("ivy graph has a root");
            while q != 0 {
                let step = c.graph.exchange_yv(u0, kinds[q].0)?;
                c.word.extend(&step.word);
                c.graph = step.graph;
                q -= 1;
            }
        }
        Ok(c)
    }
}

/// Structure kinds by increasing dominant label. In ivy form every
/// dominant label has a structure on the root.
fn kinds_around(g: &StandardGraph) -> Vec<(usize, StructureKind)> {
    g.config()
        .dominant()
        .into_iter()
        .map(|j| {
            let s = g.find_structure(j).ok().flatten().expect("ivy form has every structure");
            (j, s.kind)
        })
        .collect()
}

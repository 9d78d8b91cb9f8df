//! Braid actions on cell graphs and standard graphs.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cell::{CellGraph, LabeledEdge};
use crate::error::{Error, Result};
use crate::graph::{HalfEdge, Item, StandardGraph, StructureKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn inverse(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A word in the generators `A_j`, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord(pub Vec<(usize, i32)>);

impl BraidWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, label: usize, exponent: i32) {
        self.0.push((label, exponent));
    }

    pub fn push_squared(&mut self, label: usize, sign: Sign) {
        self.push(label, 2 * sign.value());
    }

    pub fn extend(&mut self, other: &BraidWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.0
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|&(j, e)| (j, -e)).collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (j, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}^{e:+}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `1^+2,3^-2`. Whitespace is ignored; an empty string is the
    /// empty word.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Ok(BraidWord(out));
        }
        for (i, tok) in s.split(',').enumerate() {
            let (j, e) = tok
                .split_once('^')
                .ok_or_else(|| Error::parse(1, format!("letter {}", i + 1), format!("expected j^e, got {tok:?}")))?;
            let j: usize = j
                .parse()
                .map_err(|_| Error::parse(1, format!("letter {}", i + 1), format!("bad label {j:?}")))?;
            let e: i32 = e
                .parse()
                .map_err(|_| Error::parse(1, format!("letter {}", i + 1), format!("bad exponent {e:?}")))?;
            if e == 0 {
                return Err(Error::parse(1, format!("letter {}", i + 1), "zero exponent"));
            }
            out.push((j, e));
        }
        Ok(BraidWord(out))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Real(usize),
    /// The periodic continuation beyond the frontier of a ray, at a
    /// depth in `1..=GHOST_DEPTH`.
    Ghost(usize, usize),
}

/// A three-step walk never needs more of the periodic tail than this.
const GHOST_DEPTH: usize = 3;

struct Walker {
    out: HashMap<(Node, usize), Node>,
    inn: HashMap<(Node, usize), Node>,
    /// Labels leaving (resp. entering) the deepest ghost towards infinity.
    out_far: HashSet<(usize, usize)>,
    in_far: HashSet<(usize, usize)>,
}

impl Walker {
    fn new(cg: &CellGraph, edges: &[LabeledEdge], faces: &[usize]) -> Self {
        let mut w = Walker {
            out: HashMap::new(),
            inn: HashMap::new(),
            out_far: HashSet::new(),
            in_far: HashSet::new(),
        };
        let link = |w: &mut Walker, a: Node, b: Node, l: usize| {
            w.out.insert((a, l), b);
            w.inn.insert((b, l), a);
        };
        for e in edges {
            link(&mut w, Node::Real(e.from), Node::Real(e.to), e.label);
        }
        for r in 0..cg.config().n() {
            let (o, i) = cg.far_field(faces, r);
            let mut prev = Node::Real(cg.frontier(r));
            for d in 1..=GHOST_DEPTH {
                let ghost = Node::Ghost(r, d);
                if let Some(l) = o {
                    link(&mut w, prev, ghost, l);
                }
                if let Some(l) = i {
                    link(&mut w, ghost, prev, l);
                }
                prev = ghost;
            }
            if let Some(l) = o {
                w.out_far.insert((r, l));
            }
            if let Some(l) = i {
                w.in_far.insert((r, l));
            }
        }
        w
    }

    fn step(&self, at: Node, label: usize, forward: bool) -> Result<Node> {
        let map = if forward { &self.out } else { &self.inn };
        if let Some(&next) = map.get(&(at, label)) {
            return Ok(next);
        }
        if let Node::Ghost(r, GHOST_DEPTH) = at {
            let far = if forward { &self.out_far } else { &self.in_far };
            if far.contains(&(r, label)) {
                return Err(Error::TruncationUnderflow { vertex: usize::MAX, ray: r });
            }
        }
        Ok(at)
    }
}

impl CellGraph {
    /// The basic action `A_j^{±1}`. Labels `j` and `j₊` trade places in
    /// the face assignment and on the edges; then the `j₊`-edges (for
    /// `+1`) or the `j`-edges (for `-1`) are rebuilt by a three-step walk.
    pub fn act_basic(&self, j: usize, sign: Sign) -> Result<CellGraph> {
        let cfg = self.config();
        cfg.require_dominant(j)?;
        let p = cfg.next_dominant(j);
        let swap = |l: usize| if l == j { p } else if l == p { j } else { l };
        let faces: Vec<usize> = self.face_assignment().iter().map(|&l| swap(l)).collect();
        let edges: Vec<LabeledEdge> = self
            .edges()
            .iter()
            .map(|e| LabeledEdge { label: swap(e.label), ..*e })
            .collect();
        let walker = Walker::new(self, &edges, &faces);
        // (rebuilt label, walk as (label, forward) steps)
        let (rebuilt, walk) = match sign {
            Sign::Plus => (p, [(j, false), (p, true), (j, true)]),
            Sign::Minus => (j, [(p, true), (j, true), (p, false)]),
        };
        let mut next: Vec<LabeledEdge> = edges.iter().copied().filter(|e| e.label != rebuilt).collect();
        let run = |from: Node, v: usize| -> Result<Node> {
            let mut at = from;
            for &(l, fwd) in &walk {
                at = walker.step(at, l, fwd).map_err(|e| with_vertex(e, v))?;
            }
            Ok(at)
        };
        let mut reached_far = HashSet::new();
        for v in 0..self.vertex_count() {
            match run(Node::Real(v), v)? {
                Node::Real(w) if w == v => {}
                Node::Real(w) => next.push(LabeledEdge { from: v, to: w, label: rebuilt }),
                Node::Ghost(r, d) => {
                    if d != 1 || v != self.frontier(r) || !walker.out_far.contains(&(r, rebuilt)) {
                        return Err(Error::TruncationUnderflow { vertex: v, ray: r });
                    }
                    reached_far.insert(r);
                }
            }
        }
        // The rebuilt edges must continue the far field unchanged.
        for r in 0..cfg.n() {
            let f = self.frontier(r);
            if walker.out_far.contains(&(r, rebuilt)) && !reached_far.contains(&r) {
                return Err(Error::TruncationUnderflow { vertex: f, ray: r });
            }
            if walker.in_far.contains(&(r, rebuilt)) && run(Node::Ghost(r, 1), f)? != Node::Real(f) {
                return Err(Error::TruncationUnderflow { vertex: f, ray: r });
            }
        }
        next.sort();
        Ok(CellGraph {
            config: cfg.clone(),
            vertex_count: self.vertex_count(),
            core_count: self.core_count(),
            edges: next,
            face_assignment: faces,
            window: self.window(),
            ray_tails: self.ray_tails().to_vec(),
        })
    }

    pub fn act_word(&self, word: &BraidWord) -> Result<CellGraph> {
        let mut cg = self.clone();
        for &(j, e) in word.letters() {
            let sign = if e > 0 { Sign::Plus } else { Sign::Minus };
            for _ in 0..e.unsigned_abs() {
                cg = cg.act_basic(j, sign)?;
            }
        }
        Ok(cg)
    }
}

fn with_vertex(e: Error, v: usize) -> Error {
    match e {
        Error::TruncationUnderflow { ray, .. } => Error::TruncationUnderflow { vertex: v, ray },
        other => other,
    }
}

impl StandardGraph {
    /// The squared action `A_j^{±2}` as a local move of the structure at
    /// `j`. The structure's items leave their junction and re-attach at
    /// the neighbour across the adjacent dominant face: clockwise for `+`,
    /// counterclockwise for `-`. Without a structure the graph is fixed.
    pub fn act_squared(&self, j: usize, sign: Sign) -> Result<StandardGraph> {
        self.config().require_dominant(j)?;
        let Some(s) = self.find_structure(j)? else {
            return Ok(self.clone());
        };
        let u = s.junction;
        let (start, len) = self.structure_block(&s);
        let d = self.degree(u);
        let block: Vec<Item> = (0..len)
            .map(|k| self.item(HalfEdge { vertex: u, index: (start.index + k) % d }))
            .collect();
        let beside = match sign {
            Sign::Plus => (start.index + d - 1) % d,
            Sign::Minus => (start.index + len) % d,
        };
        let mut out = self.clone();
        let w = match self.item(HalfEdge { vertex: u, index: beside }) {
            Item::Edge(w) => w,
            Item::Ray(r) => out.materialize_on_ray(u, r),
        };
        let at = out.position(w, Item::Edge(u)).expect("neighbour links back");
        let at = match sign {
            Sign::Plus => at,
            Sign::Minus => at + 1,
        };
        out.items_mut(w).splice(at..at, block.iter().copied());
        out.items_mut(u).retain(|x| !block.contains(x));
        if s.kind == StructureKind::Y {
            let Item::Edge(stem) = block[0] else { unreachable!() };
            out.redirect(stem, u, w);
        }
        out.normalize_from(u);
        Ok(out)
    }

    /// Applies a word of squared generators. Odd exponents are rejected.
    pub fn apply_word(&self, word: &BraidWord) -> Result<StandardGraph> {
        let mut g = self.clone();
        for &(j, e) in word.letters() {
            if e % 2 != 0 {
                return Err(Error::OddExponent { label: j, exponent: e });
            }
            let sign = if e > 0 { Sign::Plus } else { Sign::Minus };
            for _ in 0..e.unsigned_abs() / 2 {
                g = g.act_squared(j, sign)?;
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::SectorConfig;

    fn star(n: usize, sub: &[usize]) -> StandardGraph {
        StandardGraph::star(SectorConfig::new(n, sub.iter().copied()).unwrap())
    }

    #[test]
    fn word_round_trips_through_text() {
        let w: BraidWord = "1^+2, 4^-2,2^+1".parse().unwrap();
        assert_eq!(w.letters(), &[(1, 2), (4, -2), (2, 1)]);
        assert_eq!(w.to_string(), "1^+2,4^-2,2^+1");
        assert!("1^0".parse::<BraidWord>().is_err());
        assert!("x^2".parse::<BraidWord>().is_err());
    }

    #[test]
    fn odd_exponent_is_rejected() {
        let g = star(6, &[0, 3]);
        let w: BraidWord = "1^+1".parse().unwrap();
        assert!(matches!(g.apply_word(&w), Err(Error::OddExponent { .. })));
    }

    #[test]
    fn squared_move_is_invertible_on_star() {
        let g = star(6, &[0, 3]);
        let h = g.act_squared(1, Sign::Plus).unwrap();
        assert!(h.is_valid(), "{:?}", h.validate());
        assert_eq!(h.vertex_count(), 2);
        let back = h.act_squared(1, Sign::Minus).unwrap();
        assert!(back.equals(&g));
    }

    #[test]
    fn basic_moves_are_inverse() {
        let cg = star(6, &[0, 3]).to_cell_graph(3).unwrap();
        for j in [1, 2, 4, 5] {
            let there = cg.act_basic(j, Sign::Plus).unwrap();
            assert_eq!(there.act_basic(j, Sign::Minus).unwrap(), cg);
        }
    }
}

//! Finite universes: chord diagrams, junction trees and standard graphs
//! of bounded size.
//!
//! Polygon vertex `i` stands for sector `S_i`, and the polygon side from
//! `i-1` to `i` for ray `i`. A chord `{a, b}` is a tree edge (or chain)
//! separating `S_a` from `S_b`; the regions cut out by the chords are the
//! junctions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::config::SectorConfig;
use crate::error::{Error, Result};
use crate::graph::{Item, StandardGraph, VertexId};

/// Small Schröder numbers 1, 1, 3, 11, 45, 197, ...
pub fn schroeder(k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    // Large Schröder numbers, S(n) = S(n-1) + Σ S(i) S(n-1-i); s(k) = S(k)/2.
    let mut large = vec![1u128];
    for n in 1..=k {
        let conv: u128 = (0..n).map(|i| large[i] * large[n - 1 - i]).sum();
        large.push(large[n - 1] + conv);
    }
    large[k] / 2
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChordDiagram {
    pub m: usize,
    pub chords: BTreeSet<(usize, usize)>,
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl ChordDiagram {
    pub fn new(m: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let d = ChordDiagram {
            m,
            chords: chords.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect(),
        };
        match d.problems(None).into_iter().next() {
            None => Ok(d),
            Some(p) => Err(Error::InvalidGraph(p)),
        }
    }

    /// Broken invariants; with a config, chords between two subdominant
    /// sectors are reported too.
    pub fn problems(&self, config: Option<&SectorConfig>) -> Vec<String> {
        let mut out = Vec::new();
        let chords: Vec<_> = self.chords.iter().copied().collect();
        for (i, &(a, b)) in chords.iter().enumerate() {
            if b >= self.m || b - a < 2 || (a == 0 && b == self.m - 1) {
                out.push(format!("chord {{{a},{b}}} is a side or out of range"));
            }
            if let Some(cfg) = config {
                if cfg.is_subdominant(a) && cfg.is_subdominant(b) {
                    out.push(format!("chord {{{a},{b}}} joins two subdominant sectors"));
                }
            }
            for &other in &chords[i + 1..] {
                if crosses((a, b), other) {
                    out.push(format!("chords {{{a},{b}}} and {{{},{}}} cross", other.0, other.1));
                }
            }
        }
        out
    }

    /// The regions cut out by the chords, each as its sorted polygon
    /// vertices.
    pub fn regions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![((0..self.m).collect::<Vec<_>>(), self.chords.iter().copied().collect::<Vec<_>>())];
        while let Some((poly, chords)) = stack.pop() {
            let Some((&(a, b), rest)) = chords.split_first() else {
                out.push(poly);
                continue;
            };
            let inner: Vec<usize> = poly.iter().copied().filter(|&v| a <= v && v <= b).collect();
            let outer: Vec<usize> = poly.iter().copied().filter(|&v| v <= a || b <= v).collect();
            let (mut ci, mut co) = (Vec::new(), Vec::new());
            for &(c, d) in rest {
                if a <= c && d <= b {
                    ci.push((c, d));
                } else {
                    co.push((c, d));
                }
            }
            stack.push((inner, ci));
            stack.push((outer, co));
        }
        out.sort();
        out
    }

    /// Realizes the diagram as a standard graph, replacing chord `c` by a
    /// chain of `lengths[c]` edges (chords in sorted order).
    pub fn to_standard_graph(&self, config: &SectorConfig, lengths: &[usize]) -> Result<StandardGraph> {
        let n = config.n();
        if self.m != n || lengths.len() != self.chords.len() || lengths.contains(&0) {
            return Err(Error::Precondition("diagram, config and chain lengths disagree".into()));
        }
        let regions = self.regions();
        let mut vertices: BTreeMap<VertexId, Vec<Item>> = BTreeMap::new();
        let mut next = regions.len() as u32;
        // Interior chain vertices of each chord.
        let mut chains: BTreeMap<(usize, usize), Vec<VertexId>> = BTreeMap::new();
        for (&chord, &len) in self.chords.iter().zip(lengths) {
            chains.insert(chord, (0..len - 1).map(|k| VertexId(next + k as u32)).collect());
            next += len as u32 - 1;
        }
        let mut touching: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (ri, poly) in regions.iter().enumerate() {
            let k = poly.len();
            for i in 0..k {
                let (a, b) = (poly[i], poly[(i + 1) % k]);
                if (a + 1) % n != b {
                    touching.entry((a.min(b), a.max(b))).or_default().push(ri);
                }
            }
        }
        // Each chord runs region r0 - chain - region r1.
        let mut link: BTreeMap<(usize, (usize, usize)), VertexId> = BTreeMap::new();
        for (chord, rs) in &touching {
            let [r0, r1] = rs[..] else {
                return Err(Error::InvalidGraph(format!("chord {chord:?} is not shared by two regions")));
            };
            let path: Vec<VertexId> = std::iter::once(VertexId(r0 as u32))
                .chain(chains[chord].iter().copied())
                .chain(std::iter::once(VertexId(r1 as u32)))
                .collect();
            link.insert((r0, *chord), path[1]);
            link.insert((r1, *chord), path[path.len() - 2]);
            for w in path.windows(3) {
                vertices.insert(w[1], vec![Item::Edge(w[0]), Item::Edge(w[2])]);
            }
        }
        for (ri, poly) in regions.iter().enumerate() {
            let k = poly.len();
            let items = (0..k)
                .map(|i| {
                    let (a, b) = (poly[i], poly[(i + 1) % k]);
                    if (a + 1) % n == b {
                        Item::Ray(b)
                    } else {
                        Item::Edge(link[&(ri, (a.min(b), a.max(b)))])
                    }
                })
                .collect();
            vertices.insert(VertexId(ri as u32), items);
        }
        Ok(StandardGraph::from_rotations(config.clone(), vertices))
    }
}

/// All non-crossing diagrams of chords between non-adjacent vertices of
/// an `m`-gon, in lexicographic order of their sorted chord lists.
pub fn enum_chord_diagrams(m: usize) -> Vec<ChordDiagram> {
    let diagonals: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| ((a + 2)..m).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == m - 1))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        m: usize,
        diagonals: &[(usize, usize)],
        from: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<ChordDiagram>,
    ) {
        out.push(ChordDiagram { m, chords: chosen.iter().copied().collect() });
        for i in from..diagonals.len() {
            let d = diagonals[i];
            if chosen.iter().all(|&c| !crosses(c, d)) {
                chosen.push(d);
                go(m, diagonals, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    go(m, &diagonals, 0, &mut chosen, &mut out);
    out.sort();
    out
}

/// Chord diagrams dual to junction trees of standard graphs: no chord
/// joins two subdominant sectors.
pub fn enum_junction_trees(config: &SectorConfig) -> Vec<ChordDiagram> {
    enum_chord_diagrams(config.n())
        .into_iter()
        .filter(|d| d.chords.iter().all(|&(a, b)| !(config.is_subdominant(a) && config.is_subdominant(b))))
        .collect()
}

/// Every normalized standard graph whose chains have between 1 and
/// `max_chain` edges. With `max_chain = 0` only the one-junction graph
/// remains.
pub fn enum_standard_graphs(config: &SectorConfig, max_chain: usize) -> Vec<StandardGraph> {
    let mut out = Vec::new();
    for d in enum_junction_trees(config) {
        let c = d.chords.len();
        if c > 0 && max_chain == 0 {
            continue;
        }
        let mut lengths = vec![1; c];
        loop {
            out.push(d.to_standard_graph(config, &lengths).expect("diagram realizes"));
            // Odometer over 1..=max_chain.
            let Some(i) = lengths.iter().position(|&l| l < max_chain) else { break };
            lengths[i] += 1;
            lengths[..i].iter_mut().for_each(|l| *l = 1);
        }
    }
    out
}

impl StandardGraph {
    /// The chord diagram of the junction tree: one chord per chain.
    pub fn junction_tree(&self) -> Result<ChordDiagram> {
        let faces = self.faces()?;
        let chords = self
            .core_edges()
            .into_iter()
            .map(|h| {
                let (l, r) = self.sides(&faces, h);
                (l.min(r), l.max(r))
            })
            .collect();
        Ok(ChordDiagram { m: self.n(), chords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schroeder_prefix() {
        let got: Vec<u128> = (0..6).map(schroeder).collect();
        assert_eq!(got, vec![1, 1, 3, 11, 45, 197]);
    }

    #[test]
    fn regions_of_a_triangulated_hexagon() {
        let d = ChordDiagram::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap();
        assert_eq!(d.regions(), vec![vec![0, 1, 2], vec![0, 2, 4], vec![0, 4, 5], vec![2, 3, 4]]);
    }

    #[test]
    fn crossing_chords_are_rejected() {
        assert!(ChordDiagram::new(6, [(0, 3), (1, 4)]).is_err());
        assert!(ChordDiagram::new(6, [(0, 1)]).is_err());
    }
}

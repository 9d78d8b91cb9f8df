//! Orbits of the squared actions and their classification.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::action::Sign;
use crate::config::SectorConfig;
use crate::contraction::Contraction;
use crate::enumeration::enum_standard_graphs;
use crate::error::{Error, Result};
use crate::graph::StandardGraph;

/// Breadth-first closure of `g` under all `A_j^{±2}`, dropping graphs
/// with a chain longer than `max_chain`. Returns canonical strings.
pub fn orbit_bfs(g: &StandardGraph, max_chain: usize) -> BTreeSet<String> {
    let dominant = g.config().dominant();
    let mut seen = BTreeSet::from([g.canonical_string()]);
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(h) = queue.pop_front() {
        for &j in &dominant {
            for sign in [Sign::Plus, Sign::Minus] {
                let next = h.act_squared(j, sign).expect("dominant label");
                if next.max_chain() <= max_chain && seen.insert(next.canonical_string()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// The canonical contraction of `g`: to one junction when two dominant
/// faces are adjacent, otherwise to ivy form with at most one Y.
pub fn canonical_contraction(g: &StandardGraph) -> Result<Contraction> {
    if g.config().has_adjacent_dominant() {
        g.to_single_junction()
    } else {
        g.to_one_y()
    }
}

/// Largest core met while replaying a contraction word.
pub fn peak_core_size(g: &StandardGraph, c: &Contraction) -> Result<usize> {
    let mut h = g.clone();
    let mut peak = h.vertex_count();
    for &(j, e) in c.word.letters() {
        let sign = if e > 0 { Sign::Plus } else { Sign::Minus };
        for _ in 0..e.unsigned_abs() / 2 {
            h = h.act_squared(j, sign)?;
            peak = peak.max(h.vertex_count());
        }
    }
    Ok(peak)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// Canonical string of the common contraction form.
    pub key: String,
    /// Bounded-face count, for configs without adjacent dominant faces.
    pub bounded_faces: Option<usize>,
    pub size: usize,
    /// The smallest member by canonical string.
    pub representative: String,
    pub members: Vec<String>,
    /// Largest core met while contracting any member.
    pub peak_core: usize,
}

impl Component {
    pub fn report_line(&self) -> String {
        let k = self.bounded_faces.map_or("-".to_string(), |k| k.to_string());
        format!(
            "k={k} size={} peak_core={} key={} rep={}",
            self.size, self.peak_core, self.key, self.representative
        )
    }
}

/// Partitions the enumerated graphs by their canonical contraction form.
pub fn classify_components(config: &SectorConfig, max_chain: usize) -> Result<Vec<Component>> {
    classify(&enum_standard_graphs(config, max_chain))
}

pub fn classify(graphs: &[StandardGraph]) -> Result<Vec<Component>> {
    let mut classes: BTreeMap<String, Component> = BTreeMap::new();
    for g in graphs {
        let c = canonical_contraction(g)?;
        let peak = peak_core_size(g, &c)?;
        let key = c.graph.canonical_string();
        let bounded = (!g.config().has_adjacent_dominant()).then(|| g.bounded_face_count());
        let entry = classes.entry(key.clone()).or_insert_with(|| Component {
            key,
            bounded_faces: bounded,
            size: 0,
            representative: String::new(),
            members: Vec::new(),
            peak_core: 0,
        });
        entry.size += 1;
        entry.members.push(g.canonical_string());
        entry.peak_core = entry.peak_core.max(peak);
    }
    let mut out: Vec<Component> = classes
        .into_values()
        .map(|mut c| {
            c.members.sort();
            c.representative = c.members[0].clone();
            c
        })
        .collect();
    out.sort_by(|a, b| (a.bounded_faces, &a.key).cmp(&(b.bounded_faces, &b.key)));
    Ok(out)
}

/// Number of zeros of the eigenfunction attached to `g`, which is its
/// bounded-face count. Defined for alternating configurations only.
pub fn zeros_of_eigenfunction(g: &StandardGraph) -> Result<usize> {
    if !g.config().is_alternating() {
        return Err(Error::Precondition(format!(
            "{} does not alternate subdominant sectors",
            g.config()
        )));
    }
    Ok(g.bounded_face_count())
}

//! Self-checks behind `stokes verify`: one suite per acceptance
//! criterion, each returning a machine-readable report.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use crate::action::{BraidWord, Sign};
use crate::config::SectorConfig;
use crate::enumeration::{enum_chord_diagrams, enum_junction_trees, enum_standard_graphs, schroeder};
use crate::error::{Error, Result};
use crate::graph::StandardGraph;
use crate::io::{from_text, to_text};
use crate::loops::{verify_commutation, LoopSystem};
use crate::orbits::classify;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn line(&self) -> String {
        format!(
            "criterion {} {:<12} {} ({} checks, {} failures, {:.2}s)",
            self.criterion,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks,
            self.failures.len(),
            self.seconds
        )
    }
}

pub const SUITES: [&str; 6] = ["schroeder", "oracle", "contraction", "components", "loops", "corpus"];

/// Graph corpora shared by the action and contraction suites.
pub fn oracle_configs() -> Vec<SectorConfig> {
    [(5, vec![0, 2]), (6, vec![0, 3]), (6, vec![0, 2, 4])]
        .into_iter()
        .map(|(n, s)| SectorConfig::new(n, s).expect("valid config"))
        .collect()
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 50 {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.check(false, || what);
    }
}

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let start = Instant::now();
    let (criterion, name, tally): (u8, &'static str, Tally) = match name {
        "schroeder" => (1, "schroeder", schroeder_suite()),
        "oracle" => (2, "oracle", oracle_suite()),
        "contraction" => (3, "contraction", contraction_suite()),
        "components" => (4, "components", components_suite()),
        "loops" => (5, "loops", loops_suite()),
        "corpus" => (6, "corpus", corpus_suite()),
        other => return Err(Error::Precondition(format!("unknown suite {other:?}"))),
    };
    Ok(SuiteReport {
        criterion,
        name,
        passed: tally.failures.is_empty(),
        checks: tally.checks,
        failures: tally.failures,
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn schroeder_suite() -> Tally {
    let mut t = Tally::new();
    // An m-gon has s(m-2) dissections, so the listed prefix sits at m = 3..7.
    for (m, want) in [(3, 1), (4, 3), (5, 11), (6, 45), (7, 197), (8, 903), (9, 4279)] {
        let got = enum_chord_diagrams(m).len() as u128;
        t.check(got == want, || format!("m={m}: {got} diagrams, expected {want}"));
        t.check(schroeder(m - 2) == want, || format!("s({}) = {}", m - 2, schroeder(m - 2)));
    }
    t
}

/// `A_j^2` through the cell graph, growing the window from 3 on underflow.
pub fn squared_via_cells(g: &StandardGraph, j: usize, sign: Sign) -> Result<StandardGraph> {
    let mut window = 3;
    loop {
        let cg = g.to_cell_graph(window)?;
        match cg.act_basic(j, sign).and_then(|c| c.act_basic(j, sign)) {
            Ok(twice) => return twice.to_standard(),
            Err(Error::TruncationUnderflow { .. }) if window < 64 => window *= 2,
            Err(e) => return Err(e),
        }
    }
}

fn oracle_suite() -> Tally {
    let mut t = Tally::new();
    for cfg in oracle_configs() {
        for g in enum_standard_graphs(&cfg, 1) {
            for j in cfg.dominant() {
                let has = matches!(g.find_structure(j), Ok(Some(_)));
                for sign in [Sign::Plus, Sign::Minus] {
                    let local = g.act_squared(j, sign);
                    let cells = squared_via_cells(&g, j, sign);
                    match (local, cells) {
                        (Ok(a), Ok(b)) => {
                            t.check(a.equals(&b), || {
                                format!("{cfg} j={j} {sign:?}: {} vs {}", a.canonical_string(), b.canonical_string())
                            });
                            t.check(a.equals(&g) != has, || {
                                format!("{cfg} j={j}: fixed={} but structure={has}", a.equals(&g))
                            });
                        }
                        (a, b) => t.fail(format!("{cfg} j={j}: {:?} / {:?}", a.err(), b.err())),
                    }
                }
            }
        }
    }
    t
}

fn contraction_suite() -> Tally {
    let mut t = Tally::new();
    for cfg in oracle_configs() {
        let mut targets = BTreeSet::new();
        for g in enum_standard_graphs(&cfg, 1) {
            let name = g.canonical_string();
            match g.to_ivy_traced() {
                Ok((c, trace)) => {
                    t.check(c.graph.is_ivy(), || format!("{name}: not ivy"));
                    t.check(trace.windows(2).all(|w| w[1] < w[0]), || format!("{name}: trace {trace:?}"));
                    t.check(replays(&g, &c.word, &c.graph), || format!("{name}: ivy word does not replay"));
                }
                Err(e) => t.fail(format!("{name}: {e}")),
            }
            let c = if cfg.has_adjacent_dominant() { g.to_single_junction() } else { g.to_one_y() };
            match c {
                Ok(c) => {
                    t.check(replays(&g, &c.word, &c.graph), || format!("{name}: word does not replay"));
                    if cfg.has_adjacent_dominant() {
                        targets.insert(c.graph.canonical_string());
                        t.check(c.graph.junctions().len() == 1, || format!("{name}: several junctions"));
                    } else {
                        t.check(c.graph.bounded_face_count() == g.bounded_face_count(), || {
                            format!("{name}: bounded faces changed")
                        });
                    }
                }
                Err(e) => t.fail(format!("{name}: {e}")),
            }
        }
        if cfg.has_adjacent_dominant() {
            t.check(targets.len() == 1, || format!("{cfg}: {} single-junction targets", targets.len()));
        }
    }
    t
}

fn replays(g: &StandardGraph, w: &BraidWord, want: &StandardGraph) -> bool {
    g.apply_word(w).map(|h| h.canonical_string() == want.canonical_string()).unwrap_or(false)
}

fn components_suite() -> Tally {
    let mut t = Tally::new();
    let cfg = SectorConfig::new(6, [0, 2, 4]).expect("valid config");
    for mc in 0..=2 {
        let graphs = enum_standard_graphs(&cfg, mc);
        for g in &graphs {
            let k = g.bounded_face_count();
            for j in cfg.dominant() {
                for sign in [Sign::Plus, Sign::Minus] {
                    let h = g.act_squared(j, sign).expect("dominant");
                    t.check(h.bounded_face_count() == k, || {
                        format!("max_chain {mc}: A_{j}^2 {sign:?} changes count on {}", g.canonical_string())
                    });
                }
            }
        }
        match classify(&graphs) {
            Ok(classes) => {
                let mut by_count: BTreeMap<usize, usize> = BTreeMap::new();
                for c in &classes {
                    let members: BTreeSet<usize> = graphs
                        .iter()
                        .filter(|g| c.members.contains(&g.canonical_string()))
                        .map(|g| g.bounded_face_count())
                        .collect();
                    t.check(members.len() == 1, || format!("max_chain {mc}: class mixes counts {members:?}"));
                    *by_count.entry(c.bounded_faces.unwrap_or(usize::MAX)).or_default() += 1;
                }
                t.check(by_count.values().all(|&v| v == 1), || format!("max_chain {mc}: {by_count:?}"));
                let counts: BTreeSet<usize> = graphs.iter().map(|g| g.bounded_face_count()).collect();
                t.check(by_count.keys().copied().collect::<BTreeSet<_>>() == counts, || {
                    format!("max_chain {mc}: class keys differ from counts")
                });
                let star = StandardGraph::star(cfg.clone()).canonical_string();
                let zero: Vec<_> = classes.iter().filter(|c| c.bounded_faces == Some(0)).collect();
                t.check(zero.len() == 1 && zero[0].key == star, || format!("max_chain {mc}: count-0 forms"));
            }
            Err(e) => t.fail(format!("max_chain {mc}: {e}")),
        }
    }
    t
}

fn loops_suite() -> Tally {
    let mut t = Tally::new();
    let sys = LoopSystem::initial(SectorConfig::new(6, []).expect("valid config"));
    let run = |w: &str| -> String {
        let word: BraidWord = w.parse().expect("fixed word");
        sys.word_action(&word).map(|s| s.to_string()).unwrap_or_default()
    };
    let conj_pair = run("3^-1,2^+1,3^+1");
    t.check(conj_pair == "(a,b,ceC,cEdeC,c,f)", || format!("B3^-1 B2 B3 gave {conj_pair}"));
    let conj_wrap = run("0^-1,5^+1,0^+1");
    t.check(conj_wrap == "(fBabF,f,c,d,e,fbF)", || format!("B0^-1 B5 B0 gave {conj_wrap}"));
    for j in 0..6 {
        let jm = (j + 5) % 6;
        let a = run(&format!("{j}^-1,{jm}^+1,{j}^+1"));
        let b = run(&format!("{jm}^+1,{j}^+1,{jm}^-1"));
        t.check(a == b, || format!("braid relation at {j}: {a} vs {b}"));
    }
    let l = BTreeSet::from([0, 3]);
    for j in [1, 2, 4, 5] {
        let ok = verify_commutation(6, &l, j).unwrap_or(false);
        t.check(ok, || format!("commutation fails for j={j}"));
    }
    t
}

fn corpus_suite() -> Tally {
    let mut t = Tally::new();
    for cfg in oracle_configs() {
        for mc in 0..=2 {
            let mut seen = BTreeSet::new();
            for g in enum_standard_graphs(&cfg, mc) {
                let name = g.canonical_string();
                t.check(g.is_valid(), || format!("{name}: {:?}", g.validate()));
                t.check(seen.insert(name.clone()), || format!("{name}: duplicate"));
                let back: Result<StandardGraph> = from_text(&to_text(&g));
                t.check(back.as_ref().is_ok_and(|b| *b == g), || format!("{name}: round trip"));
            }
        }
    }
    let cfg = SectorConfig::new(6, [0, 3]).expect("valid config");
    let trees = enum_junction_trees(&cfg).len();
    t.check(trees == 36, || format!("(6, {{0,3}}) has {trees} junction trees"));
    t
}

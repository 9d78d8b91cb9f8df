use std::collections::BTreeSet;

use stokes_core::{enum_standard_graphs, Contraction, SectorConfig, StandardGraph};

fn corpora() -> Vec<(SectorConfig, Vec<StandardGraph>)> {
    [(5, vec![0, 2]), (6, vec![0, 3]), (6, vec![0, 2, 4]), (7, vec![1, 4]), (8, vec![0, 3, 6]), (8, vec![0, 2, 4, 6])]
        .into_iter()
        .map(|(n, s)| {
            let cfg = SectorConfig::new(n, s).unwrap();
            let gs = enum_standard_graphs(&cfg, 1);
            (cfg, gs)
        })
        .collect()
}

fn replays(g: &StandardGraph, c: &Contraction) -> bool {
    g.apply_word(&c.word).unwrap().canonical_string() == c.graph.canonical_string()
}

#[test]
fn to_ivy_is_certified_and_metric_decreases() {
    for (_, graphs) in corpora() {
        for g in &graphs {
            let (c, trace) = g.to_ivy_traced().unwrap();
            assert!(c.graph.is_ivy(), "{}", g.canonical_string());
            assert!(replays(g, &c));
            assert!(trace.windows(2).all(|w| w[1] < w[0]), "{trace:?}");
            // steps never exceed the starting metric
            assert!(trace.len() <= trace[0] + 1);
            let u0 = g.ivy_root().unwrap();
            assert_eq!(trace[0], g.u_metric(u0).unwrap());
        }
    }
}

#[test]
fn single_junction_reaches_the_star() {
    for (cfg, graphs) in corpora().into_iter().filter(|(c, _)| c.has_adjacent_dominant()) {
        let star = StandardGraph::star(cfg.clone());
        for g in &graphs {
            let c = g.to_single_junction().unwrap();
            assert!(replays(g, &c));
            assert!(c.graph.equals(&star), "{} -> {}", g.canonical_string(), c.graph.canonical_string());
        }
    }
}

#[test]
fn one_y_forms_are_keyed_by_bounded_faces() {
    for (cfg, graphs) in corpora().into_iter().filter(|(c, _)| !c.has_adjacent_dominant()) {
        let mut forms = std::collections::BTreeMap::new();
        for g in &graphs {
            let c = g.to_one_y().unwrap();
            assert!(replays(g, &c));
            assert_eq!(c.graph.bounded_face_count(), g.bounded_face_count());
            assert!(c.graph.y_junctions().len() <= 1);
            // every intermediate graph keeps the count
            let mut h = g.clone();
            for &(j, e) in c.word.letters() {
                h = h.apply_word(&format!("{j}^{e:+}").parse().unwrap()).unwrap();
                assert_eq!(h.bounded_face_count(), g.bounded_face_count());
            }
            forms.entry(g.bounded_face_count()).or_insert_with(BTreeSet::new).insert(c.graph.canonical_string());
        }
        for (k, f) in forms {
            assert_eq!(f.len(), 1, "{cfg} k={k}: {f:?}");
        }
    }
}

#[test]
fn lemma_junction_counts() {
    let mut applied = [0usize; 3];
    for (cfg, graphs) in corpora() {
        for g in &graphs {
            let before = g.junctions().len();
            for u0 in g.junctions() {
                for j in cfg.dominant() {
                    if let Ok(c) = g.exchange_yv(u0, j) {
                        applied[0] += 1;
                        assert!(replays(g, &c));
                        // u0 dissolves only when a single ray remains beside it
                        let after = c.graph.junctions().len();
                        assert!(after == before || (after + 1 == before && !c.graph.contains(u0)));
                    }
                    if let Ok(c) = g.y_to_v_with_i(u0, j) {
                        applied[1] += 1;
                        assert!(replays(g, &c));
                        assert_eq!(c.graph.junctions().len() + 1, before, "{}", g.canonical_string());
                    }
                    if let Ok(c) = g.merge_yy(u0, j) {
                        applied[2] += 1;
                        assert!(replays(g, &c));
                        assert_eq!(c.graph.junctions().len() + 1, before, "{}", g.canonical_string());
                    }
                }
            }
        }
    }
    assert!(applied.iter().all(|&a| a > 0), "{applied:?}");
}

#[test]
fn u_metric_vanishes_only_on_a_single_junction() {
    for (_, graphs) in corpora() {
        for g in &graphs {
            for u in g.junctions() {
                assert_eq!(g.u_metric(u).unwrap() == 0, g.junctions().len() == 1);
            }
        }
    }
}

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use stokes_core::io::{from_text, to_text};
use stokes_core::loops::Letter;
use stokes_core::orbits::canonical_contraction;
use stokes_core::{
    classify_components, enum_junction_trees, enum_standard_graphs, BraidWord, Item, LoopSystem, LoopWord,
    SectorConfig, Sign, StandardGraph, StructureKind, VertexId,
};

const CONFIGS: [(usize, &[usize]); 6] =
    [(5, &[0, 2]), (6, &[0, 3]), (6, &[0, 2, 4]), (7, &[1, 4]), (8, &[0, 3, 6]), (8, &[0, 2, 4, 6])];

fn corpora() -> &'static Vec<Vec<StandardGraph>> {
    static C: OnceLock<Vec<Vec<StandardGraph>>> = OnceLock::new();
    C.get_or_init(|| {
        CONFIGS
            .iter()
            .map(|(n, s)| enum_standard_graphs(&SectorConfig::new(*n, s.iter().copied()).unwrap(), 1))
            .collect()
    })
}

fn sign(plus: bool) -> Sign {
    if plus {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// An enumerated graph moved by a few random squared letters.
fn graph() -> impl Strategy<Value = StandardGraph> {
    (0..CONFIGS.len(), any::<prop::sample::Index>(), prop::collection::vec((any::<prop::sample::Index>(), any::<bool>()), 0..4))
        .prop_map(|(c, i, letters)| {
            let gs = &corpora()[c];
            let mut g = gs[i.index(gs.len())].clone();
            let dom = g.config().dominant();
            for (j, s) in letters {
                g = g.act_squared(dom[j.index(dom.len())], sign(s)).unwrap();
            }
            g
        })
}

fn graph_and_label() -> impl Strategy<Value = (StandardGraph, usize, Sign)> {
    (graph(), any::<prop::sample::Index>(), any::<bool>()).prop_map(|(g, j, s)| {
        let dom = g.config().dominant();
        let j = dom[j.index(dom.len())];
        (g, j, sign(s))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moved_graphs_stay_valid(g in graph()) {
        prop_assert!(g.is_valid(), "{:?}", g.validate());
        let rays: usize = g.rotations().values().flatten().filter(|i| matches!(i, Item::Ray(_))).count();
        prop_assert_eq!(rays, g.n());
    }

    #[test]
    fn one_structure_per_label(g in graph()) {
        let labels: Vec<usize> = g.structures().iter().map(|s| s.label).collect();
        let distinct: BTreeSet<usize> = labels.iter().copied().collect();
        prop_assert_eq!(labels.len(), distinct.len());
    }

    #[test]
    fn bounded_faces_are_core_double_edges(g in graph(), w in 1usize..4) {
        prop_assert_eq!(g.to_cell_graph(w).unwrap().core_double_edge_count(), g.bounded_face_count());
    }

    #[test]
    fn single_edit_corruption_is_rejected(g in graph(), v in any::<prop::sample::Index>(), i in any::<prop::sample::Index>(), r in 0usize..8) {
        let ids: Vec<VertexId> = g.vertex_ids().collect();
        let v = ids[v.index(ids.len())];
        let mut rot = g.rotations().clone();
        let i = i.index(rot[&v].len());
        // drop one item
        let mut dropped = rot.clone();
        dropped.get_mut(&v).unwrap().remove(i);
        prop_assert!(!StandardGraph::from_rotations(g.config().clone(), dropped).is_valid());
        // or point a ray slot at a different ray
        let items = rot.get_mut(&v).unwrap();
        if let Item::Ray(old) = items[i] {
            let new = r % g.n();
            if new != old {
                items[i] = Item::Ray(new);
                prop_assert!(!StandardGraph::from_rotations(g.config().clone(), rot).is_valid());
            }
        }
    }

    #[test]
    fn squared_moves_are_inverse((g, j, s) in graph_and_label()) {
        let h = g.act_squared(j, s).unwrap();
        prop_assert!(h.act_squared(j, s.inverse()).unwrap().equals(&g));
        prop_assert_eq!(h.config(), g.config());
    }

    #[test]
    fn moves_agree_with_cell_graph((g, j, s) in graph_and_label()) {
        let via = stokes_core::verify::squared_via_cells(&g, j, s).unwrap();
        prop_assert!(g.act_squared(j, s).unwrap().equals(&via));
    }

    #[test]
    fn moved_structure_keeps_its_kind((g, j, s) in graph_and_label()) {
        let before = g.find_structure(j).unwrap().map(|x| x.kind);
        let after = g.act_squared(j, s).unwrap().find_structure(j).unwrap().map(|x| x.kind);
        prop_assert_eq!(before, after);
    }

    #[test]
    fn iterated_i_moves_keep_translating((g, j, s) in graph_and_label()) {
        if g.find_structure(j).unwrap().map(|x| x.kind) == Some(StructureKind::I) {
            let mut seen = BTreeSet::from([g.canonical_string()]);
            let mut h = g.clone();
            for _ in 0..5 {
                h = h.act_squared(j, s).unwrap();
                prop_assert!(seen.insert(h.canonical_string()));
            }
        }
    }

    #[test]
    fn alternating_configs_conserve_bounded_faces((g, j, s) in graph_and_label()) {
        if !g.config().has_adjacent_dominant() {
            prop_assert_eq!(g.act_squared(j, s).unwrap().bounded_face_count(), g.bounded_face_count());
        }
    }

    #[test]
    fn contractions_replay(g in graph()) {
        let c = canonical_contraction(&g).unwrap();
        prop_assert!(g.apply_word(&c.word).unwrap().equals(&c.graph));
        let ivy = g.to_ivy().unwrap();
        prop_assert!(g.apply_word(&ivy.word).unwrap().equals(&ivy.graph));
    }

    #[test]
    fn orbit_members_share_the_canonical_form((g, j, s) in graph_and_label()) {
        let h = g.act_squared(j, s).unwrap();
        prop_assert!(canonical_contraction(&h).unwrap().graph.equals(&canonical_contraction(&g).unwrap().graph));
    }

    #[test]
    fn junction_tree_is_enumerated(g in graph()) {
        let t = g.junction_tree().unwrap();
        prop_assert!(enum_junction_trees(g.config()).contains(&t));
    }

    #[test]
    fn graph_text_round_trip(g in graph(), w in 1usize..3) {
        let back: StandardGraph = from_text(&to_text(&g)).unwrap();
        prop_assert_eq!(&back, &g);
        let cg = g.to_cell_graph(w).unwrap();
        let back: stokes_core::CellGraph = from_text(&to_text(&cg)).unwrap();
        prop_assert_eq!(back, cg);
    }

    #[test]
    fn braid_word_text_round_trip(letters in prop::collection::vec((0usize..9, prop::sample::select(vec![-2, -1, 1, 2])), 0..6)) {
        let w = BraidWord(letters);
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }
}

fn loop_word() -> impl Strategy<Value = LoopWord> {
    prop::collection::vec((0usize..6, any::<bool>()), 0..10)
        .prop_map(|ls| LoopWord::from_letters(ls.into_iter().map(|(generator, inverse)| Letter { generator, inverse })))
}

fn braid_word(n: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((0..n, prop::sample::select(vec![-1, 1])), 0..6).prop_map(BraidWord)
}

fn reduced(w: &LoopWord) -> bool {
    w.letters().windows(2).all(|p| !(p[0].generator == p[1].generator && p[0].inverse != p[1].inverse))
}

proptest! {
    #[test]
    fn loop_words_are_reduced(a in loop_word(), b in loop_word()) {
        prop_assert!(reduced(&a));
        let ab = a.mul(&b);
        prop_assert!(reduced(&ab));
        prop_assert!(ab.mul(&b.inverse()) == a);
        prop_assert!(a.mul(&a.inverse()).is_identity());
    }

    #[test]
    fn b_moves_are_inverse(w in braid_word(6), j in 0usize..6, plus: bool) {
        let sys = LoopSystem::initial(SectorConfig::new(6, []).unwrap()).word_action(&w).unwrap();
        let there = sys.b_action(j, sign(plus)).unwrap();
        prop_assert_eq!(there.b_action(j, sign(!plus)).unwrap(), sys.clone());
        prop_assert!(there.entries.values().all(reduced));
    }

    #[test]
    fn boundary_product_is_conjugation_invariant(w in braid_word(6), j in 0usize..6, plus: bool) {
        let sys = LoopSystem::initial(SectorConfig::new(6, []).unwrap()).word_action(&w).unwrap();
        let moved = sys.b_action(j, sign(plus)).unwrap();
        prop_assert_eq!(moved.boundary_product().conjugacy_key(), sys.boundary_product().conjugacy_key());
    }

    #[test]
    fn loop_text_round_trip(w in braid_word(6)) {
        let sys = LoopSystem::initial(SectorConfig::new(6, []).unwrap()).word_action(&w).unwrap();
        let back: LoopSystem = from_text(&to_text(&sys)).unwrap();
        prop_assert_eq!(back, sys);
    }
}

#[test]
fn classification_is_stable_in_the_chain_bound() {
    let cfg = SectorConfig::new(6, [0, 2, 4]).unwrap();
    for b in 0..2 {
        let small = classify_components(&cfg, b).unwrap();
        let large = classify_components(&cfg, b + 1).unwrap();
        for c in &small {
            let home = large.iter().find(|d| d.members.contains(&c.representative)).unwrap();
            assert_eq!(home.key, c.key);
            assert_eq!(home.bounded_faces, c.bounded_faces);
            for m in &c.members {
                assert!(home.members.contains(m));
            }
        }
    }
}

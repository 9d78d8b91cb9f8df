use stokes_core::io::{from_text, to_text};
use stokes_core::{CellGraph, LoopSystem, SectorConfig, StandardGraph, StructureKind, VertexId};

fn mixed() -> StandardGraph {
    from_text(include_str!("data/mixed_structures.sgraph")).unwrap()
}

#[test]
fn mixed_structure_inventory() {
    let g = mixed();
    assert!(g.is_valid(), "{:?}", g.validate());
    let found: Vec<(usize, StructureKind, u32)> =
        g.structures().iter().map(|s| (s.label, s.kind, s.junction.0)).collect();
    assert_eq!(
        found,
        [(1, StructureKind::I, 0), (2, StructureKind::V, 0), (4, StructureKind::I, 1), (5, StructureKind::Y, 1)]
    );
    assert_eq!(g.find_structure(5).unwrap().unwrap().y_junction, Some(VertexId(2)));
    assert!(g.find_structure(7).unwrap().is_none());
    assert!(!g.is_ivy());
}

#[test]
fn dot_styles_each_kind() {
    let dot = mixed().to_dot();
    for style in ["\"dotted\"", "\"dashed\"", "\"dashed,bold\""] {
        assert!(dot.contains(&format!("style={style}")), "{style} missing:\n{dot}");
    }
}

#[test]
fn star_round_trip_keeps_canonical_string() {
    let g = StandardGraph::star(SectorConfig::new(6, [0, 3]).unwrap());
    let back: StandardGraph = from_text(&to_text(&g)).unwrap();
    assert_eq!(back.canonical_string(), g.canonical_string());
}

#[test]
fn cell_graph_round_trip() {
    let cg = mixed().to_cell_graph(2).unwrap();
    let back: CellGraph = from_text(&to_text(&cg)).unwrap();
    assert_eq!(back, cg);
    assert!(back.to_standard().unwrap().equals(&mixed()));
}

#[test]
fn loop_system_round_trip() {
    let sys = LoopSystem::initial(SectorConfig::new(6, []).unwrap())
        .word_action(&"3^-1,2^+1,3^+1".parse().unwrap())
        .unwrap();
    let back: LoopSystem = from_text(&to_text(&sys)).unwrap();
    assert_eq!(back.to_string(), "(a,b,ceC,cEdeC,c,f)");
}

#[test]
fn wrong_version_is_rejected() {
    let text = include_str!("data/mixed_structures.sgraph").replace("\"version\": 1", "\"version\": 7");
    assert!(from_text::<StandardGraph>(&text).is_err());
}

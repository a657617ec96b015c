use std::path::PathBuf;

use chandraw::decomposition::{parse_decomposition, validate};
use chandraw::graph::parse_edge_list;
use chandraw::layout::segment_hits_vertex;
use chandraw::layout::Point;
use chandraw::pipeline::{run_pipeline, Config, Decompose};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

#[test]
fn demo_decomposition_is_valid() {
    let g = parse_edge_list(&std::fs::read_to_string(data("pch_demo.edges")).unwrap())
        .unwrap()
        .graph;
    assert_eq!(g.n(), 31);
    assert!((0..g.n()).all(|v| g.label(v) == v.to_string()));
    let d = parse_decomposition(
        &std::fs::read_to_string(data("pch_demo.decomp")).unwrap(),
        &g,
    )
    .unwrap();
    assert_eq!(d.k(), 3);
    assert_eq!(
        d.chain(0),
        &[0, 1, 4, 7, 12, 13, 15, 16, 17, 20, 22, 24, 25, 26, 29, 30]
    );
    assert_eq!(d.chain(1), &[2, 5, 9, 11, 23, 27]);
    assert_eq!(d.chain(2), &[3, 6, 8, 10, 14, 18, 19, 21, 28]);
    assert!(validate(&g, &d).is_ok());
}

#[test]
fn only_21_to_25_bends() {
    let cfg = Config {
        decompose: Some(Decompose::File(data("pch_demo.decomp"))),
        ..Config::default()
    };
    let doc = run_pipeline(&data("pch_demo.edges"), &cfg).unwrap();
    let bent: Vec<_> = doc
        .drawn_edges
        .iter()
        .filter(|e| e.bend.is_some())
        .map(|e| (e.source, e.target))
        .collect();
    assert_eq!(bent, vec![(21, 25)]);

    // Drawn straight, 21 -> 25 would run through vertex 23.
    let at = |v: usize| Point::new(doc.vertices[v].x, doc.vertices[v].y);
    let points: Vec<Point> = (0..doc.vertices.len()).map(at).collect();
    assert_eq!(
        segment_hits_vertex(at(21), at(25), &points),
        Some(Point::new(4, 23))
    );
    assert_eq!(at(23), Point::new(4, 23));
}

use std::path::Path;

use hotspot_core::io::{render_trace, TRACE_HEADER};
use hotspot_core::{exact_hotspot_2d, Dim, EdgeSet, KineticSweep, Rational, Scalar, WeightedEdge};

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "trace differs from {}", path.display());
}

/// Two stacked edges one unit apart, a short one arriving mid-way, and a
/// point edge on the lower line.
fn instance() -> EdgeSet<Rational> {
    let edges = vec![
        WeightedEdge::new2((q(0), q(0)), (q(6), q(0)), q(6)).unwrap(),
        WeightedEdge::new2((q(2), q(1)), (q(5), q(1)), q(6)).unwrap(),
        WeightedEdge::new2((q(4), q(0)), (q(4), q(0)), q(3)).unwrap(),
    ];
    EdgeSet::new(Dim::Two, edges).unwrap()
}

#[test]
fn kinetic_trace_is_stable() {
    let report = KineticSweep::new(&instance(), &q(2)).unwrap().with_trace().run().unwrap();
    let text = render_trace(&[("h", &report.trace[..])]);
    assert!(text.starts_with(TRACE_HEADER));
    golden("stacked.trace", &text);
    // x in [2, 3], y in [-1, 0]: 2 from the long edge, 4 + 3 from the others.
    assert_eq!(report.placement.weight, q(9));
    assert_eq!(exact_hotspot_2d(&instance(), &q(2)).unwrap().weight, q(9));
}

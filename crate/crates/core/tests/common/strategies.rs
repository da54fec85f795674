use hotspot_core::{build_edge_set, Dim, EdgeSet, Rational, Scalar, TimedVertex, WeightedEdge};
use proptest::prelude::*;

pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Loose x-parallel segments and point edges on a small grid, so that
/// endpoints, heights and crossings coincide often.
pub fn horizontal_set(max_edges: usize) -> impl Strategy<Value = EdgeSet<Rational>> {
    prop::collection::vec((-8i64..8, 0i64..6, -6i64..6, 1i64..12, 1i64..4), 1..=max_edges).prop_map(
        |raw| {
            let edges = raw
                .into_iter()
                .map(|(x, len, y, num, den)| {
                    let d = Rational::from_ratio(num, den);
                    WeightedEdge::new2((q(x), q(y)), (q(x + len), q(y)), d).unwrap()
                })
                .collect();
            EdgeSet::new(Dim::Two, edges).unwrap()
        },
    )
}

/// Orthogonal polyline with unit-ish steps on a small grid.
pub fn walk_vertices(dim: Dim, max_steps: usize) -> impl Strategy<Value = Vec<TimedVertex<Rational>>> {
    let axes = dim.count();
    prop::collection::vec((0..axes, -5i64..=5, 1i64..8), 1..=max_steps).prop_map(move |steps| {
        let mut cur = [0i64; 3];
        let mut t = 0i64;
        let mut out = vec![TimedVertex {
            t: q(0),
            p: [q(0), q(0), q(0)],
        }];
        for (axis, delta, dt) in steps {
            cur[axis] += delta;
            t += dt;
            out.push(TimedVertex {
                t: q(t),
                p: [q(cur[0]), q(cur[1]), q(cur[2])],
            });
        }
        out
    })
}

pub fn walk_set(dim: Dim, max_steps: usize) -> impl Strategy<Value = EdgeSet<Rational>> {
    walk_vertices(dim, max_steps).prop_map(move |vs| build_edge_set(dim, &vs).unwrap())
}

pub fn side() -> impl Strategy<Value = Rational> {
    (1i64..12, 1i64..3).prop_map(|(n, d)| Rational::from_ratio(n, d))
}

use hotspot_core::kinetic::ROOT;
use hotspot_core::{square_weight, EdgeSet, KineticSweep, Rational, Scalar};

/// Steps the kinetic sweep over `h` and checks the tree against direct
/// square weights. Winner functions are checked after every event; weights
/// are checked once all events at a position are done, at the midpoint to
/// the next position (or one unit past the last). Returns the number of
/// positions checked.
pub fn check_sweep(h: &EdgeSet<Rational>, s: &Rational) -> Result<usize, String> {
    let mut sweep = KineticSweep::new(h, s).map_err(|e| e.to_string())?;
    let mut checked = 0;
    while let Some(event) = sweep.step().map_err(|e| e.to_string())? {
        let x = event.x;
        let tree = sweep.tree();
        for (id, node) in tree.nodes().iter().enumerate() {
            if node.winner_fn != tree.path_sum(id, node.winner) {
                return Err(format!("winner path sum at node {id}, x = {x}"));
            }
        }
        if sweep.peek_x().is_some_and(|next| *next == x) {
            continue;
        }
        let probe = match sweep.peek_x() {
            Some(next) => (x.clone() + next.clone()).half(),
            None => x.clone() + Rational::from_i64(1),
        };
        let mut best_leaf = None::<Rational>;
        let mut best_seg = None::<Rational>;
        for leaf in 0..tree.leaf_count() {
            let y = tree.leaf_y(leaf);
            let direct = square_weight(h, &probe, y, s);
            let path = tree.path_sum(ROOT, leaf).eval(&probe);
            if path != direct {
                return Err(format!("leaf {leaf} path sum {path} != weight {direct} at x = {probe}"));
            }
            if best_leaf.as_ref().is_none_or(|b| direct > *b) {
                best_leaf = Some(direct.clone());
            }
        }
        for seg in 0..tree.segments().len() {
            let leaf = tree.segleaf(seg);
            let w = square_weight(h, &probe, tree.leaf_y(leaf), s);
            if best_seg.as_ref().is_none_or(|b| w > *b) {
                best_seg = Some(w);
            }
        }
        let root_value = tree.root().winner_fn.eval(&probe);
        if Some(&root_value) != best_leaf.as_ref() {
            return Err(format!("root {root_value} != best leaf {best_leaf:?} at x = {probe}"));
        }
        if best_seg != best_leaf {
            return Err(format!("best leaf is not a segleaf at x = {probe}"));
        }
        checked += 1;
    }
    Ok(checked)
}

use std::fmt::Write;

use crate::kinetic::TraceRecord;
use crate::scalar::Scalar;

/// First line of every trace; bump the version when columns change.
pub const TRACE_HEADER: &str = "# hotspot-trace v1\npass,x,kind,id,winner_leaf,root_value";

/// One CSV line per kinetic event, tagged with the name of its sweep pass.
pub fn render_trace<S: Scalar>(passes: &[(&str, &[TraceRecord<S>])]) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for (pass, r) in passes.iter().flat_map(|(p, t)| t.iter().map(move |r| (p, r))) {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            pass,
            r.x.to_exact_string(),
            r.kind.name(),
            r.id,
            r.winner_leaf,
            r.root_value.to_exact_string()
        );
    }
    out
}

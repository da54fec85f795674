//! Static SVG of a planar trajectory and an optional hotspot square.

use std::fmt::Write;

use crate::model::{EdgeSet, Placement};
use crate::scalar::Scalar;

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 20.0;

struct Frame {
    min: [f64; 2],
    scale: f64,
}

impl Frame {
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        // SVG y grows downwards.
        (
            MARGIN + (x - self.min[0]) * self.scale,
            CANVAS - MARGIN - (y - self.min[1]) * self.scale,
        )
    }
}

/// Renders the x/y projection of `t`. Point edges are drawn as dots; the
/// square, if given, is drawn on top.
pub fn render_svg<S: Scalar>(t: &EdgeSet<S>, hotspot: Option<&Placement<S>>) -> String {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    let mut grow = |x: f64, y: f64| {
        lo = [lo[0].min(x), lo[1].min(y)];
        hi = [hi[0].max(x), hi[1].max(y)];
    };
    for p in t.endpoints() {
        grow(p[0].to_f64(), p[1].to_f64());
    }
    if let Some(h) = hotspot {
        let (x, y, s) = (h.x.to_f64(), h.y.to_f64(), h.side.to_f64());
        grow(x, y);
        grow(x + s, y + s);
    }
    if !lo[0].is_finite() {
        lo = [0.0, 0.0];
        hi = [1.0, 1.0];
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let frame = Frame {
        min: lo,
        scale: (CANVAS - 2.0 * MARGIN) / span,
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<g stroke="steelblue" stroke-width="1.5" fill="steelblue">"#);
    for e in t.edges() {
        let (x1, y1) = frame.map(e.a()[0].to_f64(), e.a()[1].to_f64());
        let (x2, y2) = frame.map(e.b()[0].to_f64(), e.b()[1].to_f64());
        if (x1, y1) == (x2, y2) {
            let _ = writeln!(out, r#"<circle cx="{x1:.2}" cy="{y1:.2}" r="2.5"/>"#);
        } else {
            let _ = writeln!(
                out,
                r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
            );
        }
    }
    out.push_str("</g>\n");
    if let Some(h) = hotspot {
        let s = h.side.to_f64();
        let (left, top) = frame.map(h.x.to_f64(), h.y.to_f64() + s);
        let w = s * frame.scale;
        let _ = writeln!(
            out,
            r#"<rect x="{left:.2}" y="{top:.2}" width="{w:.2}" height="{w:.2}" fill="orange" fill-opacity="0.3" stroke="darkorange" stroke-width="2"/>"#
        );
        let _ = writeln!(
            out,
            r#"<title>weight {}</title>"#,
            h.weight.to_exact_string()
        );
    }
    out.push_str("</svg>\n");
    out
}

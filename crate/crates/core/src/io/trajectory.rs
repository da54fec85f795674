use std::fmt::Write;

use crate::error::{HotspotError, Result};
use crate::model::{build_edge_set, Dim, EdgeSet, TimedVertex};
use crate::scalar::Scalar;

/// A polyline as read from a trajectory file.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<S> {
    pub dim: Dim,
    pub vertices: Vec<TimedVertex<S>>,
    /// Source line of each vertex, for error messages.
    lines: Vec<usize>,
}

impl<S: Scalar> Trajectory<S> {
    pub fn new(dim: Dim, vertices: Vec<TimedVertex<S>>) -> Self {
        let lines = (1..=vertices.len()).collect();
        Trajectory {
            dim,
            vertices,
            lines,
        }
    }

    /// Builds the edge set; validation errors name the offending line.
    pub fn edge_set(&self) -> Result<EdgeSet<S>> {
        build_edge_set(self.dim, &self.vertices).map_err(|err| match err {
            HotspotError::NonMonotoneTime { index } => HotspotError::Parse {
                line: self.lines[index],
                message: "timestamp does not increase".into(),
            },
            HotspotError::NonOrthogonalStep { index } => HotspotError::Parse {
                line: self.lines[index],
                message: "step changes more than one coordinate".into(),
            },
            other => other,
        })
    }
}

fn is_header(fields: &[&str]) -> bool {
    let names = ["t", "x", "y", "z"];
    fields.len() >= 3 && fields.iter().zip(names).all(|(f, n)| f.eq_ignore_ascii_case(n))
}

/// Parses `t,x,y` or `t,x,y,z` lines. Blank lines and `#` comments are
/// skipped, as is a leading `t,x,y[,z]` header. With `dim == None` the
/// dimension follows the first data line.
pub fn parse_trajectory<S: Scalar>(text: &str, dim: Option<Dim>) -> Result<Trajectory<S>> {
    let mut found_dim = dim;
    let mut vertices = Vec::new();
    let mut lines = Vec::new();
    let mut seen_data = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if !seen_data && vertices.is_empty() && is_header(&fields) {
            seen_data = true;
            continue;
        }
        seen_data = true;
        let width = Dim::from_count(fields.len().saturating_sub(1)).ok_or_else(|| {
            HotspotError::Parse {
                line: line_no,
                message: format!("expected 3 or 4 fields, found {}", fields.len()),
            }
        })?;
        match found_dim {
            None => found_dim = Some(width),
            Some(d) if d != width => {
                return Err(HotspotError::Parse {
                    line: line_no,
                    message: format!(
                        "expected {} fields for a {}-dimensional trajectory",
                        d.count() + 1,
                        d.count()
                    ),
                })
            }
            Some(_) => {}
        }
        let mut values = Vec::with_capacity(4);
        for f in &fields {
            values.push(S::parse(f).map_err(|_| HotspotError::Parse {
                line: line_no,
                message: format!("invalid number {f:?}"),
            })?);
        }
        let z = values.get(3).cloned().unwrap_or_else(S::zero);
        let mut it = values.into_iter();
        let (t, x, y) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        vertices.push(TimedVertex { t, p: [x, y, z] });
        lines.push(line_no);
    }
    let dim = found_dim.unwrap_or(Dim::Two);
    if vertices.is_empty() {
        return Err(HotspotError::NoVertices);
    }
    Ok(Trajectory {
        dim,
        vertices,
        lines,
    })
}

pub fn render_trajectory<S: Scalar>(dim: Dim, vertices: &[TimedVertex<S>]) -> String {
    let mut out = String::from(if dim == Dim::Three { "t,x,y,z\n" } else { "t,x,y\n" });
    for v in vertices {
        let _ = write!(
            out,
            "{},{},{}",
            v.t.to_exact_string(),
            v.p[0].to_exact_string(),
            v.p[1].to_exact_string()
        );
        if dim == Dim::Three {
            let _ = write!(out, ",{}", v.p[2].to_exact_string());
        }
        out.push('\n');
    }
    out
}

//! DOT and JSON export of bounded curve-complex windows.
//!
//! Both formats list vertices in the window's fixed order (`1/0` first, then
//! ascending slope), and edges sorted by vertex index, so repeated runs are
//! byte-identical. Dual-curve edge sets are streamed rather than
//! materialized: they grow quadratically in the vertex count.

use std::io::{self, BufWriter, Write};

use bridgepants::pantscomplex::{bounded_view, ComplexKind, MetricGraphView, SurfaceKind};
use bridgepants::Slope;

use crate::query::{max_bound, MAX_BOUND_ENV};
use crate::{CliError, FormatArg};

pub fn run(
    surface: SurfaceKind,
    complex: ComplexKind,
    bound: i64,
    format: FormatArg,
) -> Result<(), CliError> {
    let cap = max_bound()?;
    if bound > cap {
        return Err(CliError::BoundExceeded(format!(
            "graph bound {bound} exceeds the configured maximum {cap} (raise {MAX_BOUND_ENV} to allow it)"
        )));
    }
    let view = bounded_view(surface, complex, bound);
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    match format {
        FormatArg::Json => write_json(&mut out, &view)?,
        FormatArg::Dot => write_dot(&mut out, &view)?,
    }
    out.flush()?;
    Ok(())
}

/// Sorted index pairs of the view's edges. Pants views are materialized (the
/// edge set is sparse); dual-curve views get the complete-graph pair stream.
fn for_each_edge(view: &MetricGraphView, mut f: impl FnMut(usize, usize) -> io::Result<()>) -> io::Result<()> {
    let vertices = view.vertices();
    match view.complex() {
        ComplexKind::Pants => {
            for (u, v) in view.edges() {
                let i = index_of(vertices, u);
                let j = index_of(vertices, v);
                f(i, j)?;
            }
        }
        ComplexKind::DualCurve => {
            for i in 0..vertices.len() {
                for j in (i + 1)..vertices.len() {
                    f(i, j)?;
                }
            }
        }
    }
    Ok(())
}

fn index_of(vertices: &[Slope], v: Slope) -> usize {
    vertices
        .binary_search(&v)
        .expect("edge endpoints come from the vertex set")
}

fn write_json(out: &mut impl Write, view: &MetricGraphView) -> io::Result<()> {
    write!(out, "{{\"vertices\":[")?;
    for (i, v) in view.vertices().iter().enumerate() {
        if i > 0 {
            write!(out, ",")?;
        }
        // Slopes render as `p/q`: no JSON string escaping needed.
        write!(out, "\"{v}\"")?;
    }
    write!(out, "],\"edges\":[")?;
    let mut first = true;
    for_each_edge(view, |i, j| {
        if first {
            first = false;
        } else {
            write!(out, ",")?;
        }
        write!(out, "[{i},{j}]")
    })?;
    writeln!(out, "]}}")
}

fn write_dot(out: &mut impl Write, view: &MetricGraphView) -> io::Result<()> {
    writeln!(out, "graph {{")?;
    let vertices = view.vertices();
    for v in vertices {
        writeln!(out, "  \"{v}\";")?;
    }
    for_each_edge(view, |i, j| {
        writeln!(out, "  \"{}\" -- \"{}\";", vertices[i], vertices[j])
    })?;
    writeln!(out, "}}")
}

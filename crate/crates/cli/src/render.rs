//! SVG drawings of labelled tumbling-block graphs.

use std::fmt::Write as _;

use tb_core::{Class, FiniteGraph, VertexAddr};

use crate::CliError;

/// Hexagon circumradius in SVG units.
pub const RADIUS: f64 = 40.0;
const MARGIN: f64 = 20.0;

/// Planar position of a vertex. Blocks are pointy-top hexagons, y grows
/// downward, and shared corners of neighbouring blocks coincide.
pub fn position(a: VertexAddr) -> (f64, f64) {
    let r = RADIUS;
    let s3 = 3f64.sqrt();
    let center = |i: i64, j: i64| (s3 * r * (j as f64 - i as f64 / 2.0), 1.5 * r * i as f64);
    let (cx, cy) = center(a.i, a.j);
    match a.cls {
        Class::W => (cx, cy - r),
        Class::U => (cx + s3 * r / 2.0, cy - r / 2.0),
        Class::V => (cx, cy),
    }
}

/// Draws `g` with the members of `highlight` filled. One `<circle>` per vertex.
pub fn render_svg(
    g: &FiniteGraph,
    highlight: &[usize],
    title: Option<&str>,
) -> Result<String, CliError> {
    let labels = g.labels().ok_or_else(|| {
        CliError::Usage(
            "rendering needs vertex addresses (use a family, quotient, block or JSON input)".into(),
        )
    })?;
    let pts: Vec<(f64, f64)> = labels.iter().map(|&a| position(a)).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 0.0, 0.0);
    }
    let (w, h) = (x1 - x0 + 2.0 * MARGIN, y1 - y0 + 2.0 * MARGIN);
    let shift = |(x, y): (f64, f64)| (x - x0 + MARGIN, y - y0 + MARGIN);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    )
    .unwrap();
    if let Some(t) = title {
        writeln!(out, "  <title>{}</title>", escape(t)).unwrap();
    }
    writeln!(
        out,
        r##"  <g class="edges" stroke="#555" stroke-width="1.5">"##
    )
    .unwrap();
    for (a, b) in g.edges() {
        let ((ax, ay), (bx, by)) = (shift(pts[a]), shift(pts[b]));
        writeln!(
            out,
            r#"    <line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}"/>"#
        )
        .unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, r#"  <g class="vertices" stroke="black">"#).unwrap();
    let chosen: std::collections::HashSet<usize> = highlight.iter().copied().collect();
    for (v, &a) in labels.iter().enumerate() {
        let (x, y) = shift(pts[v]);
        let fill = if chosen.contains(&v) {
            "black"
        } else {
            "white"
        };
        let rad = if a.cls == Class::U { 6 } else { 4 };
        writeln!(
            out,
            r#"    <circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="{rad}" fill="{fill}"><title>{a}</title></circle>"#
        )
        .unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use tb_core::addr::block_vertices;
    use tb_core::graph::named::cycle;

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
    }

    #[test]
    fn corners_surround_the_center() {
        let r = RADIUS;
        let s3 = 3f64.sqrt();
        let [u0, w0, u1, w1, u2, w2, c] = block_vertices(2, 3).map(position);
        let offsets = [
            (s3 * r / 2.0, -r / 2.0),
            (0.0, -r),
            (-s3 * r / 2.0, -r / 2.0),
            (-s3 * r / 2.0, r / 2.0),
            (0.0, r),
            (s3 * r / 2.0, r / 2.0),
        ];
        for (p, (dx, dy)) in [u0, w0, u1, w1, u2, w2].into_iter().zip(offsets) {
            assert!(close(p, (c.0 + dx, c.1 + dy)));
        }
    }

    #[test]
    fn unlabelled_graphs_are_rejected() {
        assert!(render_svg(&cycle(4), &[], None).is_err());
    }
}

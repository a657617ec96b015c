//! Deterministic SVG output for a [`LayoutDocument`].
//!
//! Rows grow downward, so every edge points down the page. Elements are
//! written in id order and all numbers are integers, which keeps the output
//! byte-stable.

use std::fmt::Write;

use crate::document::{EdgeEntry, EdgeKindName, LayoutDocument};
use crate::layout::Point;

/// Renders `doc` with one grid unit mapped to `scale` pixels. `scale` is
/// clamped to at least 1.
///
/// ```
/// use chandraw::pipeline::{run_text, Config};
/// use chandraw::svg::render_svg;
///
/// let doc = run_text("0 1\n0 2\n1 3\n2 3\n", &Config::default()).unwrap();
/// let svg = render_svg(&doc, 40);
/// assert_eq!(svg.matches("<circle").count(), 4);
/// assert_eq!(svg.matches("<line").count(), 4);
/// ```
pub fn render_svg(doc: &LayoutDocument, scale: i64) -> String {
    let s = scale.max(1);
    let r = (s * 3 / 10).max(1);
    let font = (s / 3).max(1);

    let pts = doc
        .vertices
        .iter()
        .map(|v| Point::new(v.x, v.y))
        .chain(doc.drawn_edges.iter().filter_map(|e| e.bend));
    let (lo, hi) = pts
        .fold(None, |acc: Option<(Point, Point)>, p| {
            Some(match acc {
                None => (p, p),
                Some((lo, hi)) => (
                    Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                    Point::new(hi.x.max(p.x), hi.y.max(p.y)),
                ),
            })
        })
        .unwrap_or((Point::new(0, 0), Point::new(0, 0)));
    let (min_x, min_y) = (lo.x * s - s, lo.y * s - s);
    let (width, height) = ((hi.x - lo.x) * s + 2 * s, (hi.y - lo.y) * s + 2 * s);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="{min_x} {min_y} {width} {height}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="20" refY="5" markerUnits="userSpaceOnUse" markerWidth="{r}" markerHeight="{r}" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>"#
    )
    .unwrap();
    out.push_str("<g class=\"body\">\n");

    let mut edges: Vec<&EdgeEntry> = doc.drawn_edges.iter().collect();
    edges.sort_by_key(|e| (e.source, e.target));
    let at = |v: usize| {
        let v = &doc.vertices[v];
        Point::new(v.x * s, v.y * s)
    };
    for e in edges {
        let (p, q) = (at(e.source), at(e.target));
        let class = match e.kind {
            EdgeKindName::Channel => "channel",
            EdgeKindName::Cross => "cross",
        };
        let dash = if e.in_original {
            ""
        } else {
            r#" stroke-dasharray="4 3""#
        };
        match e.bend {
            None => writeln!(
                out,
                r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"{dash} marker-end="url(#arrow)"/>"#,
                p.x, p.y, q.x, q.y
            ),
            Some(b) => writeln!(
                out,
                r#"<polyline class="{class}" points="{},{} {},{} {},{}" fill="none" stroke="black"{dash} marker-end="url(#arrow)"/>"#,
                p.x,
                p.y,
                b.x * s,
                b.y * s,
                q.x,
                q.y
            ),
        }
        .unwrap();
    }

    let mut vertices: Vec<_> = doc.vertices.iter().collect();
    vertices.sort_by_key(|v| v.id);
    for v in vertices {
        let (x, y) = (v.x * s, v.y * s);
        writeln!(
            out,
            r#"<circle cx="{x}" cy="{y}" r="{r}" fill="white" stroke="black"/><text x="{x}" y="{y}" font-size="{font}" text-anchor="middle" dominant-baseline="central">{}</text>"#,
            escape(&v.label)
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

use std::fmt::Write as _;

use crate::vertex::VertexSet;

use super::{vertex_point, CanonicalDiagram, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SvgOptions {
    pub labels: bool,
    /// Half-length of the break in an under-strand at a crossing.
    pub gap: u32,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { labels: false, gap: 7 }
    }
}

fn xy(p: Point) -> String {
    // y axis flipped so the drawing is upright in SVG coordinates
    format!("{},{}", coord(p.x), coord(-p.y))
}

fn coord(v: f64) -> String {
    let v = if v.abs() < 0.005 { 0.0 } else { v };
    format!("{v:.2}")
}

pub fn render_svg(d: &CanonicalDiagram, opts: &SvgOptions) -> String {
    let set = VertexSet::of(&d.form);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="740" height="620" viewBox="-370 -370 740 620">"#
    );
    let _ = writeln!(out, "<title>{}</title>", d.form);
    let _ = writeln!(out, r##"<rect x="-370" y="-370" width="740" height="620" fill="#ffffff"/>"##);

    let _ = writeln!(out, r##"<g fill="none" stroke="#1f4e79" stroke-width="2">"##);
    for arc in &d.arcs {
        let pts: Vec<String> = arc.path.iter().map(|&p| xy(p)).collect();
        let _ = writeln!(
            out,
            r#"<polyline class="arc" data-ends="{} {}" points="{}"/>"#,
            arc.from,
            arc.to,
            pts.join(" ")
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g stroke="#1f4e79" stroke-width="2">"##);
    let gap = opts.gap as f64;
    for c in &d.crossings {
        let (p, q) = (vertex_point(&set, c.under.0), vertex_point(&set, c.under.1));
        let len = q.minus(p).norm();
        let cut = (0.5 - gap / len).max(0.0);
        let a = p.lerp(q, cut);
        let b = p.lerp(q, 1.0 - cut);
        for (from, to) in [(p, a), (b, q)] {
            let _ = writeln!(
                out,
                r#"<line class="under" data-crossing="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                c.id,
                coord(from.x),
                coord(-from.y),
                coord(to.x),
                coord(-to.y)
            );
        }
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g stroke="#000000" stroke-width="6" stroke-linecap="round">"##);
    for b in &d.bridges {
        let _ = writeln!(
            out,
            r#"<line class="bridge" data-bridge="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            b.bridge,
            coord(b.start.x),
            coord(-b.start.y),
            coord(b.end.x),
            coord(-b.end.y)
        );
    }
    let _ = writeln!(out, "</g>");

    if opts.labels {
        let _ = writeln!(
            out,
            r##"<g font-family="sans-serif" font-size="9" fill="#444444" text-anchor="middle">"##
        );
        for b in &d.bridges {
            for &(v, p) in &b.vertices {
                let dir = p.minus(b.center);
                let k = (dir.norm() - 10.0) / dir.norm();
                let at = Point::new(b.center.x + dir.x * k, b.center.y + dir.y * k);
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}">{v}</text>"#,
                    coord(at.x),
                    coord(-at.y + 3.0)
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_diagram;

    #[test]
    fn deterministic_with_gaps() {
        let d = build_diagram(&"(4/2,4/1,3/1)".parse().unwrap()).unwrap();
        let a = render_svg(&d, &SvgOptions::default());
        let b = render_svg(&d, &SvgOptions::default());
        assert_eq!(a, b);
        assert_eq!(a.matches(r#"class="under""#).count(), 2 * 8);
        assert!(!a.contains("<text"));
        let l = render_svg(&d, &SvgOptions { labels: true, ..Default::default() });
        assert_eq!(l.matches("<text").count(), 22);
    }
}

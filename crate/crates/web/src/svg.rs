use std::fmt::Write;

use boolnet_core::{Sign, SignedDigraph};

const SIZE: f64 = 360.0;
const NODE_RADIUS: f64 = 18.0;

fn colour(sign: Sign) -> &'static str {
    match sign {
        Sign::Positive => "#1b7f3b",
        Sign::Negative => "#c0392b",
    }
}

fn marker_id(sign: Sign) -> &'static str {
    match sign {
        Sign::Positive => "arrow-pos",
        Sign::Negative => "arrow-neg",
    }
}

fn position(vertex: usize, count: usize) -> (f64, f64) {
    if count == 1 {
        return (SIZE / 2.0, SIZE / 2.0);
    }
    let angle = -std::f64::consts::FRAC_PI_2
        + 2.0 * std::f64::consts::PI * (vertex - 1) as f64 / count as f64;
    let r = SIZE / 2.0 - 60.0;
    (SIZE / 2.0 + r * angle.cos(), SIZE / 2.0 + r * angle.sin())
}

/// Circular layout; positive arcs solid green, negative arcs dashed red.
pub fn render(graph: &SignedDigraph) -> String {
    let n = graph.size();
    let mut svg = String::new();
    write!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    )
    .unwrap();
    svg.push_str("<defs>");
    for sign in [Sign::Positive, Sign::Negative] {
        write!(
            svg,
            r#"<marker id="{}" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="{}"/></marker>"#,
            marker_id(sign),
            colour(sign)
        )
        .unwrap();
    }
    svg.push_str("</defs>");

    for arc in graph.arcs() {
        let dash = if arc.sign == Sign::Negative { r#" stroke-dasharray="6 4""# } else { "" };
        let (x1, y1) = position(arc.from, n);
        let path = if arc.from == arc.to {
            // Loop on the outside of the circle.
            let (cx, cy) = (SIZE / 2.0, SIZE / 2.0);
            let (dx, dy) = if n == 1 { (0.0, -1.0) } else {
                let len = ((x1 - cx).powi(2) + (y1 - cy).powi(2)).sqrt();
                ((x1 - cx) / len, (y1 - cy) / len)
            };
            let spread = if arc.sign == Sign::Positive { 1.0 } else { 1.5 };
            let (px, py) = (-dy, dx);
            let start = (x1 + NODE_RADIUS * (dx + 0.6 * px), y1 + NODE_RADIUS * (dy + 0.6 * py));
            let end = (x1 + NODE_RADIUS * (dx - 0.6 * px), y1 + NODE_RADIUS * (dy - 0.6 * py));
            let reach = 48.0 * spread;
            format!(
                "M{:.1},{:.1} C{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}",
                start.0,
                start.1,
                x1 + reach * (dx + 0.7 * px),
                y1 + reach * (dy + 0.7 * py),
                x1 + reach * (dx - 0.7 * px),
                y1 + reach * (dy - 0.7 * py),
                end.0,
                end.1
            )
        } else {
            let (x2, y2) = position(arc.to, n);
            let (dx, dy) = (x2 - x1, y2 - y1);
            let len = (dx * dx + dy * dy).sqrt();
            let (ux, uy) = (dx / len, dy / len);
            // Bend to the right of travel so opposite arcs separate; the
            // negative arc of a dual pair bends further.
            let bend = if arc.sign == Sign::Positive { 24.0 } else { 44.0 };
            let (mx, my) = ((x1 + x2) / 2.0 - uy * bend, (y1 + y2) / 2.0 + ux * bend);
            let start = (x1 + ux * NODE_RADIUS, y1 + uy * NODE_RADIUS);
            let end = (x2 - ux * NODE_RADIUS, y2 - uy * NODE_RADIUS);
            format!(
                "M{:.1},{:.1} Q{mx:.1},{my:.1} {:.1},{:.1}",
                start.0, start.1, end.0, end.1
            )
        };
        write!(
            svg,
            r#"<path d="{path}" fill="none" stroke="{}" stroke-width="2"{dash} marker-end="url(#{})"><title>{} -&gt; {} ({})</title></path>"#,
            colour(arc.sign),
            marker_id(arc.sign),
            arc.from,
            arc.to,
            arc.sign
        )
        .unwrap();
    }

    for v in 1..=n {
        let (x, y) = position(v, n);
        write!(
            svg,
            r##"<circle cx="{x:.1}" cy="{y:.1}" r="{NODE_RADIUS}" fill="#f4f1e8" stroke="#333" stroke-width="1.5"/><text x="{x:.1}" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="13">x{v}</text>"##,
            y + 4.5
        )
        .unwrap();
    }
    svg.push_str("</svg>");
    svg
}

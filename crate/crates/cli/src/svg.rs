//! Static drawings of two-parameter decompositions. Vertical strips are bands with a solid
//! left edge and a dashed right edge, horizontal strips likewise from below, and quadrants are
//! shaded upper-right regions with a dot at the corner.

use std::fmt::Write;

use largescale::k2::LargeScaleDecomposition;
use largescale::localization::{Endpoint, Interval};

const UNIT: i64 = 40;
const MARGIN: i64 = 40;

const VERTICAL: &str = "#e45756";
const HORIZONTAL: &str = "#4c78a8";
const QUADRANT: &str = "#54a24b";

fn end(iv: &Interval) -> i64 {
    match iv.end {
        Endpoint::Finite(b) => b,
        Endpoint::Infinity => iv.start + 1,
    }
}

/// Grid size: everything in the decomposition plus one spare unit, at least 4.
fn extent(d: &LargeScaleDecomposition) -> i64 {
    let strips = d
        .vertical_strips
        .iter()
        .chain(&d.horizontal_strips)
        .map(|(iv, _)| end(iv));
    let corners = d.quadrants.iter().map(|(c, _)| c.max_coord() + 1);
    strips.chain(corners).max().unwrap_or(0).max(3) + 1
}

pub fn render_svg(d: &LargeScaleDecomposition) -> String {
    let n = extent(d);
    let size = 2 * MARGIN + n * UNIT;
    let x = |v: i64| MARGIN + v * UNIT;
    let y = |v: i64| MARGIN + (n - v) * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>"#
    );
    s.push_str("<g id=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n");
    for v in 0..=n {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            x(v),
            y(0),
            x(v),
            y(n)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            x(0),
            y(v),
            x(n),
            y(v)
        );
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"quadrants\">\n");
    for (c, k) in &d.quadrants {
        let (cx, cy) = (c[0], c[1]);
        let _ = writeln!(
            s,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{QUADRANT}" fill-opacity="0.25"/>"#,
            x(cx),
            y(n),
            (n - cx) * UNIT,
            (n - cy) * UNIT
        );
        let _ = writeln!(
            s,
            r#"<polyline points="{},{} {},{} {},{}" fill="none" stroke="{QUADRANT}" stroke-width="2"/>"#,
            x(cx),
            y(n),
            x(cx),
            y(cy),
            x(n),
            y(cy)
        );
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="5" fill="{QUADRANT}"/>"#,
            x(cx),
            y(cy)
        );
        if *k > 1 {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="14" font-family="sans-serif">×{k}</text>"#,
                x(cx) + 8,
                y(cy) - 8
            );
        }
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"vertical-strips\">\n");
    for (iv, k) in &d.vertical_strips {
        let (a, b) = (iv.start, end(iv));
        let _ = writeln!(
            s,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{VERTICAL}" fill-opacity="0.25"/>"#,
            x(a),
            y(n),
            (b - a) * UNIT,
            n * UNIT
        );
        let _ = writeln!(
            s,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="{VERTICAL}" stroke-width="2"/>"#,
            x(a),
            y(0),
            y(n)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="{VERTICAL}" stroke-width="2" stroke-dasharray="6,4"/>"#,
            x(b),
            y(0),
            y(n)
        );
        if *k > 1 {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="14" font-family="sans-serif">×{k}</text>"#,
                x(a) + 4,
                y(n) + 16
            );
        }
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"horizontal-strips\">\n");
    for (iv, k) in &d.horizontal_strips {
        let (a, b) = (iv.start, end(iv));
        let _ = writeln!(
            s,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{HORIZONTAL}" fill-opacity="0.25"/>"#,
            x(0),
            y(b),
            n * UNIT,
            (b - a) * UNIT
        );
        let _ = writeln!(
            s,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="{HORIZONTAL}" stroke-width="2"/>"#,
            y(a),
            x(0),
            x(n)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="{HORIZONTAL}" stroke-width="2" stroke-dasharray="6,4"/>"#,
            y(b),
            x(0),
            x(n)
        );
        if *k > 1 {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="14" font-family="sans-serif">×{k}</text>"#,
                x(n) - 24,
                y(a) - 4
            );
        }
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"axes\" stroke=\"black\" stroke-width=\"2\">\n");
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        x(0),
        y(0),
        x(n),
        y(0)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        x(0),
        y(0),
        x(0),
        y(n)
    );
    s.push_str("</g>\n<g id=\"labels\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\">\n");
    for v in 0..=n {
        let _ = writeln!(s, r#"<text x="{}" y="{}">{v}</text>"#, x(v), y(0) + 18);
        let _ = writeln!(s, r#"<text x="{}" y="{}">{v}</text>"#, x(0) - 14, y(v) + 4);
    }
    s.push_str("</g>\n</svg>\n");
    s
}

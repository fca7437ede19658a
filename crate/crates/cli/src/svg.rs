//! Schematic SVG of a curve word on the punctured disc.
//!
//! Punctures sit on a baseline with vertical rays above them and the
//! basepoint O below. Crossing k of m is drawn on its ray at height
//! 1 + k/(m+1) units, so the picture depends only on the word.

use std::fmt::Write;

use schur_scope::curves::loop_of_curve;
use schur_scope::CurveWord;

const UNIT: f64 = 80.0;
const MARGIN: f64 = 40.0;
const RAY_TOP: f64 = 2.4;
const BASE_BELOW: f64 = 1.0;
const LEGEND_LINES: usize = 4;
const LINE_HEIGHT: f64 = 20.0;
const LEGEND_GAP: f64 = 24.0;

pub const SCHEMATIC_LABEL: &str = "schematic — not isotopy-faithful";

struct Frame {
    width: f64,
    plot_height: f64,
}

impl Frame {
    fn x(&self, units: f64) -> f64 {
        MARGIN + units * UNIT
    }

    /// Height above the baseline in units, mapped to SVG coordinates.
    fn y(&self, units: f64) -> f64 {
        MARGIN + (RAY_TOP - units) * UNIT
    }
}

fn num(v: f64) -> String {
    format!("{v:.2}")
}

/// Puncture i (0-based) sits at x = i + 1 units; O sits at x = 0.
pub fn crossing_points(cw: &CurveWord) -> Vec<(f64, f64)> {
    let m = cw.letters().len();
    cw.letters()
        .iter()
        .enumerate()
        .map(|(k, &j)| ((j + 1) as f64, 1.0 + (k + 1) as f64 / (m + 1) as f64))
        .collect()
}

pub fn render_curve_svg(cw: &CurveWord, n: usize) -> String {
    let frame = Frame { width: 2.0 * MARGIN + (n + 1) as f64 * UNIT, plot_height: (RAY_TOP + BASE_BELOW) * UNIT };
    let height = 2.0 * MARGIN + frame.plot_height + LEGEND_GAP + LEGEND_LINES as f64 * LINE_HEIGHT;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(frame.width),
        h = num(height)
    );
    let _ = writeln!(out, r#"  <rect x="0" y="0" width="{}" height="{}" fill="white"/>"#, num(frame.width), num(height));

    let _ = writeln!(out, r#"  <g stroke="gray" stroke-width="1">"#);
    for i in 0..n {
        let x = num(frame.x((i + 1) as f64));
        let _ = writeln!(out, r#"    <line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#, num(frame.y(0.0)), num(frame.y(RAY_TOP)));
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r#"  <g font-family="serif" font-size="14">"#);
    for i in 0..n {
        let x = frame.x((i + 1) as f64);
        let _ = writeln!(out, r#"    <text x="{}" y="{}">ℓ{}</text>"#, num(x + 4.0), num(frame.y(RAY_TOP) + 14.0), i + 1);
        let _ = writeln!(out, r#"    <text x="{}" y="{}">p{}</text>"#, num(x + 4.0), num(frame.y(0.0) + 16.0), i + 1);
    }
    let _ = writeln!(out, r#"    <text x="{}" y="{}">O</text>"#, num(frame.x(0.0) + 4.0), num(frame.y(-BASE_BELOW) + 16.0));
    let _ = writeln!(out, "  </g>");

    let mut points = vec![(0.0, -BASE_BELOW)];
    points.extend(crossing_points(cw));
    points.push(((cw.end() + 1) as f64, 0.0));
    let coords: Vec<String> = points.iter().map(|&(x, y)| format!("{},{}", num(frame.x(x)), num(frame.y(y)))).collect();
    let _ = writeln!(
        out,
        r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="2" stroke-linejoin="round" stroke-linecap="round"/>"#,
        coords.join(" ")
    );
    if cw.is_negative() {
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="1.5" stroke-dasharray="4 3"/>"#,
            num(frame.x((cw.end() + 1) as f64)),
            num(frame.y(0.0)),
            num(0.18 * UNIT)
        );
    }

    let _ = writeln!(out, r#"  <g fill="black">"#);
    for i in 0..n {
        let _ = writeln!(out, r#"    <circle cx="{}" cy="{}" r="4"/>"#, num(frame.x((i + 1) as f64)), num(frame.y(0.0)));
    }
    let _ = writeln!(out, r#"    <circle cx="{}" cy="{}" r="4"/>"#, num(frame.x(0.0)), num(frame.y(-BASE_BELOW)));
    let _ = writeln!(out, "  </g>");

    let legend = [
        format!("word: {cw}"),
        format!("root: {}", cw.root_expression()),
        format!("loop: {}", loop_of_curve(cw)),
        SCHEMATIC_LABEL.to_string(),
    ];
    let _ = writeln!(out, r#"  <g font-family="sans-serif" font-size="13">"#);
    for (k, line) in legend.iter().enumerate() {
        let y = MARGIN + frame.plot_height + LEGEND_GAP + (k + 1) as f64 * LINE_HEIGHT;
        let _ = writeln!(out, r#"    <text x="{}" y="{}">{}</text>"#, num(MARGIN), num(y), line);
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}

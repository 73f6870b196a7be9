//! Static SVG rendering of layouts and drawings.
//!
//! The y axis points up in the model and down in SVG, so every y coordinate
//! is negated. Numbers are printed with a fixed number of decimals, which
//! keeps the output byte-identical across runs.

use std::fmt::Write;

use balloon_core::{Drawing, Layout, Vec2};

const MARGIN: f64 = 1.05;

struct Canvas {
    body: String,
    extent: f64,
}

impl Canvas {
    fn new(extent: f64) -> Self {
        Self { body: String::new(), extent: if extent > 0.0 { extent } else { 1.0 } }
    }

    fn stroke(&self) -> f64 {
        self.extent / 400.0
    }

    fn circle(&mut self, c: Vec2, r: f64, class: &str) {
        let _ = writeln!(self.body, r#"  <circle class="{class}" cx="{:.6}" cy="{:.6}" r="{:.6}"/>"#, c.x, -c.y, r);
    }

    fn line(&mut self, a: Vec2, b: Vec2, class: &str) {
        let _ = writeln!(
            self.body,
            r#"  <line class="{class}" x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}"/>"#,
            a.x, -a.y, b.x, -b.y
        );
    }

    fn finish(self) -> Vec<u8> {
        let e = self.extent * MARGIN;
        let w = self.stroke();
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
            -e,
            -e,
            2.0 * e,
            2.0 * e
        );
        let _ = writeln!(
            out,
            "  <style>circle{{fill:none;stroke:#1f5fa8;stroke-width:{w:.6}}} .cover{{stroke:#888;stroke-dasharray:{:.6} {:.6}}} line{{stroke:#222;stroke-width:{w:.6}}} .free{{stroke:#c33}}</style>",
            4.0 * w,
            3.0 * w
        );
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out.into_bytes()
    }
}

/// One circle per balloon, one segment per spoke (free spokes run out to
/// the covering circle) and the dashed covering circle.
pub fn emit_layout_svg(l: &Layout) -> Vec<u8> {
    let r = l.covering_radius;
    let mut c = Canvas::new(r);
    for p in &l.placements {
        c.line(Vec2::ZERO, l.center(p), "spoke");
    }
    for &label in &l.free_spokes {
        c.line(Vec2::ZERO, Vec2::from_polar(r, l.spoke_angle(label - 1)), "free");
    }
    for p in &l.placements {
        c.circle(l.center(p), l.radii[p.balloon], "balloon");
    }
    c.circle(Vec2::ZERO, r, "cover");
    c.finish()
}

/// One segment per edge and one circle per exclusive disk; the root's disk
/// is dashed.
pub fn emit_drawing_svg(d: &Drawing) -> Vec<u8> {
    let root = d.parent.iter().position(Option::is_none).unwrap_or(0);
    let origin = d.positions.get(root).copied().unwrap_or(Vec2::ZERO);
    let mut c = Canvas::new(d.stats.covering_radius);
    for (p, v) in d.edges() {
        c.line(d.positions[p] - origin, d.positions[v] - origin, "edge");
    }
    for e in &d.exclusive {
        let class = if e.node == root { "cover" } else { "disk" };
        c.circle(d.positions[e.node] - origin, e.radius, class);
    }
    c.finish()
}

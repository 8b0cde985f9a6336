//! Minimal deterministic SVG 1.1 writer.
//!
//! Hand-rolled so the output bytes are fully under our control: elements
//! are emitted in call order and every coordinate is formatted with a
//! fixed number of decimals, making documents byte-stable across runs.

use std::fmt::Write;

pub struct Document {
    body: String,
    width: f64,
    height: f64,
}

fn fmt_coord(v: f64) -> String {
    // avoid "-0.0000" so equal coordinates format identically
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{:.4}", v)
}

impl Document {
    pub fn new(width: f64, height: f64) -> Document {
        Document {
            body: String::new(),
            width,
            height,
        }
    }

    pub fn rect(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str, stroke: &str) {
        writeln!(
            self.body,
            r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="{}" stroke="{}" stroke-width="1"/>"#,
            fmt_coord(x),
            fmt_coord(y),
            fmt_coord(w),
            fmt_coord(h),
            fill,
            stroke
        )
        .unwrap();
    }

    pub fn polyline(&mut self, points: &[(f64, f64)], stroke: &str) {
        let pts: Vec<String> = points
            .iter()
            .map(|(x, y)| format!("{},{}", fmt_coord(*x), fmt_coord(*y)))
            .collect();
        writeln!(
            self.body,
            r#"  <polyline points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            pts.join(" "),
            stroke
        )
        .unwrap();
    }

    pub fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, stroke: &str, width: f64) {
        writeln!(
            self.body,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}"/>"#,
            fmt_coord(x1),
            fmt_coord(y1),
            fmt_coord(x2),
            fmt_coord(y2),
            stroke,
            fmt_coord(width)
        )
        .unwrap();
    }

    pub fn circle(&mut self, cx: f64, cy: f64, r: f64, fill: &str) {
        writeln!(
            self.body,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            fmt_coord(cx),
            fmt_coord(cy),
            fmt_coord(r),
            fill
        )
        .unwrap();
    }

    pub fn polygon(&mut self, points: &[(f64, f64)], fill: &str, opacity: f64) {
        let pts: Vec<String> = points
            .iter()
            .map(|(x, y)| format!("{},{}", fmt_coord(*x), fmt_coord(*y)))
            .collect();
        writeln!(
            self.body,
            r#"  <polygon points="{}" fill="{}" fill-opacity="{}"/>"#,
            pts.join(" "),
            fill,
            fmt_coord(opacity)
        )
        .unwrap();
    }

    pub fn text(&mut self, x: f64, y: f64, content: &str, fill: &str) {
        writeln!(
            self.body,
            r#"  <text x="{}" y="{}" font-family="monospace" font-size="14" text-anchor="middle" fill="{}">{}</text>"#,
            fmt_coord(x),
            fmt_coord(y),
            fill,
            content
        )
        .unwrap();
    }

    pub fn finish(self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n{}</svg>\n",
            fmt_coord(self.width),
            fmt_coord(self.height),
            fmt_coord(self.width),
            fmt_coord(self.height),
            self.body
        )
    }
}

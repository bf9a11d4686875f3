//! SVG pictures of line arrangements and their bounded complex.
//!
//! Coordinates are converted from exact scalars to decimals only here, for
//! drawing. The picture shows every line clipped to the vertex bounding box
//! (padded by 20% on each side), the vertices, and optionally Γ (bold edges,
//! shaded faces) and a weight label per corner placed 30% of the way from the
//! vertex toward the centroid of the face.

use std::fmt::Write;

use crate::arrangement::LineArrangement;
use crate::complex::{CellComplex, EdgeKind};
use crate::falk::WeightSystem;
use crate::scalar::Field;

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    pub gamma: bool,
    pub weights: Option<WeightSystem>,
}

const WIDTH: f64 = 800.0;

/// `x` with 12 significant digits, no exponent, trailing zeros dropped.
pub fn decimal(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let places = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.places$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

struct Frame {
    xmin: f64,
    ymax: f64,
    scale: f64,
    height: f64,
}

impl Frame {
    fn px(&self, x: f64, y: f64) -> (String, String) {
        (decimal((x - self.xmin) * self.scale), decimal((self.ymax - y) * self.scale))
    }
}

/// Clips `a·x + b·y = c` to the box; `None` if the line misses it.
fn clip(a: f64, b: f64, c: f64, (x0, x1, y0, y1): (f64, f64, f64, f64)) -> Option<((f64, f64), (f64, f64))> {
    let norm = a * a + b * b;
    let (px, py) = (a * c / norm, b * c / norm);
    let (dx, dy) = (-b, a);
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for (p, d, min, max) in [(px, dx, x0, x1), (py, dy, y0, y1)] {
        if d.abs() < 1e-300 {
            if p < min || p > max {
                return None;
            }
        } else {
            let (t0, t1) = ((min - p) / d, (max - p) / d);
            lo = lo.max(t0.min(t1));
            hi = hi.min(t0.max(t1));
        }
    }
    (lo < hi).then(|| ((px + lo * dx, py + lo * dy), (px + hi * dx, py + hi * dy)))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// A complete SVG 1.1 document.
pub fn render_svg<F: Field>(l: &LineArrangement<F>, options: &RenderOptions) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    if l.is_empty() {
        out.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"320\" height=\"40\" viewBox=\"0 0 320 40\">\n\
             <text x=\"10\" y=\"25\" font-family=\"sans-serif\" font-size=\"14\">empty arrangement</text>\n</svg>\n",
        );
        return out;
    }

    let complex = CellComplex::build(l);
    let points: Vec<(f64, f64)> = if complex.vertices().is_empty() {
        l.lines().iter().map(|ln| {
            let (x, y) = ln.base_point();
            (x.to_f64(), y.to_f64())
        }).collect()
    } else {
        complex.vertices().iter().map(|v| (v.x.to_f64(), v.y.to_f64())).collect()
    };
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let (padx, pady) = (0.2 * (x1 - x0).max(span * 0.25), 0.2 * (y1 - y0).max(span * 0.25));
    let bbox = (x0 - padx, x1 + padx, y0 - pady, y1 + pady);
    let scale = WIDTH / (bbox.1 - bbox.0);
    let frame = Frame { xmin: bbox.0, ymax: bbox.3, scale, height: (bbox.3 - bbox.2) * scale };
    let (w, h) = (decimal(WIDTH), decimal(frame.height));

    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    out.push_str("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    if options.gamma {
        out.push_str("<g class=\"faces\" fill=\"#cfe3f7\" stroke=\"none\">\n");
        for (id, face) in complex.bounded_faces() {
            let pts: Vec<String> = face
                .vertices
                .iter()
                .map(|&v| {
                    let vx = &complex.vertices()[v];
                    let (x, y) = frame.px(vx.x.to_f64(), vx.y.to_f64());
                    format!("{x},{y}")
                })
                .collect();
            let _ = writeln!(out, "<polygon class=\"face\" id=\"f{id}\" points=\"{}\"/>", pts.join(" "));
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g class=\"lines\" stroke=\"#444\" stroke-width=\"1\">\n");
    let mut labels = String::new();
    for (i, ln) in l.lines().iter().enumerate() {
        let Some(((ax, ay), (bx, by))) = clip(ln.a().to_f64(), ln.b().to_f64(), ln.c().to_f64(), bbox) else { continue };
        let (ax, ay) = frame.px(ax, ay);
        let (bx, by) = frame.px(bx, by);
        let _ = writeln!(out, "<line class=\"line\" id=\"H{}\" x1=\"{ax}\" y1=\"{ay}\" x2=\"{bx}\" y2=\"{by}\"/>", i + 1);
        let _ = writeln!(labels, "<text class=\"line-label\" x=\"{bx}\" y=\"{by}\">H{}</text>", i + 1);
    }
    out.push_str("</g>\n");

    if options.gamma {
        out.push_str("<g class=\"gamma\" stroke=\"#000\" stroke-width=\"3\" fill=\"none\">\n");
        for (id, e) in complex.bounded_edges() {
            let EdgeKind::Segment { from, to } = e.kind else { continue };
            let (p, q) = (&complex.vertices()[from], &complex.vertices()[to]);
            let (ax, ay) = frame.px(p.x.to_f64(), p.y.to_f64());
            let (bx, by) = frame.px(q.x.to_f64(), q.y.to_f64());
            let _ = writeln!(out, "<path class=\"gamma-edge\" id=\"e{id}\" d=\"M {ax} {ay} L {bx} {by}\"/>");
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g class=\"vertices\" fill=\"#000\">\n");
    for (id, v) in complex.vertices().iter().enumerate() {
        let (x, y) = frame.px(v.x.to_f64(), v.y.to_f64());
        let _ = writeln!(out, "<circle class=\"vertex\" id=\"v{id}\" cx=\"{x}\" cy=\"{y}\" r=\"3\"/>");
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#444\">\n");
    out.push_str(&labels);
    out.push_str("</g>\n");

    if let Some(weights) = &options.weights {
        out.push_str("<g class=\"weights\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#b00\" text-anchor=\"middle\">\n");
        for (id, value) in weights.iter() {
            let Some(corner) = complex.corners().get(id) else { continue };
            let v = &complex.vertices()[corner.vertex];
            let (vx, vy) = (v.x.to_f64(), v.y.to_f64());
            let (cx, cy) = complex.face_centroid_f64(corner.face);
            let (x, y) = frame.px(vx + 0.3 * (cx - vx), vy + 0.3 * (cy - vy));
            let _ = writeln!(out, "<text class=\"weight\" id=\"c{id}\" x=\"{x}\" y=\"{y}\">{}</text>", escape(&value.to_string()));
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals() {
        assert_eq!(decimal(0.0), "0");
        assert_eq!(decimal(1.5), "1.5");
        assert_eq!(decimal(-2.0), "-2");
        assert_eq!(decimal(1.0 / 3.0), "0.333333333333");
        assert_eq!(decimal(123456.789), "123456.789");
        assert_eq!(decimal(-1e-13), "-0.0000000000001");
    }

    #[test]
    fn clipping() {
        let b = (-1.0, 1.0, -1.0, 1.0);
        let ((ax, ay), (bx, by)) = clip(1.0, 0.0, 0.5, b).unwrap();
        assert_eq!((ax, bx), (0.5, 0.5));
        assert_eq!((ay.min(by), ay.max(by)), (-1.0, 1.0));
        assert!(clip(1.0, 0.0, 2.0, b).is_none());
    }
}

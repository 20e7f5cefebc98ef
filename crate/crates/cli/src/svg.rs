//! Deterministic SVG rendering of a schema and curves on it.
//!
//! Faces are regular polygons on a grid (faces with fewer than three sides
//! become circles cut into arcs); a chord endpoint at parameter `t` on an
//! occurrence sits at fraction `t` of that side in boundary order. Purely
//! presentational.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write;

use crosscap::schema::{Flag, SurfaceSchema};
use crosscap::{Curve, CurvePoint, Pos};

const CELL: f64 = 420.0;
const RADIUS: f64 = 160.0;
const PALETTE: [&str; 10] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"];

fn to_f64(p: &Pos) -> f64 {
    *p.numer() as f64 / *p.denom() as f64
}

struct Face {
    center: (f64, f64),
    sides: usize,
}

impl Face {
    fn angle(&self, i: f64) -> f64 {
        -PI / 2.0 + 2.0 * PI * i / self.sides as f64
    }

    fn on_circle(&self, a: f64) -> (f64, f64) {
        (self.center.0 + RADIUS * a.cos(), self.center.1 + RADIUS * a.sin())
    }

    fn vertex(&self, i: usize) -> (f64, f64) {
        self.on_circle(self.angle(i as f64))
    }

    /// Point at parameter `t` along side `i`.
    fn point(&self, i: usize, t: f64) -> (f64, f64) {
        if self.sides < 3 {
            return self.on_circle(self.angle(i as f64 + t));
        }
        let (a, b) = (self.vertex(i), self.vertex((i + 1) % self.sides));
        (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1))
    }

    /// Side midpoint and the outward unit normal there.
    fn midpoint(&self, i: usize) -> ((f64, f64), (f64, f64)) {
        let p = self.point(i, 0.5);
        let a = self.angle(i as f64 + 0.5);
        (p, (a.cos(), a.sin()))
    }
}

fn layout(s: &SurfaceSchema) -> (Vec<Face>, f64, f64) {
    let n = s.faces.len().max(1);
    let cols = (n as f64).sqrt().ceil() as usize;
    let rows = n.div_ceil(cols);
    let faces = s
        .faces
        .iter()
        .enumerate()
        .map(|(f, w)| Face {
            center: (CELL * ((f % cols) as f64 + 0.5), CELL * ((f / cols) as f64 + 0.5)),
            sides: w.word.len().max(1),
        })
        .collect();
    (faces, CELL * cols as f64, CELL * rows as f64)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn render(s: &SurfaceSchema, curves: &[Curve]) -> String {
    let (faces, width, height) = layout(s);
    let crosscaps: BTreeSet<&str> = s.pairs.iter().filter(|p| p.flag == Flag::Same).map(|p| p.edge.as_str()).collect();
    let paired: BTreeSet<&str> = s.pairs.iter().map(|p| p.edge.as_str()).collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="11">"##
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##);

    for (f, (face, word)) in faces.iter().zip(&s.faces).enumerate() {
        let _ = writeln!(out, r##"<g class="face" id="face-{f}">"##);
        if face.sides < 3 {
            let _ = writeln!(
                out,
                r##"<circle cx="{:.2}" cy="{:.2}" r="{RADIUS:.2}" fill="#f4f4f4" stroke="black"/>"##,
                face.center.0, face.center.1
            );
        } else {
            let pts: Vec<String> = (0..face.sides).map(|i| face.vertex(i)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
            let _ = writeln!(out, r##"<polygon points="{}" fill="#f4f4f4" stroke="black"/>"##, pts.join(" "));
        }
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" text-anchor="middle" fill="#999">{}</text>"##,
            face.center.0,
            face.center.1,
            escape(&word.id)
        );
        for (i, letter) in word.word.iter().enumerate() {
            let ((x, y), (nx, ny)) = face.midpoint(i);
            let label = letter.edge.as_str();
            if crosscaps.contains(label) {
                let r = 6.0;
                let d = r / 2f64.sqrt();
                let _ = writeln!(
                    out,
                    r##"<g class="crosscap"><circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}" fill="white" stroke="black"/><path d="M{:.2},{:.2}L{:.2},{:.2}M{:.2},{:.2}L{:.2},{:.2}" stroke="black"/></g>"##,
                    x - d,
                    y - d,
                    x + d,
                    y + d,
                    x - d,
                    y + d,
                    x + d,
                    y - d
                );
            } else if !paired.contains(label) {
                let _ = writeln!(out, r##"<circle class="hole" cx="{x:.2}" cy="{y:.2}" r="5.00" fill="white" stroke="black"/>"##);
            }
            let _ = writeln!(
                out,
                r##"<text x="{:.2}" y="{:.2}" text-anchor="middle" dominant-baseline="middle">{}</text>"##,
                x + 16.0 * nx,
                y + 16.0 * ny,
                escape(&letter.to_string())
            );
        }
        let _ = writeln!(out, "</g>");
    }

    let at = |p: &CurvePoint| {
        let face = &faces[p.occ.face];
        face.point(p.occ.index, to_f64(&p.pos))
    };
    for (n, c) in curves.iter().enumerate() {
        let colour = PALETTE[n % PALETTE.len()];
        let _ = writeln!(out, r##"<g class="curve" stroke="{colour}" stroke-width="1.5"><title>{}</title>"##, escape(&c.id));
        for ch in &c.chords {
            let (a, b) = (at(&ch.from), at(&ch.to));
            let _ = writeln!(out, r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"##, a.0, a.1, b.0, b.1);
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

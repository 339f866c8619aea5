//! Static SVG pictures of an instance and, optionally, a solution.

use std::fmt::Write;

use diskcover::{Disk, Instance, Line, Metric, Point};

use crate::io::Solution;

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 20.0;
const BOUNDARY_SAMPLES: usize = 96;

/// Map from world coordinates to the canvas, y pointing up.
struct View {
    lo: Point,
    scale: f64,
    height: f64,
}

impl View {
    fn fit(points: &[Point]) -> Self {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let scale = (WIDTH - 2.0 * MARGIN) / span;
        let height = (hi.y - lo.y) * scale + 2.0 * MARGIN;
        Self { lo, scale, height }
    }

    fn x(&self, p: &Point) -> f64 {
        MARGIN + (p.x - self.lo.x) * self.scale
    }

    fn y(&self, p: &Point) -> f64 {
        self.height - MARGIN - (p.y - self.lo.y) * self.scale
    }
}

/// Points on the ball boundary, in the line's frame when there is one.
fn boundary(d: &Disk, line: Option<&Line>) -> Vec<Point> {
    let local_center = line.map_or(d.center, |l| l.to_local(&d.center));
    (0..BOUNDARY_SAMPLES)
        .map(|k| {
            let a = k as f64 / BOUNDARY_SAMPLES as f64 * std::f64::consts::TAU;
            let (dx, dy) = (a.cos(), a.sin());
            let n = d.metric.norm(dx, dy);
            let q = Point::new(local_center.x + d.radius * dx / n, local_center.y + d.radius * dy / n);
            line.map_or(q, |l| l.from_local(&q))
        })
        .collect()
}

fn square_corners(d: &Disk, line: Option<&Line>) -> Vec<Point> {
    let c = line.map_or(d.center, |l| l.to_local(&d.center));
    let r = d.radius;
    [(-r, -r), (r, -r), (r, r), (-r, r)]
        .iter()
        .map(|&(dx, dy)| {
            let q = Point::new(c.x + dx, c.y + dy);
            line.map_or(q, |l| l.from_local(&q))
        })
        .collect()
}

fn outline(d: &Disk, line: Option<&Line>) -> Vec<Point> {
    match d.metric {
        Metric::Inf => square_corners(d, line),
        _ => boundary(d, line),
    }
}

fn polygon(out: &mut String, view: &View, pts: &[Point], style: &str) {
    let coords: Vec<String> = pts
        .iter()
        .map(|p| format!("{:.3},{:.3}", view.x(p), view.y(p)))
        .collect();
    let _ = writeln!(out, r#"  <polygon points="{}" {style}/>"#, coords.join(" "));
}

pub fn render_svg(inst: &Instance, sol: Option<&Solution>) -> String {
    let mut extent: Vec<Point> = inst.clients.clone();
    extent.extend(inst.servers.iter().flatten().copied());
    let line = sol.and_then(|s| s.line.as_ref());
    if let Some(s) = sol {
        for d in &s.disks {
            extent.extend(outline(d, line));
        }
        extent.extend(s.tour.iter().flatten().copied());
    }
    let view = View::fit(&extent);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{:.0}" viewBox="0 0 {WIDTH:.0} {:.3}">"#,
        view.height.ceil(),
        view.height
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    if let Some(l) = line {
        let far = extent.iter().fold(1.0f64, |a, p| a.max(p.euclidean(&l.anchor))) * 2.0;
        let a = l.from_local(&Point::new(-far, 0.0));
        let b = l.from_local(&Point::new(far, 0.0));
        let _ = writeln!(
            out,
            r##"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#999" stroke-dasharray="6 4"/>"##,
            view.x(&a),
            view.y(&a),
            view.x(&b),
            view.y(&b)
        );
    }
    if let Some(s) = sol {
        for d in &s.disks {
            if d.metric.is_euclidean() {
                let _ = writeln!(
                    out,
                    r##"  <circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="#4a90d9" fill-opacity="0.2" stroke="#1f5fa8"/>"##,
                    view.x(&d.center),
                    view.y(&d.center),
                    d.radius * view.scale
                );
            } else {
                polygon(
                    &mut out,
                    &view,
                    &outline(d, line),
                    r##"fill="#4a90d9" fill-opacity="0.2" stroke="#1f5fa8""##,
                );
            }
        }
        if let Some(t) = s.tour.as_ref().filter(|t| t.len() > 1) {
            polygon(&mut out, &view, t, r##"fill="none" stroke="#d9534f" stroke-width="2""##);
        }
        for d in &s.disks {
            let _ = writeln!(
                out,
                r##"  <circle cx="{:.3}" cy="{:.3}" r="2" fill="#1f5fa8"/>"##,
                view.x(&d.center),
                view.y(&d.center)
            );
        }
    }
    for p in inst.servers.iter().flatten() {
        let _ = writeln!(
            out,
            r##"  <rect x="{:.3}" y="{:.3}" width="7" height="7" fill="#5cb85c"/>"##,
            view.x(p) - 3.5,
            view.y(p) - 3.5
        );
    }
    for p in &inst.clients {
        let _ = writeln!(
            out,
            r#"  <circle cx="{:.3}" cy="{:.3}" r="3.5" fill="black"/>"#,
            view.x(p),
            view.y(p)
        );
    }
    out.push_str("</svg>\n");
    out
}

//! Orthographic SVG rendering.
//!
//! A circle of the sphere projects to an ellipse, so every edge becomes an
//! exact SVG elliptical arc after splitting it where it crosses the limb.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write;

use spherewidth::{Bounding, CircleArc, ConvexBody, Lune, Vec3};

pub const SIZE: f64 = 1000.0;
const SCALE: f64 = 480.0;
const HALF: f64 = SIZE / 2.0;

/// Viewing direction and screen axes; `right x up = dir` points at the viewer.
#[derive(Clone, Copy, Debug)]
pub struct View {
    pub dir: Vec3,
    right: Vec3,
    up: Vec3,
}

impl View {
    pub fn new(dir: Vec3) -> Option<View> {
        let n = dir.norm();
        if !n.is_finite() || n < 1e-12 {
            return None;
        }
        let dir = dir / n;
        let hint = if dir.z.abs() < 0.9 { Vec3::z() } else { Vec3::y() };
        let right = hint.cross(&dir).normalize();
        let up = dir.cross(&right);
        Some(View { dir, right, up })
    }

    /// Parses `x`, `y`, `z` or `a,b,c`.
    pub fn parse(s: &str) -> Option<View> {
        let dir = match s {
            "x" => Vec3::x(),
            "y" => Vec3::y(),
            "z" => Vec3::z(),
            _ => {
                let parts: Vec<f64> = s.split(',').map(|p| p.trim().parse().ok()).collect::<Option<_>>()?;
                if parts.len() != 3 {
                    return None;
                }
                Vec3::new(parts[0], parts[1], parts[2])
            }
        };
        View::new(dir)
    }

    fn screen(&self, p: &Vec3) -> (f64, f64) {
        (HALF + SCALE * p.dot(&self.right), HALF - SCALE * p.dot(&self.up))
    }

    /// Screen image of a direction (no offset).
    fn screen_dir(&self, v: &Vec3) -> (f64, f64) {
        (SCALE * v.dot(&self.right), -SCALE * v.dot(&self.up))
    }
}

/// `cos(r) c + sin(r) (cos t e1 + sin t e2)` for `t` in `[start, start + sweep]`.
#[derive(Clone, Copy, Debug)]
struct Curve {
    c: Vec3,
    r: f64,
    e1: Vec3,
    e2: Vec3,
    start: f64,
    sweep: f64,
}

impl Curve {
    fn from_arc(a: &CircleArc) -> Self {
        let (e1, e2) = a.frame();
        Curve { c: *a.center().vector(), r: a.radius(), e1, e2, start: a.start_angle(), sweep: a.sweep() }
    }

    fn at(&self, t: f64) -> Vec3 {
        self.c * self.r.cos() + (self.e1 * t.cos() + self.e2 * t.sin()) * self.r.sin()
    }

    /// Parameters strictly inside the sweep where the curve meets the limb.
    fn limb_crossings(&self, dir: &Vec3) -> Vec<f64> {
        let a = self.r.sin() * self.e1.dot(dir);
        let b = self.r.sin() * self.e2.dot(dir);
        let c = self.r.cos() * self.c.dot(dir);
        let rho = a.hypot(b);
        if rho <= c.abs() + 1e-15 {
            return Vec::new();
        }
        let base = b.atan2(a);
        let off = (-c / rho).acos();
        let mut out: Vec<f64> = [base + off, base - off]
            .into_iter()
            .map(|t| (t - self.start).rem_euclid(2.0 * PI))
            .filter(|&d| d > 1e-12 && d < self.sweep - 1e-12)
            .collect();
        out.sort_by(f64::total_cmp);
        out.dedup_by(|x, y| (*x - *y).abs() < 1e-12);
        out.into_iter().map(|d| self.start + d).collect()
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// SVG path data for the piece `[t0, t1]` of a curve.
fn piece_path(view: &View, curve: &Curve, t0: f64, t1: f64) -> String {
    let p0 = view.screen(&curve.at(t0));
    let p1 = view.screen(&curve.at(t1));
    let mut d = format!("M {} {} ", num(p0.0), num(p0.1));
    let u = view.screen_dir(&(curve.e1 * curve.r.sin()));
    let v = view.screen_dir(&(curve.e2 * curve.r.sin()));
    // semi-axes of the ellipse spanned by the conjugate half-diameters u, v
    let (p, q, s) = (u.0 * u.0 + v.0 * v.0, u.1 * u.1 + v.1 * v.1, u.0 * u.1 + v.0 * v.1);
    let mean = 0.5 * (p + q);
    let spread = (0.25 * (p - q) * (p - q) + s * s).sqrt();
    let rx = (mean + spread).max(0.0).sqrt();
    let ry = (mean - spread).max(0.0).sqrt();
    if ry < 1e-6 || (t1 - t0) < 1e-9 {
        let _ = write!(d, "L {} {}", num(p1.0), num(p1.1));
        return d;
    }
    let angle = 0.5 * (2.0 * s).atan2(p - q);
    let large = u8::from(t1 - t0 > PI);
    let sweep = u8::from(u.0 * v.1 - u.1 * v.0 > 0.0);
    let _ = write!(
        d,
        "A {} {} {} {} {} {} {}",
        num(rx),
        num(ry),
        num(angle.to_degrees()),
        large,
        sweep,
        num(p1.0),
        num(p1.1)
    );
    d
}

/// Visible and hidden path pieces of a curve.
fn curve_paths(view: &View, curve: &Curve) -> (Vec<String>, Vec<String>) {
    let mut cuts = vec![curve.start];
    cuts.extend(curve.limb_crossings(&view.dir));
    cuts.push(curve.start + curve.sweep);
    let (mut front, mut back) = (Vec::new(), Vec::new());
    for w in cuts.windows(2) {
        let path = piece_path(view, curve, w[0], w[1]);
        if curve.at(0.5 * (w[0] + w[1])).dot(&view.dir) >= 0.0 {
            front.push(path);
        } else {
            back.push(path);
        }
    }
    (front, back)
}

fn push_group(svg: &mut String, id: &str, color: &str, width: f64, curves: &[Curve], view: &View) {
    let _ = writeln!(svg, "  <g id=\"{id}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\">");
    for c in curves {
        let (front, back) = curve_paths(view, c);
        for d in front {
            let _ = writeln!(svg, "    <path d=\"{d}\"/>");
        }
        for d in back {
            let _ = writeln!(svg, "    <path d=\"{d}\" stroke-dasharray=\"6 4\" stroke-opacity=\"0.6\"/>");
        }
    }
    let _ = writeln!(svg, "  </g>");
}

fn lune_curves(lune: &Lune) -> Vec<Curve> {
    [Bounding::First, Bounding::Second]
        .into_iter()
        .map(|which| {
            let s = lune.boundary_semicircle(which);
            let e1 = *s.center.vector();
            let e2 = s.pole.vector().cross(&e1);
            Curve { c: *s.pole.vector(), r: FRAC_PI_2, e1, e2, start: -FRAC_PI_2, sweep: PI }
        })
        .collect()
}

/// The full SVG document.
pub fn render_svg(body: &ConvexBody, view: &View, lunes: &[Lune]) -> String {
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">",
        SIZE
    );
    let _ = writeln!(
        svg,
        "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>",
        HALF, HALF, SCALE
    );
    if !lunes.is_empty() {
        let curves: Vec<Curve> = lunes.iter().flat_map(lune_curves).collect();
        push_group(&mut svg, "minimal-lunes", "#c0392b", 1.5, &curves, view);
    }
    let curves: Vec<Curve> = body.arcs().iter().map(Curve::from_arc).collect();
    push_group(&mut svg, "body", "#1f3a93", 2.5, &curves, view);
    svg.push_str("</svg>\n");
    svg
}

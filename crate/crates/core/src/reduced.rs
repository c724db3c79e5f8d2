//! Necessary condition for reducedness.
//!
//! In a reduced body every extreme point `e` is the center of a bounding
//! semicircle of some lune of minimal thickness containing the body. For a
//! supporting hemisphere `G` with `e` on its boundary, the lunes `G ∩ H` whose
//! `G`-side semicircle is centered at `e` have `h = cos t g + sin t e`, with
//! thickness `pi - t`. The admissible `t` form an interval starting at `0`, so
//! the thinnest such lune comes from bisecting for its upper end.

use std::f64::consts::PI;

use serde::Serialize;

use crate::arc::CircleArc;
use crate::body::{BoundaryPoint, ConvexBody, Location, SupportFeature};
use crate::error::Result;
use crate::measure::extreme_points;
use crate::sphere::{UnitPoint, Vec3};
use crate::width::thickness;

pub const DEFAULT_TOL: f64 = 1e-7;
pub const DEFAULT_ARC_SAMPLES: usize = 32;

const CONE_SAMPLES: usize = 64;
const GOLDEN_ITERS: usize = 40;
const BISECT_ITERS: usize = 60;
const CONTAIN_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
pub struct ReducednessOptions {
    pub tol: f64,
    pub arc_samples: usize,
}

impl Default for ReducednessOptions {
    fn default() -> Self {
        ReducednessOptions { tol: DEFAULT_TOL, arc_samples: DEFAULT_ARC_SAMPLES }
    }
}

/// Outcome at one extreme point.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CandidateResult {
    pub point: BoundaryPoint,
    /// Thinnest lune containing the body with `point` as a semicircle center.
    pub best_thickness: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducednessReport {
    pub thickness: f64,
    pub tol: f64,
    pub candidates: Vec<CandidateResult>,
    pub pass: bool,
}

impl ReducednessReport {
    pub fn failures(&self) -> impl Iterator<Item = &CandidateResult> {
        self.candidates.iter().filter(|c| !c.pass)
    }
}

fn min_dot(arcs: &[CircleArc], h: &Vec3) -> f64 {
    arcs.iter().map(|a| a.min_dot(h).1).fold(f64::INFINITY, f64::min)
}

/// Largest admissible `t` for the hemisphere center `g`.
fn t_max(arcs: &[CircleArc], g: &Vec3, e: &Vec3) -> f64 {
    let (mut lo, mut hi) = (0.0, PI);
    for _ in 0..BISECT_ITERS {
        let mid = 0.5 * (lo + hi);
        if min_dot(arcs, &(g * mid.cos() + e * mid.sin())) >= -CONTAIN_TOL {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Largest `t_max` over the supporting centers in `cone`.
fn best_over_cone(arcs: &[CircleArc], cone: &SupportFeature, e: &UnitPoint) -> f64 {
    let f = |s: f64| t_max(arcs, cone.point_at_fraction(s).vector(), e.vector());
    if let SupportFeature::Point(g) = cone {
        return t_max(arcs, g.vector(), e.vector());
    }
    let grid: Vec<f64> = (0..=CONE_SAMPLES).map(|k| f(k as f64 / CONE_SAMPLES as f64)).collect();
    let k = (0..grid.len()).max_by(|&i, &j| grid[i].total_cmp(&grid[j])).expect("nonempty");
    let step = 1.0 / CONE_SAMPLES as f64;
    let (mut a, mut b) = (((k as f64 - 1.0) * step).max(0.0), ((k as f64 + 1.0) * step).min(1.0));
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let (mut x1, mut x2) = (b - r * (b - a), a + r * (b - a));
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..GOLDEN_ITERS {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = f(x1);
        }
    }
    grid[k].max(f1).max(f2)
}

pub fn reducedness_check(body: &ConvexBody, tol: f64) -> Result<ReducednessReport> {
    reducedness_check_with(body, &ReducednessOptions { tol, ..Default::default() })
}

pub fn reducedness_check_with(body: &ConvexBody, opts: &ReducednessOptions) -> Result<ReducednessReport> {
    let delta = thickness(body)?.value;
    let arcs = body.arcs();
    let mut probes: Vec<(BoundaryPoint, SupportFeature)> = Vec::new();
    let ext = extreme_points(body);
    for p in &ext.isolated {
        if let Location::Vertex(i) = p.location {
            probes.push((*p, body.normal_cone(i)));
        }
    }
    for (i, arc) in &ext.arcs {
        for j in 0..opts.arc_samples {
            let x = arc.point_at_fraction((j as f64 + 0.5) / opts.arc_samples as f64);
            let point = BoundaryPoint { point: x, location: Location::Edge(*i) };
            probes.push((point, SupportFeature::Point(arc.support_at(&x))));
        }
    }
    let candidates: Vec<CandidateResult> = probes
        .iter()
        .map(|(p, cone)| {
            let best_thickness = PI - best_over_cone(arcs, cone, &p.point);
            CandidateResult { point: *p, best_thickness, pass: best_thickness <= delta + opts.tol }
        })
        .collect();
    let pass = candidates.iter().all(|c| c.pass);
    Ok(ReducednessReport { thickness: delta, tol: opts.tol, candidates, pass })
}

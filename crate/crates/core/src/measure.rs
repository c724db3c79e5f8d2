//! Diameter and extreme points.
//!
//! The diameter of a body is attained on its boundary. For two boundary
//! features the distance is maximized either at an endpoint (handled by the
//! closed-form farthest point on an arc) or at an interior critical pair,
//! where the connecting great circle is orthogonal to both edges and so
//! passes through both circle centers. Enumerating those candidates is exact
//! for geodesic and circular edges.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::arc::CircleArc;
use crate::body::{BoundaryPoint, ConvexBody, Location, TURN_TOL};
use crate::sphere::{dist, UnitPoint};

/// Tolerance for reporting ties among realizing pairs.
pub const TIE_TOL: f64 = 1e-9;

/// The diameter and every pair realizing it within [`TIE_TOL`].
#[derive(Clone, Debug)]
pub struct Diameter {
    pub value: f64,
    pub pairs: Vec<(BoundaryPoint, BoundaryPoint)>,
}

/// How a realizing pair sits on the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairKind {
    VertexVertex,
    VertexEdge,
    EdgeEdge,
}

pub fn pair_kind(a: &BoundaryPoint, b: &BoundaryPoint) -> PairKind {
    match (a.location, b.location) {
        (Location::Vertex(_), Location::Vertex(_)) => PairKind::VertexVertex,
        (Location::Edge(_), Location::Edge(_)) => PairKind::EdgeEdge,
        _ => PairKind::VertexEdge,
    }
}

/// Extreme points: vertices with a strict turn, plus every strictly curved
/// edge (all of whose points are extreme).
#[derive(Clone, Debug)]
pub struct ExtremeSet {
    pub isolated: Vec<BoundaryPoint>,
    pub arcs: Vec<(usize, CircleArc)>,
}

enum Piece {
    Point(BoundaryPoint),
    Arc(usize, CircleArc),
}

/// Interior critical pairs of `<x, y>` over two circle arcs.
fn interior_pairs(a1: &CircleArc, a2: &CircleArc) -> Vec<(UnitPoint, UnitPoint)> {
    let c1 = a1.center();
    let c2 = a2.center();
    let cross = c1.vector().cross(c2.vector());
    let mut out = Vec::new();
    if cross.norm() >= 1e-9 {
        let cos12 = c1.dot(&c2);
        let d1 = (c2.vector() - c1.vector() * cos12).normalize();
        let d2 = (c1.vector() - c2.vector() * cos12).normalize();
        for s1 in [1.0, -1.0] {
            let t1 = d1 * s1;
            if !a1.contains_angle(a1.angle_of(&t1)) {
                continue;
            }
            let x = c1.toward(&t1, a1.radius());
            for s2 in [1.0, -1.0] {
                let t2 = d2 * s2;
                if a2.contains_angle(a2.angle_of(&t2)) {
                    out.push((x, c2.toward(&t2, a2.radius())));
                }
            }
        }
        return out;
    }
    // coaxial circles: parametrize both in a1's frame
    let same = c1.dot(&c2) > 0.0;
    let r2 = if same { a2.radius() } else { PI - a2.radius() };
    let lo2 = if same { a1.angle_of(a2.start_point().vector()) } else { a1.angle_of(a2.end_point().vector()) };
    let (s1, sw1, sw2) = (a1.start_angle(), a1.sweep(), a2.sweep());
    let (dlo, dhi) = (s1 - (lo2 + sw2), s1 + sw1 - lo2);
    let k = ((dlo - PI) / TAU).ceil();
    let target = PI + TAU * k;
    let d = if target <= dhi {
        target
    } else if dlo.cos() <= dhi.cos() {
        dlo
    } else {
        dhi
    };
    let theta = s1.max(lo2 + d);
    let phi = theta - d;
    let (e1, e2) = a1.frame();
    let x = a1.point_at(theta);
    let y = c1.toward(&(e1 * phi.cos() + e2 * phi.sin()), r2);
    out.push((x, y));
    out
}

fn max_distance(pieces: &[Piece], locate: impl Fn(usize, &UnitPoint) -> Location) -> Diameter {
    let mut cands: Vec<(f64, BoundaryPoint, BoundaryPoint)> = Vec::new();
    let on_arc = |i: usize, x: UnitPoint| BoundaryPoint { point: x, location: locate(i, &x) };
    let mut push = |a: BoundaryPoint, b: BoundaryPoint| cands.push((dist(&a.point, &b.point), a, b));
    for (i, pi) in pieces.iter().enumerate() {
        for pj in &pieces[i..] {
            match (pi, pj) {
                (Piece::Point(a), Piece::Point(b)) => push(*a, *b),
                (Piece::Point(a), Piece::Arc(k, arc)) | (Piece::Arc(k, arc), Piece::Point(a)) => {
                    let (y, _) = arc.min_dot(a.point.vector());
                    push(*a, on_arc(*k, y));
                }
                (Piece::Arc(k1, a1), Piece::Arc(k2, a2)) => {
                    for x in [a1.start_point(), a1.end_point()] {
                        let (y, _) = a2.min_dot(x.vector());
                        push(on_arc(*k1, x), on_arc(*k2, y));
                    }
                    for y in [a2.start_point(), a2.end_point()] {
                        let (x, _) = a1.min_dot(y.vector());
                        push(on_arc(*k1, x), on_arc(*k2, y));
                    }
                    for (x, y) in interior_pairs(a1, a2) {
                        push(on_arc(*k1, x), on_arc(*k2, y));
                    }
                }
            }
        }
    }
    let value = cands.iter().map(|c| c.0).fold(0.0, f64::max);
    let mut pairs: Vec<(BoundaryPoint, BoundaryPoint)> = Vec::new();
    for (d, a, b) in cands {
        if d < value - TIE_TOL {
            continue;
        }
        let seen = pairs.iter().any(|(p, q)| {
            (p.point.approx_eq(&a.point, TIE_TOL) && q.point.approx_eq(&b.point, TIE_TOL))
                || (p.point.approx_eq(&b.point, TIE_TOL) && q.point.approx_eq(&a.point, TIE_TOL))
        });
        if !seen {
            pairs.push((a, b));
        }
    }
    Diameter { value, pairs }
}

/// Diameter of a body with all realizing pairs.
pub fn diameter(body: &ConvexBody) -> Diameter {
    let mut pieces: Vec<Piece> = body
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| Piece::Point(BoundaryPoint { point: *v, location: Location::Vertex(i) }))
        .collect();
    pieces.extend(body.arcs().iter().enumerate().map(|(i, a)| Piece::Arc(i, *a)));
    max_distance(&pieces, |i, x| body.locate_on_edge(i, x, TIE_TOL))
}

pub fn extreme_points(body: &ConvexBody) -> ExtremeSet {
    let isolated = body
        .vertices()
        .iter()
        .zip(body.turns())
        .enumerate()
        .filter(|(_, (_, t))| **t > TURN_TOL)
        .map(|(i, (v, _))| BoundaryPoint { point: *v, location: Location::Vertex(i) })
        .collect();
    let arcs = body.arcs().iter().enumerate().filter(|(_, a)| !a.is_geodesic()).map(|(i, a)| (i, *a)).collect();
    ExtremeSet { isolated, arcs }
}

/// Diameter of the set of extreme points.
pub fn diameter_of_extreme(body: &ConvexBody) -> Diameter {
    let ext = extreme_points(body);
    let mut pieces: Vec<Piece> = ext.isolated.into_iter().map(Piece::Point).collect();
    pieces.extend(ext.arcs.into_iter().map(|(i, a)| Piece::Arc(i, a)));
    max_distance(&pieces, |i, x| body.locate_on_edge(i, x, TIE_TOL))
}

/// Largest distance among `per_edge + 1` samples on every edge; a lower
/// bound on the diameter used to cross-check the candidate enumeration.
pub fn sampled_diameter(body: &ConvexBody, per_edge: usize) -> f64 {
    let pts = body.boundary_samples(per_edge);
    let (mut best, mut pair) = (f64::INFINITY, (pts[0], pts[0]));
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            let d = a.dot(b);
            if d < best {
                best = d;
                pair = (*a, *b);
            }
        }
    }
    let (pa, pb) = pair;
    dist(&pa, &pb)
}

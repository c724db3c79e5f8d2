//! Convex bodies bounded by geodesic and circular edges.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use nalgebra::Rotation3;
use serde::{Deserialize, Serialize};

use crate::arc::CircleArc;
use crate::error::{GeometryError, Result};
use crate::sphere::{dist, UnitPoint, Vec3, GEOM_TOL};

/// Tolerance for boundary closure, circle membership and containment.
pub const BOUNDARY_TOL: f64 = 1e-10;

/// Turning angle below which a vertex counts as collinear.
pub const TURN_TOL: f64 = 1e-9;

/// Which side of a circular edge's small circle holds the body.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// The side containing the circle's center.
    Center,
    /// The side containing the antipode of the center.
    Anticenter,
}

impl Side {
    pub fn sign(self) -> i8 {
        match self {
            Side::Center => 1,
            Side::Anticenter => -1,
        }
    }

    pub fn from_sign(s: i8) -> Option<Side> {
        match s {
            1 => Some(Side::Center),
            -1 => Some(Side::Anticenter),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EdgeKind {
    Geodesic,
    Circular { center: UnitPoint, radius: f64, side: Side },
}

/// A boundary edge, ending at `end`; it starts where the previous edge ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub kind: EdgeKind,
    pub end: UnitPoint,
}

impl Edge {
    pub fn geodesic(end: UnitPoint) -> Self {
        Edge { kind: EdgeKind::Geodesic, end }
    }

    pub fn circular(end: UnitPoint, center: UnitPoint, radius: f64, side: Side) -> Self {
        Edge { kind: EdgeKind::Circular { center, radius, side }, end }
    }
}

/// A boundary location: a vertex or the relative interior of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "feature", content = "index", rename_all = "snake_case")]
pub enum Location {
    Vertex(usize),
    Edge(usize),
}

/// A point on a body's boundary together with where it lies.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub point: UnitPoint,
    pub location: Location,
}

/// A piece of the polar dual's boundary: a single supporting-hemisphere
/// center, or an arc of them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SupportFeature {
    Point(UnitPoint),
    Arc(CircleArc),
}

impl SupportFeature {
    pub fn min_dot(&self, q: &Vec3) -> (UnitPoint, f64) {
        match self {
            SupportFeature::Point(p) => (*p, q.dot(p.vector())),
            SupportFeature::Arc(a) => a.min_dot(q),
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            SupportFeature::Point(_) => 0.0,
            SupportFeature::Arc(a) => a.length(),
        }
    }

    pub fn point_at_fraction(&self, t: f64) -> UnitPoint {
        match self {
            SupportFeature::Point(p) => *p,
            SupportFeature::Arc(a) => a.point_at_fraction(t),
        }
    }
}

fn hemisphere_margin(points: &[Vec3], w: &Vec3) -> f64 {
    points.iter().map(|p| p.dot(w)).fold(f64::INFINITY, f64::min)
}

/// Direction `w` with `<p, w> > 0` for every point, or `None` when none is
/// found. Starts from the centroid and falls back to the minimum enclosing
/// ball iteration, which maximizes the smallest dot product.
pub(crate) fn witness_direction(points: &[Vec3]) -> Option<UnitPoint> {
    let first = *points.first()?;
    let centroid: Vec3 = points.iter().sum();
    if centroid.norm() > 1e-12 {
        let w = centroid.normalize();
        if hemisphere_margin(points, &w) > 1e-6 {
            return Some(UnitPoint::normalized(w));
        }
    }
    let mut center = first;
    for k in 1..20_000usize {
        let dir = if center.norm() > 1e-300 { center.normalize() } else { first };
        let far = points.iter().min_by(|a, b| a.dot(&dir).total_cmp(&b.dot(&dir))).expect("nonempty");
        center += (far - center) / (k as f64 + 1.0);
        if k % 32 == 0 && center.norm() > 1e-12 && hemisphere_margin(points, &center.normalize()) > 1e-6 {
            break;
        }
    }
    if center.norm() < 1e-12 {
        return None;
    }
    let w = center.normalize();
    (hemisphere_margin(points, &w) > GEOM_TOL).then(|| UnitPoint::normalized(w))
}

/// A closed convex region of the sphere with nonempty interior, contained in
/// an open hemisphere, whose boundary is a counterclockwise cycle of
/// geodesic and circular edges (interior on the left, viewed from outside).
#[derive(Clone, Debug)]
pub struct ConvexBody {
    edges: Vec<Edge>,
    arcs: Vec<CircleArc>,
    vertices: Vec<UnitPoint>,
    turns: Vec<f64>,
    witness: UnitPoint,
}

impl PartialEq for ConvexBody {
    fn eq(&self, other: &Self) -> bool {
        self.start() == other.start() && self.edges == other.edges
    }
}

impl ConvexBody {
    /// Builds and validates a body from its start point and edge cycle. The
    /// last edge must end at `start`.
    pub fn new(start: UnitPoint, edges: Vec<Edge>) -> Result<Self> {
        let n = edges.len();
        if n < 2 {
            return Err(GeometryError::DegenerateInput("fewer than two edges"));
        }
        let last = edges[n - 1].end;
        if dist(&last, &start) > BOUNDARY_TOL {
            return Err(GeometryError::NotClosed(n - 1, 0));
        }
        let mut vertices = Vec::with_capacity(n);
        vertices.push(start);
        vertices.extend(edges[..n - 1].iter().map(|e| e.end));
        let mut arcs = Vec::with_capacity(n);
        for (i, edge) in edges.iter().enumerate() {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let arc = match edge.kind {
                EdgeKind::Geodesic => CircleArc::geodesic(&a, &b)?,
                EdgeKind::Circular { center, radius, side } => {
                    let (c, r) = canonical_circle(i, center, radius, side)?;
                    CircleArc::about(&c, r, &a, &b, BOUNDARY_TOL).map_err(|e| match e {
                        GeometryError::OffCircle { offset, .. } => GeometryError::OffCircle { edge: i, offset },
                        other => other,
                    })?
                }
            };
            arcs.push(arc);
        }
        Self::validated(edges, arcs, vertices, None)
    }

    /// Geodesic polygon through `vertices` in counterclockwise order.
    pub fn polygon(vertices: &[UnitPoint]) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeometryError::DegenerateInput("polygon needs three vertices"));
        }
        let mut edges: Vec<Edge> = vertices[1..].iter().map(|v| Edge::geodesic(*v)).collect();
        edges.push(Edge::geodesic(vertices[0]));
        Self::new(vertices[0], edges)
    }

    /// Builds a body directly from canonical arcs; `hint` is tried first as
    /// the witness direction.
    pub(crate) fn from_arcs(arcs: Vec<CircleArc>, hint: Option<UnitPoint>) -> Result<Self> {
        let n = arcs.len();
        if n < 2 {
            return Err(GeometryError::DegenerateInput("fewer than two edges"));
        }
        let vertices: Vec<UnitPoint> = arcs.iter().map(|a| a.start_point()).collect();
        for (i, a) in arcs.iter().enumerate() {
            let j = (i + 1) % n;
            if dist(&a.end_point(), &vertices[j]) > BOUNDARY_TOL {
                return Err(GeometryError::NotClosed(i, j));
            }
        }
        let edges = arcs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let end = vertices[(i + 1) % n];
                if a.is_geodesic() {
                    Edge::geodesic(end)
                } else {
                    Edge::circular(end, a.center(), a.radius(), Side::Center)
                }
            })
            .collect();
        Self::validated(edges, arcs, vertices, hint)
    }

    fn validated(
        edges: Vec<Edge>,
        arcs: Vec<CircleArc>,
        vertices: Vec<UnitPoint>,
        hint: Option<UnitPoint>,
    ) -> Result<Self> {
        let n = arcs.len();
        let mut turns = Vec::with_capacity(n);
        for i in 0..n {
            let v = &vertices[i];
            let t_in = arcs[(i + n - 1) % n].tangent_at(v);
            let t_out = arcs[i].tangent_at(v);
            let turn = t_in.cross(&t_out).dot(v.vector()).atan2(t_in.dot(&t_out));
            if !(-TURN_TOL..=PI - TURN_TOL).contains(&turn) {
                return Err(GeometryError::NotConvexAt(i));
            }
            turns.push(turn);
        }
        let total: f64 = turns.iter().sum::<f64>() + arcs.iter().map(CircleArc::turning).sum::<f64>();
        if !(total > TURN_TOL && total < TAU - TURN_TOL) {
            return Err(GeometryError::BadTurning(total));
        }
        let clears = |w: &UnitPoint| arcs.iter().all(|a| a.min_dot(w.vector()).1 > GEOM_TOL);
        let witness = match hint.filter(|w| clears(w)) {
            Some(w) => w,
            None => {
                let mut probes: Vec<Vec3> = Vec::with_capacity(n * 5);
                for a in &arcs {
                    probes.extend(a.sample(4).iter().map(|p| *p.vector()));
                }
                witness_direction(&probes).ok_or(GeometryError::NoWitnessHemisphere)?
            }
        };
        let body = ConvexBody { edges, arcs, vertices, turns, witness };
        if body.arcs.iter().any(|a| a.min_dot(witness.vector()).1 <= GEOM_TOL) {
            return Err(GeometryError::NoWitnessHemisphere);
        }
        // every vertex and edge midpoint lies in every supporting hemisphere
        let features = body.support_features();
        for (i, a) in body.arcs.iter().enumerate() {
            for x in [body.vertices[i], a.point_at_fraction(0.5)] {
                if features.iter().any(|f| f.min_dot(x.vector()).1 < -BOUNDARY_TOL) {
                    return Err(GeometryError::NotConvexAt(i));
                }
            }
        }
        Ok(body)
    }

    pub fn start(&self) -> UnitPoint {
        self.vertices[0]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Canonical arcs; arc `i` runs from vertex `i` to vertex `i + 1`.
    pub fn arcs(&self) -> &[CircleArc] {
        &self.arcs
    }

    pub fn vertices(&self) -> &[UnitPoint] {
        &self.vertices
    }

    /// Turning angle at each vertex, in `[-1e-9, pi)`.
    pub fn turns(&self) -> &[f64] {
        &self.turns
    }

    /// A direction `w` with `<x, w> > 0` for every point of the body.
    pub fn witness(&self) -> UnitPoint {
        self.witness
    }

    pub fn is_polygon(&self) -> bool {
        self.arcs.iter().all(CircleArc::is_geodesic)
    }

    /// Supporting-hemisphere centers at vertex `i`: the arc from the normal of
    /// the incoming edge to the normal of the outgoing edge.
    pub fn normal_cone(&self, i: usize) -> SupportFeature {
        let n = self.arcs.len();
        let v = self.vertices[i];
        let t_in = self.arcs[(i + n - 1) % n].tangent_at(&v);
        let u_in = v.vector().cross(&t_in).normalize();
        let turn = self.turns[i];
        if turn <= GEOM_TOL {
            return SupportFeature::Point(UnitPoint::normalized(u_in));
        }
        let e2 = v.vector().cross(&u_in);
        SupportFeature::Arc(CircleArc::from_angles(v, FRAC_PI_2, u_in, e2, 0.0, turn))
    }

    /// Supporting-hemisphere centers along edge `i`: the pole of a geodesic
    /// edge, or an arc of radius `pi/2 - r` about a circular edge's center.
    pub fn edge_support(&self, i: usize) -> SupportFeature {
        let a = &self.arcs[i];
        if a.is_geodesic() {
            return SupportFeature::Point(a.center());
        }
        let (e1, e2) = a.frame();
        SupportFeature::Arc(CircleArc::from_angles(
            a.center(),
            FRAC_PI_2 - a.radius(),
            e1,
            e2,
            a.start_angle() + PI,
            a.sweep(),
        ))
    }

    /// The boundary of the polar dual, in cyclic order: edge `i`'s support,
    /// then vertex `i + 1`'s normal cone.
    pub fn support_features(&self) -> Vec<SupportFeature> {
        let n = self.arcs.len();
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            out.push(self.edge_support(i));
            out.push(self.normal_cone((i + 1) % n));
        }
        out
    }

    /// True iff `x` lies in the body, boundary included (tolerance 1e-10).
    pub fn contains(&self, x: &UnitPoint) -> bool {
        self.contains_with_tol(x, BOUNDARY_TOL)
    }

    pub fn contains_with_tol(&self, x: &UnitPoint, tol: f64) -> bool {
        self.support_features().iter().all(|f| f.min_dot(x.vector()).1 >= -tol)
    }

    /// Minimum of `<x, q>` over the body.
    pub fn min_dot(&self, q: &Vec3) -> (UnitPoint, f64) {
        let anti = UnitPoint::normalized(-q);
        if self.contains_with_tol(&anti, 0.0) {
            return (anti, -1.0);
        }
        self.arcs.iter().map(|a| a.min_dot(q)).min_by(|a, b| a.1.total_cmp(&b.1)).expect("nonempty")
    }

    /// Classifies a boundary point found on arc `i`.
    pub fn locate_on_edge(&self, i: usize, x: &UnitPoint, tol: f64) -> Location {
        let n = self.arcs.len();
        if x.approx_eq(&self.vertices[i], tol) {
            Location::Vertex(i)
        } else if x.approx_eq(&self.vertices[(i + 1) % n], tol) {
            Location::Vertex((i + 1) % n)
        } else {
            Location::Edge(i)
        }
    }

    /// `per_edge + 1` points along each edge (shared endpoints repeated).
    pub fn boundary_samples(&self, per_edge: usize) -> Vec<UnitPoint> {
        self.arcs.iter().flat_map(|a| a.sample(per_edge)).collect()
    }

    pub fn perimeter(&self) -> f64 {
        self.arcs.iter().map(CircleArc::length).sum()
    }

    /// A point strictly inside the body: the normalized sum of its vertices
    /// and edge midpoints.
    pub fn interior_point(&self) -> UnitPoint {
        let sum: Vec3 = self.arcs.iter().map(|a| a.start_point().vector() + a.point_at_fraction(0.5).vector()).sum();
        UnitPoint::normalized(sum)
    }

    /// Image of the body under a rotation of the sphere.
    pub fn rotated(&self, rotation: &Rotation3<f64>) -> ConvexBody {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge {
                end: e.end.rotated(rotation),
                kind: match e.kind {
                    EdgeKind::Geodesic => EdgeKind::Geodesic,
                    EdgeKind::Circular { center, radius, side } => {
                        EdgeKind::Circular { center: center.rotated(rotation), radius, side }
                    }
                },
            })
            .collect();
        ConvexBody::new(self.start().rotated(rotation), edges).expect("rotation preserves validity")
    }
}

/// Plain serialized form of an edge cycle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodyData {
    pub start: [f64; 3],
    pub edges: Vec<EdgeData>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EdgeData {
    Geodesic { to: [f64; 3] },
    Circular { to: [f64; 3], center: [f64; 3], radius: f64, side: i8 },
}

impl ConvexBody {
    pub fn to_data(&self) -> BodyData {
        let edges = self
            .edges
            .iter()
            .map(|e| match e.kind {
                EdgeKind::Geodesic => EdgeData::Geodesic { to: e.end.to_array() },
                EdgeKind::Circular { center, radius, side } => {
                    EdgeData::Circular { to: e.end.to_array(), center: center.to_array(), radius, side: side.sign() }
                }
            })
            .collect();
        BodyData { start: self.start().to_array(), edges }
    }

    pub fn from_data(data: &BodyData) -> Result<Self> {
        let edges = data
            .edges
            .iter()
            .map(|e| match *e {
                EdgeData::Geodesic { to } => Ok(Edge::geodesic(UnitPoint::try_from(to)?)),
                EdgeData::Circular { to, center, radius, side } => {
                    let side =
                        Side::from_sign(side).ok_or(GeometryError::OutOfRange { name: "side", value: side as f64 })?;
                    Ok(Edge::circular(UnitPoint::try_from(to)?, UnitPoint::try_from(center)?, radius, side))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ConvexBody::new(UnitPoint::try_from(data.start)?, edges)
    }
}

/// Circle of an edge with the body on its convex side, as `(center, radius)`
/// with radius at most `pi/2`.
fn canonical_circle(i: usize, center: UnitPoint, radius: f64, side: Side) -> Result<(UnitPoint, f64)> {
    if !(radius > 0.0 && radius < PI) {
        return Err(GeometryError::OutOfRange { name: "radius", value: radius });
    }
    let right = (radius - FRAC_PI_2).abs() <= GEOM_TOL;
    match side {
        Side::Center if radius <= FRAC_PI_2 || right => Ok((center, radius.min(FRAC_PI_2))),
        Side::Anticenter if radius >= FRAC_PI_2 || right => Ok((center.antipode(), (PI - radius).min(FRAC_PI_2))),
        _ => Err(GeometryError::ConcaveEdge(i)),
    }
}

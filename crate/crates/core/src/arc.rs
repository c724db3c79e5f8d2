//! Geodesic arcs and arcs of small circles.
//!
//! Every boundary edge of a convex body is stored as a [`CircleArc`]: an arc of
//! the circle of angular radius `r <= pi/2` about `center`, traversed
//! counterclockwise when viewed from outside the sphere. A geodesic edge is
//! the special case `r = pi/2` about its left pole, so one set of closed-form
//! extremum routines serves both edge kinds.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{GeometryError, Result};
use crate::sphere::{dist, UnitPoint, Vec3, GEOM_TOL};

/// Reduces an angle to `[0, 2pi)`.
pub(crate) fn wrap_tau(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Arc of the circle of radius `radius` about `center`, from angle `start`
/// through `sweep` radians counterclockwise, in the tangent frame `(e1, e2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleArc {
    center: UnitPoint,
    radius: f64,
    e1: Vec3,
    e2: Vec3,
    start: f64,
    sweep: f64,
}

impl CircleArc {
    /// Shorter great-circle arc from `a` to `b`.
    pub fn geodesic(a: &UnitPoint, b: &UnitPoint) -> Result<Self> {
        let n = a.vector().cross(b.vector());
        let len = dist(a, b);
        if n.norm() < GEOM_TOL || len <= GEOM_TOL {
            return Err(GeometryError::EqualOrAntipodal);
        }
        if len >= PI - GEOM_TOL {
            return Err(GeometryError::ArcTooLong);
        }
        let pole = UnitPoint::normalized(n);
        let e1 = *a.vector();
        let e2 = pole.vector().cross(&e1);
        Ok(CircleArc { center: pole, radius: FRAC_PI_2, e1, e2, start: 0.0, sweep: len })
    }

    /// Counterclockwise arc about `center` from `a` to `b`. Both endpoints must
    /// lie at distance `radius` from the center within `tol`.
    pub fn about(center: &UnitPoint, radius: f64, a: &UnitPoint, b: &UnitPoint, tol: f64) -> Result<Self> {
        if !(radius > 0.0 && radius <= FRAC_PI_2 + GEOM_TOL) {
            return Err(GeometryError::OutOfRange { name: "radius", value: radius });
        }
        let radius = if (radius - FRAC_PI_2).abs() <= GEOM_TOL { FRAC_PI_2 } else { radius };
        for q in [a, b] {
            let off = (dist(center, q) - radius).abs();
            if off > tol {
                return Err(GeometryError::OffCircle { edge: 0, offset: off });
            }
        }
        let (e1, e2) = center.tangent_frame();
        let ang = |q: &UnitPoint| q.vector().dot(&e2).atan2(q.vector().dot(&e1));
        let start = ang(a);
        let sweep = wrap_tau(ang(b) - start);
        if sweep <= GEOM_TOL || a.approx_eq(b, GEOM_TOL) {
            return Err(GeometryError::DegenerateInput("circular edge of zero or full turn"));
        }
        Ok(CircleArc { center: *center, radius, e1, e2, start, sweep })
    }

    /// Arc with explicit frame angles. `e1`, `e2` must be an orthonormal
    /// tangent frame at `center` with `e1 x e2 = center`.
    pub(crate) fn from_angles(center: UnitPoint, radius: f64, e1: Vec3, e2: Vec3, start: f64, sweep: f64) -> Self {
        CircleArc { center, radius, e1, e2, start, sweep }
    }

    pub fn center(&self) -> UnitPoint {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn frame(&self) -> (Vec3, Vec3) {
        (self.e1, self.e2)
    }

    pub fn start_angle(&self) -> f64 {
        self.start
    }

    pub fn sweep(&self) -> f64 {
        self.sweep
    }

    pub fn is_geodesic(&self) -> bool {
        self.radius == FRAC_PI_2
    }

    /// Arc length.
    pub fn length(&self) -> f64 {
        self.sweep * self.radius.sin()
    }

    /// Integral of geodesic curvature along the arc.
    pub fn turning(&self) -> f64 {
        if self.is_geodesic() {
            0.0
        } else {
            self.sweep * self.radius.cos()
        }
    }

    /// Point at absolute frame angle `theta`.
    pub fn point_at(&self, theta: f64) -> UnitPoint {
        let (s, c) = theta.sin_cos();
        let dir = self.e1 * c + self.e2 * s;
        self.center.toward(&dir, self.radius)
    }

    /// Point at fraction `t` in `[0, 1]` along the arc.
    pub fn point_at_fraction(&self, t: f64) -> UnitPoint {
        self.point_at(self.start + t * self.sweep)
    }

    pub fn start_point(&self) -> UnitPoint {
        self.point_at(self.start)
    }

    pub fn end_point(&self) -> UnitPoint {
        self.point_at(self.start + self.sweep)
    }

    /// Frame angle of the projection of `v` onto the tangent plane at the center.
    pub fn angle_of(&self, v: &Vec3) -> f64 {
        v.dot(&self.e2).atan2(v.dot(&self.e1))
    }

    /// Offset of `theta` from the start, in `[0, 2pi)`.
    pub fn offset_of(&self, theta: f64) -> f64 {
        wrap_tau(theta - self.start)
    }

    pub fn contains_angle(&self, theta: f64) -> bool {
        let off = self.offset_of(theta);
        off <= self.sweep || off >= TAU - 1e-15
    }

    /// Unit tangent in the direction of travel at a point of the arc.
    pub fn tangent_at(&self, x: &UnitPoint) -> Vec3 {
        self.center.vector().cross(x.vector()).normalize()
    }

    /// Center of the hemisphere supporting the arc's convex side at `x`.
    pub fn support_at(&self, x: &UnitPoint) -> UnitPoint {
        UnitPoint::normalized(x.vector().cross(&self.tangent_at(x)))
    }

    /// Supporting-hemisphere center at frame angle `theta`; lies on the circle
    /// of radius `pi/2 - r` about the center at angle `theta + pi`.
    pub fn support_at_angle(&self, theta: f64) -> UnitPoint {
        let (s, c) = (theta + PI).sin_cos();
        let dir = self.e1 * c + self.e2 * s;
        self.center.toward(&dir, FRAC_PI_2 - self.radius)
    }

    fn extremum_dot(&self, q: &Vec3, minimize: bool) -> (UnitPoint, f64) {
        let a = q.dot(&self.e1);
        let b = q.dot(&self.e2);
        let s = self.start_point();
        let e = self.end_point();
        let better = |x: f64, y: f64| if minimize { x < y } else { x > y };
        let mut best = (s, q.dot(s.vector()));
        let de = q.dot(e.vector());
        if better(de, best.1) {
            best = (e, de);
        }
        if a.hypot(b) > 1e-15 {
            let mut theta = b.atan2(a);
            if minimize {
                theta += PI;
            }
            if self.contains_angle(theta) {
                let x = self.point_at(theta);
                let dx = q.dot(x.vector());
                if better(dx, best.1) {
                    best = (x, dx);
                }
            }
        }
        best
    }

    /// Point of the arc minimizing `<q, x>` (the farthest point from `q`).
    pub fn min_dot(&self, q: &Vec3) -> (UnitPoint, f64) {
        self.extremum_dot(q, true)
    }

    /// Point of the arc maximizing `<q, x>` (the nearest point to `q`).
    pub fn max_dot(&self, q: &Vec3) -> (UnitPoint, f64) {
        self.extremum_dot(q, false)
    }

    /// `n + 1` evenly spaced points from start to end.
    pub fn sample(&self, n: usize) -> Vec<UnitPoint> {
        (0..=n).map(|k| self.point_at_fraction(k as f64 / n as f64)).collect()
    }
}

/// The shorter great-circle arc between two points.
///
/// Zero-length arcs are allowed and behave as their single point; arcs of
/// length `pi` or more are rejected.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    a: UnitPoint,
    b: UnitPoint,
    inner: Option<CircleArc>,
}

impl Arc {
    pub fn new(a: UnitPoint, b: UnitPoint) -> Result<Self> {
        if a.approx_eq(&b, GEOM_TOL) {
            return Ok(Arc { a, b: a, inner: None });
        }
        if a.dot(&b) <= -1.0 + GEOM_TOL {
            return Err(GeometryError::EqualOrAntipodal);
        }
        let inner = Some(CircleArc::geodesic(&a, &b)?);
        Ok(Arc { a, b, inner })
    }

    pub fn start(&self) -> UnitPoint {
        self.a
    }

    pub fn end(&self) -> UnitPoint {
        self.b
    }

    pub fn length(&self) -> f64 {
        dist(&self.a, &self.b)
    }

    pub fn point_at_fraction(&self, t: f64) -> UnitPoint {
        match &self.inner {
            Some(c) => c.point_at_fraction(t),
            None => self.a,
        }
    }

    pub fn as_circle_arc(&self) -> Option<&CircleArc> {
        self.inner.as_ref()
    }
}

/// Farthest point of `arc` from `q` and its distance.
///
/// Candidates are the endpoints and the antipode of `q`'s projection onto the
/// carrier great circle when that antipode lies on the arc.
pub fn farthest_on_arc(q: &UnitPoint, arc: &Arc) -> (UnitPoint, f64) {
    match &arc.inner {
        Some(c) => {
            let (x, _) = c.min_dot(q.vector());
            (x, dist(q, &x))
        }
        None => (arc.a, dist(q, &arc.a)),
    }
}

/// Nearest point of `arc` to `q` and its distance.
pub fn nearest_on_arc(q: &UnitPoint, arc: &Arc) -> (UnitPoint, f64) {
    match &arc.inner {
        Some(c) => {
            let (x, _) = c.max_dot(q.vector());
            (x, dist(q, &x))
        }
        None => (arc.a, dist(q, &arc.a)),
    }
}

//! Points, hemispheres, semicircles and lunes on the unit sphere.
//!
//! All angles are in radians. Distances use the two-argument arctangent of
//! `(|a x b|, a . b)`, which stays accurate near `0` and `pi`.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Rotation3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};

/// Library-wide tolerance for equality, antipodality and orthogonality tests.
pub const GEOM_TOL: f64 = 1e-12;

pub type Vec3 = Vector3<f64>;

/// A point of the unit sphere, stored as a unit 3-vector.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct UnitPoint(Vec3);

impl UnitPoint {
    pub const NORTH: UnitPoint = UnitPoint(Vec3::new(0.0, 0.0, 1.0));

    /// Normalizes `(x, y, z)` onto the sphere.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_vector(Vec3::new(x, y, z))
    }

    pub fn from_vector(v: Vec3) -> Result<Self> {
        let n = v.norm();
        if !n.is_finite() || n < 1e-300 {
            return Err(GeometryError::Degenerate([v.x, v.y, v.z]));
        }
        Ok(UnitPoint(v / n))
    }

    /// Normalizes a vector that is known to be far from zero.
    pub(crate) fn normalized(v: Vec3) -> Self {
        debug_assert!(v.norm() > 1e-300);
        UnitPoint(v.normalize())
    }

    pub fn vector(&self) -> &Vec3 {
        &self.0
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    pub fn dot(&self, other: &UnitPoint) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn antipode(&self) -> UnitPoint {
        UnitPoint(-self.0)
    }

    pub fn rotated(&self, rotation: &Rotation3<f64>) -> UnitPoint {
        UnitPoint::normalized(rotation * self.0)
    }

    /// Point at distance `angle` from `self` in the unit tangent direction `tangent`.
    pub fn toward(&self, tangent: &Vec3, angle: f64) -> UnitPoint {
        UnitPoint::normalized(self.0 * angle.cos() + tangent * angle.sin())
    }

    /// True when the two points coincide within [`GEOM_TOL`].
    pub fn approx_eq(&self, other: &UnitPoint, tol: f64) -> bool {
        dist(self, other) <= tol
    }

    /// Parallel-transport-free orthonormal tangent frame `(e1, e2)` at `self`
    /// with `e1 x e2 = self`.
    pub fn tangent_frame(&self) -> (Vec3, Vec3) {
        let c = self.0;
        let axis = if c.x.abs() <= c.y.abs() && c.x.abs() <= c.z.abs() {
            Vec3::x()
        } else if c.y.abs() <= c.z.abs() {
            Vec3::y()
        } else {
            Vec3::z()
        };
        let e1 = (axis - c * c.dot(&axis)).normalize();
        let e2 = c.cross(&e1);
        (e1, e2)
    }
}

impl TryFrom<[f64; 3]> for UnitPoint {
    type Error = GeometryError;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        UnitPoint::new(v[0], v[1], v[2])
    }
}

impl From<UnitPoint> for [f64; 3] {
    fn from(p: UnitPoint) -> Self {
        p.to_array()
    }
}

/// Great-circle distance in `[0, pi]`.
pub fn dist(a: &UnitPoint, b: &UnitPoint) -> f64 {
    a.0.cross(&b.0).norm().atan2(a.0.dot(&b.0))
}

/// Hypotenuse of a right spherical triangle with legs `l1`, `l2`:
/// `cos k = cos l1 cos l2`.
pub fn right_hypotenuse(l1: f64, l2: f64) -> Result<f64> {
    for (name, v) in [("l1", l1), ("l2", l2)] {
        if !(0.0..=FRAC_PI_2).contains(&v) {
            return Err(GeometryError::OutOfRange { name, value: v });
        }
    }
    Ok((l1.cos() * l2.cos()).clamp(-1.0, 1.0).acos())
}

/// The closed hemisphere `{x : <x, center> >= 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hemisphere {
    pub center: UnitPoint,
}

impl Hemisphere {
    pub fn new(center: UnitPoint) -> Self {
        Hemisphere { center }
    }

    pub fn contains(&self, x: &UnitPoint, tol: f64) -> bool {
        self.center.dot(x) >= -tol
    }
}

/// Half of a great circle: the points of the circle with pole `pole` lying
/// within `pi/2` of `center`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Semicircle {
    pub pole: UnitPoint,
    pub center: UnitPoint,
}

impl Semicircle {
    pub fn new(pole: UnitPoint, center: UnitPoint) -> Result<Self> {
        if pole.dot(&center).abs() > GEOM_TOL {
            return Err(GeometryError::OutOfRange { name: "pole.center", value: pole.dot(&center) });
        }
        Ok(Semicircle { pole, center })
    }

    /// Point at signed arc-length `s` in `[-pi/2, pi/2]` from the center.
    pub fn point_at(&self, s: f64) -> UnitPoint {
        let tangent = self.pole.vector().cross(self.center.vector());
        self.center.toward(&tangent, s)
    }
}

/// Which bounding semicircle of a lune.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bounding {
    /// `G/H`, lying on the boundary of the first hemisphere.
    First,
    /// `H/G`, lying on the boundary of the second hemisphere.
    Second,
}

/// The intersection of two different, non-opposite hemispheres.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Lune {
    g: Hemisphere,
    h: Hemisphere,
}

impl Lune {
    pub fn new(g: Hemisphere, h: Hemisphere) -> Result<Self> {
        let d = g.center.dot(&h.center);
        if d <= -1.0 + GEOM_TOL || d >= 1.0 - GEOM_TOL {
            return Err(GeometryError::InvalidLune);
        }
        Ok(Lune { g, h })
    }

    pub fn first(&self) -> Hemisphere {
        self.g
    }

    pub fn second(&self) -> Hemisphere {
        self.h
    }

    pub fn contains(&self, x: &UnitPoint, tol: f64) -> bool {
        self.g.contains(x, tol) && self.h.contains(x, tol)
    }

    /// Thickness via `pi - |g h|`.
    pub fn thickness(&self) -> f64 {
        PI - dist(&self.g.center, &self.h.center)
    }

    /// Thickness as the distance between the two semicircle centers.
    pub fn thickness_explicit(&self) -> f64 {
        let a = self.boundary_semicircle(Bounding::First);
        let b = self.boundary_semicircle(Bounding::Second);
        dist(&a.center, &b.center)
    }

    pub fn boundary_semicircle(&self, which: Bounding) -> Semicircle {
        let (own, other) = match which {
            Bounding::First => (self.g.center, self.h.center),
            Bounding::Second => (self.h.center, self.g.center),
        };
        let o = own.vector();
        let center = UnitPoint::normalized(other.vector() - o * o.dot(other.vector()));
        Semicircle { pole: own, center }
    }
}

/// Semicircle `G/H` or `H/G` of a lune.
pub fn boundary_semicircle(lune: &Lune, which: Bounding) -> Semicircle {
    lune.boundary_semicircle(which)
}

/// Thickness of a lune.
pub fn lune_thickness(lune: &Lune) -> f64 {
    lune.thickness()
}

/// Rotation taking the north pole to `center` and the x axis to `tangent`.
pub fn frame_rotation(center: &UnitPoint, tangent: &Vec3) -> Result<Rotation3<f64>> {
    let c = *center.vector();
    let t = tangent - c * c.dot(tangent);
    if t.norm() < 1e-9 {
        return Err(GeometryError::DegenerateInput("frame tangent parallel to center"));
    }
    let t = t.normalize();
    let s = c.cross(&t);
    let m = nalgebra::Matrix3::from_columns(&[t, s, c]);
    Ok(Rotation3::from_matrix_unchecked(m))
}

//! Oracles that avoid the library's arc and dual machinery.
#![allow(dead_code)]

use std::f64::consts::PI;

use nalgebra::{Rotation3, Unit, Vector3};
use proptest::prelude::*;
use spherewidth::{ConvexBody, EdgeKind, UnitPoint};

pub type V = Vector3<f64>;

/// Distance from the chord length.
pub fn chord_dist(a: &V, b: &V) -> f64 {
    2.0 * ((a - b).norm() / 2.0).min(1.0).asin()
}

/// Spherical linear interpolation along the minor arc.
pub fn slerp(a: &V, b: &V, t: f64) -> V {
    let omega = chord_dist(a, b);
    if omega < 1e-15 {
        return *a;
    }
    (a * ((1.0 - t) * omega).sin() + b * (t * omega).sin()) / omega.sin()
}

/// `n + 1` points along every edge, built from the raw edge description:
/// geodesic edges by interpolation, circular edges by rotating the start
/// point about the circle's axis.
pub fn dense_boundary(body: &ConvexBody, n: usize) -> Vec<V> {
    let verts: Vec<V> = body.vertices().iter().map(|v| *v.vector()).collect();
    let m = verts.len();
    let mut out = Vec::new();
    for (i, e) in body.edges().iter().enumerate() {
        let a = verts[i];
        let b = verts[(i + 1) % m];
        match e.kind {
            EdgeKind::Geodesic => out.extend((0..=n).map(|k| slerp(&a, &b, k as f64 / n as f64))),
            EdgeKind::Circular { center, radius, side } => {
                // axis oriented so the body turns counterclockwise about it
                let mut axis = *center.vector();
                if (side.sign() > 0) != (radius <= PI / 2.0) {
                    axis = -axis;
                }
                let pa = a - axis * axis.dot(&a);
                let pb = b - axis * axis.dot(&b);
                let mut sweep = pa.cross(&pb).dot(&axis).atan2(pa.dot(&pb));
                if sweep < 0.0 {
                    sweep += 2.0 * PI;
                }
                let ax = Unit::new_normalize(axis);
                out.extend((0..=n).map(|k| Rotation3::from_axis_angle(&ax, sweep * k as f64 / n as f64) * a));
            }
        }
    }
    out
}

pub fn max_pair_dist(pts: &[V]) -> f64 {
    let mut best = 1.0f64;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            best = best.min(a.dot(b));
        }
    }
    best.clamp(-1.0, 1.0).acos()
}

/// Thickness of a geodesic polygon from densely sampled edge poles and
/// normal cones: `pi` minus the largest distance between supporting
/// hemisphere centers. Vertices must be counterclockwise.
pub fn polygon_thickness_oracle(verts: &[V], per_feature: usize) -> f64 {
    let m = verts.len();
    let poles: Vec<V> = (0..m).map(|i| verts[i].cross(&verts[(i + 1) % m]).normalize()).collect();
    let mut centers = Vec::new();
    for i in 0..m {
        let next = poles[(i + 1) % m];
        // normal cone at the vertex between edge i and edge i+1
        centers.extend((0..per_feature).map(|k| slerp(&poles[i], &next, k as f64 / per_feature as f64)));
    }
    PI - max_pair_dist(&centers)
}

pub fn unit() -> impl Strategy<Value = UnitPoint> {
    (-1.0f64..1.0, 0.0f64..(2.0 * PI)).prop_map(|(z, phi)| {
        let s = (1.0 - z * z).sqrt();
        UnitPoint::new(s * phi.cos(), s * phi.sin(), z).unwrap()
    })
}

pub fn rotation() -> impl Strategy<Value = Rotation3<f64>> {
    (unit(), 0.0f64..(2.0 * PI))
        .prop_map(|(axis, angle)| Rotation3::from_axis_angle(&Unit::new_normalize(*axis.vector()), angle))
}

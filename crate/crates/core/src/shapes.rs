//! Constructors for disks, quarter-disks, regular and Reuleaux odd-gons and
//! isosceles triangles.
//!
//! Every constructor builds its body about the north pole in the canonical
//! frame (tangent directions x and y); [`BodySpec`] applies an optional frame
//! rotation afterwards.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use nalgebra::Rotation3;
use serde::{Deserialize, Serialize};

use crate::body::{ConvexBody, Edge, Side};
use crate::error::{GeometryError, Result};
use crate::sphere::{frame_rotation, UnitPoint, Vec3};
use crate::width::{polar_dual, thickness};

/// Bisection stops once the circumradius bracket is narrower than this.
pub const BISECTION_TOL: f64 = 1e-12;
pub const BISECTION_MAX_ITER: usize = 200;

/// Distance of the circumradius bracket from `0` and `pi/2`. Closer to either
/// end the polygon or its dual encloses too little area for the turning check
/// to tell it from a point.
pub const REGULAR_MIN_RADIUS: f64 = 1e-3;

/// Smallest accepted Reuleaux width and distance of the largest from `pi`.
pub const REULEAUX_MARGIN: f64 = 1e-6;

fn tangent(angle: f64) -> Vec3 {
    Vec3::new(angle.cos(), angle.sin(), 0.0)
}

fn check_range(name: &'static str, value: f64, ok: bool) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(GeometryError::OutOfRange { name, value })
    }
}

fn check_odd(n: u32) -> Result<()> {
    check_range("n", n as f64, n >= 3 && n % 2 == 1)
}

/// Disk of radius `radius` about the north pole, as four quarter arcs.
pub fn disk(radius: f64) -> Result<ConvexBody> {
    // a closed hemisphere contains antipodes, so the radius stays below pi/2
    check_range("radius", radius, radius > 0.0 && radius < FRAC_PI_2)?;
    let c = UnitPoint::NORTH;
    let pts: Vec<UnitPoint> = (0..4).map(|k| c.toward(&tangent(k as f64 * FRAC_PI_2), radius)).collect();
    let edges = (1..=4).map(|k| Edge::circular(pts[k % 4], c, radius, Side::Center)).collect();
    ConvexBody::new(pts[0], edges)
}

/// Disk about an arbitrary center.
pub fn disk_at(center: &UnitPoint, radius: f64) -> Result<ConvexBody> {
    let (e1, _) = center.tangent_frame();
    Ok(disk(radius)?.rotated(&frame_rotation(center, &e1)?))
}

/// Quarter of the disk of radius `radius` about the north pole, cut by the
/// great circles through the pole tangent to x and y.
pub fn quarter_disk(radius: f64) -> Result<ConvexBody> {
    check_range("radius", radius, radius > 0.0 && radius <= FRAC_PI_2)?;
    let c = UnitPoint::NORTH;
    let a = c.toward(&Vec3::x(), radius);
    let b = c.toward(&Vec3::y(), radius);
    let edges = vec![Edge::geodesic(a), Edge::circular(b, c, radius, Side::Center), Edge::geodesic(c)];
    ConvexBody::new(c, edges)
}

/// Vertices of the regular `n`-gon with circumradius `radius` about the north
/// pole, counterclockwise.
pub fn regular_vertices(n: u32, radius: f64) -> Vec<UnitPoint> {
    (0..n).map(|k| UnitPoint::NORTH.toward(&tangent(TAU * k as f64 / n as f64), radius)).collect()
}

pub fn regular_polygon(n: u32, radius: f64) -> Result<ConvexBody> {
    check_range("radius", radius, radius > 0.0 && radius < FRAC_PI_2)?;
    ConvexBody::polygon(&regular_vertices(n, radius))
}

fn regular_thickness(n: u32, radius: f64) -> Result<f64> {
    Ok(thickness(&regular_polygon(n, radius)?)?.value)
}

/// Distance from a vertex of the regular `n`-gon to the great circle of the
/// opposite edge. Agrees with the thickness while that is at most `pi/2`, and
/// only seeds the bisection bracket.
fn opposite_edge_distance(n: u32, radius: f64) -> f64 {
    let v = regular_vertices(n, radius);
    let m = ((n - 1) / 2) as usize;
    let pole = v[m].vector().cross(v[m + 1].vector()).normalize();
    v[0].vector().dot(&pole).clamp(-1.0, 1.0).asin()
}

fn seed_radius(n: u32, target: f64) -> f64 {
    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if opposite_edge_distance(n, mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Half-width of the seeded bracket around the closed-form estimate.
const SEED_BRACKET: f64 = 1e-8;

/// Circumradius of the regular odd-gon of thickness `target`.
///
/// Bisects on the measured thickness. The bracket is first narrowed around a
/// closed-form estimate; if the measured thickness does not increase across
/// it and straddle the target, the full bracket is used. Either way the
/// endpoints are checked before bisecting.
pub fn regular_odd_gon_radius(n: u32, target: f64) -> Result<f64> {
    check_odd(n)?;
    check_range("thickness", target, target > 0.0 && target <= FRAC_PI_2)?;
    let full = (REGULAR_MIN_RADIUS, FRAC_PI_2 - REGULAR_MIN_RADIUS);
    let r0 = seed_radius(n, target).clamp(full.0 + SEED_BRACKET, full.1 - SEED_BRACKET);
    let seeded = (r0 - SEED_BRACKET, r0 + SEED_BRACKET);
    let brackets = |lo: f64, hi: f64| -> Result<bool> {
        let (f_lo, f_hi) = (regular_thickness(n, lo)?, regular_thickness(n, hi)?);
        if f_lo.partial_cmp(&f_hi) != Some(std::cmp::Ordering::Less) {
            return Err(GeometryError::Bisection("thickness not increasing across the bracket"));
        }
        Ok(f_lo <= target && target <= f_hi)
    };
    let (mut lo, mut hi) = if matches!(brackets(seeded.0, seeded.1), Ok(true)) {
        seeded
    } else if brackets(full.0, full.1)? {
        full
    } else {
        return Err(GeometryError::Bisection("target not bracketed"));
    };
    for _ in 0..BISECTION_MAX_ITER {
        if hi - lo <= BISECTION_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if regular_thickness(n, mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Regular odd-gon about the north pole with the given thickness.
pub fn regular_odd_gon(n: u32, target: f64) -> Result<ConvexBody> {
    regular_polygon(n, regular_odd_gon_radius(n, target)?)
}

/// Circumradius of the regular `n`-gon whose longest diagonal is `width`.
pub fn reuleaux_radius(n: u32, width: f64) -> f64 {
    let m = (n - 1) / 2;
    let phi = TAU * m as f64 / n as f64;
    ((1.0 - width.cos()) / (1.0 - phi.cos())).sqrt().min(1.0).asin()
}

/// Constant-width odd-gon of width `width` about the north pole.
///
/// Up to width `pi/2` this is the intersection of the disks of radius `width`
/// about the vertices of a regular `n`-gon whose longest diagonal is `width`;
/// each edge is an arc about the opposite vertex. Past `pi/2` those disks are
/// no longer convex and the body is the polar dual of the Reuleaux odd-gon of
/// width `pi - width`, bounded by `n` geodesic edges alternating with `n`
/// arcs of radius `width - pi/2`.
pub fn reuleaux_odd_gon(n: u32, width: f64) -> Result<ConvexBody> {
    check_odd(n)?;
    check_range("width", width, (REULEAUX_MARGIN..PI - REULEAUX_MARGIN).contains(&width))?;
    if width > FRAC_PI_2 {
        let inner = reuleaux_odd_gon(n, PI - width)?;
        return Ok(polar_dual(&inner)?.body);
    }
    let verts = regular_vertices(n, reuleaux_radius(n, width));
    let n = n as usize;
    let edges = (0..n)
        .map(|k| {
            let center = verts[(k + n.div_ceil(2)) % n];
            Edge::circular(verts[(k + 1) % n], center, width, Side::Center)
        })
        .collect();
    ConvexBody::new(verts[0], edges)
}

/// Isosceles triangle with apex at the north pole, arms `arm` and base `base`.
pub fn isosceles_triangle(arm: f64, base: f64) -> Result<ConvexBody> {
    check_range("arm", arm, arm > FRAC_PI_2 && arm < PI)?;
    check_range("base", base, base > 0.0 && base < FRAC_PI_2)?;
    let cos_apex = (base.cos() - arm.cos().powi(2)) / arm.sin().powi(2);
    if !(-1.0 < cos_apex && cos_apex < 1.0) {
        return Err(GeometryError::DegenerateInput("no triangle with these sides"));
    }
    let half = 0.5 * cos_apex.acos();
    let apex = UnitPoint::NORTH;
    let b1 = apex.toward(&tangent(-half), arm);
    let b2 = apex.toward(&tangent(half), arm);
    ConvexBody::polygon(&[apex, b1, b2])
}

/// Position of a constructed body: where the north pole goes, and where the
/// x direction there goes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Frame {
    pub center: [f64; 3],
    pub tangent: [f64; 3],
}

impl Frame {
    pub fn rotation(&self) -> Result<Rotation3<f64>> {
        let c = UnitPoint::try_from(self.center)?;
        frame_rotation(&c, &Vec3::from(self.tangent))
    }
}

/// Parameters of a named body.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BodySpec {
    Disk {
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        frame: Option<Frame>,
    },
    QuarterDisk {
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        frame: Option<Frame>,
    },
    RegularOddGon {
        n: u32,
        thickness: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        frame: Option<Frame>,
    },
    ReuleauxOddGon {
        n: u32,
        width: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        frame: Option<Frame>,
    },
    IsoscelesTriangle {
        arm: f64,
        base: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        frame: Option<Frame>,
    },
}

impl BodySpec {
    pub fn frame(&self) -> Option<Frame> {
        match *self {
            BodySpec::Disk { frame, .. }
            | BodySpec::QuarterDisk { frame, .. }
            | BodySpec::RegularOddGon { frame, .. }
            | BodySpec::ReuleauxOddGon { frame, .. }
            | BodySpec::IsoscelesTriangle { frame, .. } => frame,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            BodySpec::Disk { .. } => "disk",
            BodySpec::QuarterDisk { .. } => "quarter_disk",
            BodySpec::RegularOddGon { .. } => "regular_odd_gon",
            BodySpec::ReuleauxOddGon { .. } => "reuleaux_odd_gon",
            BodySpec::IsoscelesTriangle { .. } => "isosceles_triangle",
        }
    }

    pub fn build(&self) -> Result<ConvexBody> {
        let body = match *self {
            BodySpec::Disk { radius, .. } => disk(radius)?,
            BodySpec::QuarterDisk { radius, .. } => quarter_disk(radius)?,
            BodySpec::RegularOddGon { n, thickness, .. } => regular_odd_gon(n, thickness)?,
            BodySpec::ReuleauxOddGon { n, width, .. } => reuleaux_odd_gon(n, width)?,
            BodySpec::IsoscelesTriangle { arm, base, .. } => isosceles_triangle(arm, base)?,
        };
        match self.frame() {
            Some(f) => Ok(body.rotated(&f.rotation()?)),
            None => Ok(body),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{diameter, pair_kind, PairKind};
    use crate::sphere::dist;
    use approx::assert_abs_diff_eq;

    #[test]
    fn disk_measures() {
        let d = disk(FRAC_PI_2 / 2.0).unwrap();
        assert_abs_diff_eq!(thickness(&d).unwrap().value, FRAC_PI_2, epsilon = 1e-12);
        let d = disk(0.3).unwrap();
        assert!(d.contains(&UnitPoint::NORTH));
        assert!(!d.contains(&UnitPoint::NORTH.toward(&Vec3::x(), 0.31)));
        assert!(disk(FRAC_PI_2).is_err());
        assert!(disk(0.0).is_err());
    }

    #[test]
    fn quarter_disk_measures() {
        let q = quarter_disk(1.0).unwrap();
        assert_abs_diff_eq!(thickness(&q).unwrap().value, 1.0, epsilon = 1e-12);
        let d = diameter(&q);
        assert_abs_diff_eq!(d.value, crate::sphere::right_hypotenuse(1.0, 1.0).unwrap(), epsilon = 1e-12);
        assert!(quarter_disk(1.6).is_err());
    }

    #[test]
    fn quarter_disk_of_right_radius_is_octant() {
        let q = quarter_disk(FRAC_PI_2).unwrap();
        assert!(q.is_polygon());
        assert_abs_diff_eq!(diameter(&q).value, FRAC_PI_2, epsilon = 1e-12);
    }

    #[test]
    fn regular_odd_gon_hits_target() {
        let b = regular_odd_gon(5, 0.7).unwrap();
        assert_abs_diff_eq!(thickness(&b).unwrap().value, 0.7, epsilon = 1e-9);
        let t = regular_odd_gon(3, FRAC_PI_2).unwrap();
        assert_abs_diff_eq!(diameter(&t).value, FRAC_PI_2, epsilon = 1e-9);
        assert!(regular_odd_gon(4, 0.5).is_err());
        assert!(regular_odd_gon(5, 1.7).is_err());
    }

    #[test]
    fn thickness_increases_with_circumradius() {
        for n in [3, 5, 9] {
            let ts: Vec<f64> = (1..40).map(|k| regular_thickness(n, k as f64 * 0.039).unwrap()).collect();
            assert!(ts.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn seeded_and_full_brackets_agree() {
        let r = regular_odd_gon_radius(7, 1.1).unwrap();
        let (mut lo, mut hi) = (REGULAR_MIN_RADIUS, FRAC_PI_2 - REGULAR_MIN_RADIUS);
        while hi - lo > BISECTION_TOL {
            let mid = 0.5 * (lo + hi);
            if regular_thickness(7, mid).unwrap() < 1.1 {
                lo = mid
            } else {
                hi = mid
            }
        }
        assert_abs_diff_eq!(r, 0.5 * (lo + hi), epsilon = 1e-11);
    }

    #[test]
    fn reuleaux_long_diagonal() {
        for n in [3, 5, 7] {
            let r = reuleaux_radius(n, 0.9);
            let v = regular_vertices(n, r);
            assert_abs_diff_eq!(dist(&v[0], &v[(n as usize - 1) / 2]), 0.9, epsilon = 1e-12);
        }
    }

    #[test]
    fn reuleaux_measures() {
        for w in [1.0, 1.8] {
            let b = reuleaux_odd_gon(3, w).unwrap();
            assert_abs_diff_eq!(diameter(&b).value, w, epsilon = 1e-9);
            assert_abs_diff_eq!(thickness(&b).unwrap().value, w, epsilon = 1e-9);
        }
        assert!(reuleaux_odd_gon(3, 1e-7).is_err());
        assert!(reuleaux_odd_gon(3, PI).is_err());
    }

    #[test]
    fn isosceles_counterexample() {
        let t = isosceles_triangle(1.7, 1.0).unwrap();
        let d = diameter(&t);
        assert!(d.value > 1.7 + 1e-3);
        assert!(d.pairs.iter().all(|(a, b)| pair_kind(a, b) == PairKind::VertexEdge));
        assert!(thickness(&t).unwrap().value <= FRAC_PI_2);
        assert!(isosceles_triangle(1.2, 1.0).is_err());
    }

    #[test]
    fn spec_round_trip_and_rotation() {
        let spec = BodySpec::QuarterDisk {
            radius: 0.8,
            frame: Some(Frame { center: [1.0, 0.0, 0.0], tangent: [0.0, 1.0, 0.0] }),
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<BodySpec>(&json).unwrap(), spec);
        let body = spec.build().unwrap();
        assert!(body.vertices()[0].approx_eq(&UnitPoint::new(1.0, 0.0, 0.0).unwrap(), 1e-15));
        assert!(serde_json::from_str::<BodySpec>(r#"{"kind":"disk","radius":0.1,"extra":1}"#).is_err());
    }
}

//! Supporting hemispheres, width, thickness and the polar dual.
//!
//! A hemisphere with center `u` contains a body `C` iff `u` lies in the polar
//! dual `D(C) = {u : <x, u> >= 0 for all x in C}`, and it supports `C` iff `u`
//! is on the boundary of `D(C)`. The lune `K ∩ K*` has thickness
//! `pi - |k k*|`, so the width determined by `K` is `pi` minus the largest
//! distance from `k` to the dual boundary, and the thickness of `C` is
//! `pi - diam(D(C))`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arc::CircleArc;
use crate::body::{ConvexBody, Location, SupportFeature, BOUNDARY_TOL};
use crate::error::{GeometryError, Result};
use crate::measure::diameter;
use crate::sphere::{dist, Hemisphere, Lune, UnitPoint};

/// Dual arcs shorter than this collapse to a point.
const DUAL_MERGE: f64 = 1e-12;

/// Link between a feature of the dual body and the primal feature it supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualLink {
    pub dual: Location,
    pub primal: Location,
}

/// The polar dual of a body with its feature correspondence.
///
/// Primal geodesic edges map to dual vertices, primal vertices to dual
/// geodesic edges, and a primal circular edge of radius `r` about `c` to a
/// dual circular edge of radius `pi/2 - r` about `c`.
#[derive(Clone, Debug)]
pub struct SupportSet {
    pub body: ConvexBody,
    pub links: Vec<DualLink>,
}

/// Width of a body determined by one supporting hemisphere.
#[derive(Clone, Copy, Debug)]
pub struct WidthResult {
    pub k: Hemisphere,
    pub k_star: Hemisphere,
    pub thickness: f64,
    pub lune: Lune,
}

impl WidthResult {
    fn new(k: UnitPoint, k_star: UnitPoint) -> Result<Self> {
        let lune = Lune::new(Hemisphere::new(k), Hemisphere::new(k_star))?;
        Ok(WidthResult { k: lune.first(), k_star: lune.second(), thickness: PI - dist(&k, &k_star), lune })
    }
}

#[derive(Clone, Debug)]
pub struct ThicknessResult {
    pub value: f64,
    pub minimal_lunes: Vec<WidthResult>,
}

pub fn polar_dual(body: &ConvexBody) -> Result<SupportSet> {
    let n = body.arcs().len();
    let mut arcs: Vec<CircleArc> = Vec::with_capacity(2 * n);
    let mut links = Vec::with_capacity(2 * n);
    let mut pending_vertices = Vec::new();
    for i in 0..n {
        match body.edge_support(i) {
            SupportFeature::Point(_) => pending_vertices.push((arcs.len(), Location::Edge(i))),
            SupportFeature::Arc(a) => {
                links.push(DualLink { dual: Location::Edge(arcs.len()), primal: Location::Edge(i) });
                arcs.push(a);
            }
        }
        let v = (i + 1) % n;
        if let SupportFeature::Arc(a) = body.normal_cone(v) {
            if a.sweep() > DUAL_MERGE {
                links.push(DualLink { dual: Location::Edge(arcs.len()), primal: Location::Vertex(v) });
                arcs.push(a);
            }
        }
    }
    let m = arcs.len();
    links.extend(
        pending_vertices.into_iter().map(|(k, primal)| DualLink { dual: Location::Vertex(k % m.max(1)), primal }),
    );
    // points inside the body are strictly positive on its dual
    let dual = ConvexBody::from_arcs(arcs, Some(body.interior_point()))?;
    Ok(SupportSet { body: dual, links })
}

/// True iff the hemisphere contains the body and touches its boundary.
pub fn is_supporting(body: &ConvexBody, k: &Hemisphere) -> bool {
    let (_, m) = body.min_dot(k.center.vector());
    (-BOUNDARY_TOL..=BOUNDARY_TOL).contains(&m)
}

/// Width determined by the supporting hemisphere `k`.
pub fn width_at(body: &ConvexBody, k: &Hemisphere) -> Result<WidthResult> {
    if !is_supporting(body, k) {
        return Err(GeometryError::NotSupporting);
    }
    let q = k.center.vector();
    let (far, _) =
        body.support_features().iter().map(|f| f.min_dot(q)).min_by(|a, b| a.1.total_cmp(&b.1)).expect("nonempty");
    WidthResult::new(k.center, far)
}

/// Thickness as `pi - diam(D(C))`, with every minimal lune.
pub fn thickness(body: &ConvexBody) -> Result<ThicknessResult> {
    let dual = polar_dual(body)?;
    let d = diameter(&dual.body);
    let minimal_lunes = d.pairs.iter().map(|(a, b)| WidthResult::new(a.point, b.point)).collect::<Result<Vec<_>>>()?;
    Ok(ThicknessResult { value: PI - d.value, minimal_lunes })
}

/// `n` supporting-hemisphere centers spread along the dual boundary by arc
/// length, plus every dual vertex.
pub fn dual_boundary_samples(body: &ConvexBody, n: usize) -> Vec<UnitPoint> {
    let features = body.support_features();
    let total: f64 = features.iter().map(SupportFeature::length).sum();
    let mut out = Vec::with_capacity(n + features.len());
    for f in &features {
        out.push(f.point_at_fraction(0.0));
        let k = if total > 0.0 { (f.length() / total * n as f64).ceil() as usize } else { 0 };
        out.extend((1..k).map(|j| f.point_at_fraction(j as f64 / k as f64)));
    }
    out
}

/// True iff every sampled width lies in `[thickness, thickness + tol]`.
pub fn is_constant_width(body: &ConvexBody, tol: f64) -> Result<bool> {
    is_constant_width_sampled(body, tol, 1000)
}

pub fn is_constant_width_sampled(body: &ConvexBody, tol: f64, samples: usize) -> Result<bool> {
    let delta = thickness(body)?.value;
    for u in dual_boundary_samples(body, samples) {
        let w = width_at(body, &Hemisphere::new(u))?;
        if w.thickness > delta + tol || w.thickness < delta - tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Supporting-hemisphere center number `index` of the sampling stream.
///
/// A boundary position is drawn with weight proportional to edge length plus
/// vertex turning; on an edge the unique supporting center is taken, at a
/// vertex a uniformly random center of its normal cone.
fn support_sample(body: &ConvexBody, cumulative: &[f64], seed: u64, index: u64) -> UnitPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let total = *cumulative.last().expect("nonempty");
    let s: f64 = rng.gen::<f64>() * total;
    let t: f64 = rng.gen();
    let slot = cumulative.partition_point(|&c| c <= s).min(cumulative.len() - 1);
    let n = body.arcs().len();
    if slot % 2 == 0 {
        let arc = &body.arcs()[slot / 2];
        let x = arc.point_at_fraction(t);
        arc.support_at(&x)
    } else {
        body.normal_cone((slot / 2 + 1) % n).point_at_fraction(t)
    }
}

/// Sampling estimate of the thickness, independent of the dual construction:
/// `pi` minus the largest distance between sampled supporting-hemisphere
/// centers. Always an upper bound on the thickness; sample `i` depends only on
/// `(seed, i)`, so more samples never raise the estimate.
pub fn brute_thickness(body: &ConvexBody, n_samples: usize, seed: u64) -> Result<f64> {
    if n_samples < 100 {
        return Err(GeometryError::OutOfRange { name: "n_samples", value: n_samples as f64 });
    }
    let n = body.arcs().len();
    let mut cumulative = Vec::with_capacity(2 * n);
    let mut acc = 0.0;
    for i in 0..n {
        acc += body.arcs()[i].length();
        cumulative.push(acc);
        acc += body.turns()[(i + 1) % n].max(0.0);
        cumulative.push(acc);
    }
    let pts: Vec<[f64; 3]> =
        (0..n_samples as u64).into_par_iter().map(|i| support_sample(body, &cumulative, seed, i).to_array()).collect();
    let (xs, ys, zs): (Vec<f64>, Vec<f64>, Vec<f64>) = pts.iter().map(|p| (p[0], p[1], p[2])).collect();
    // smallest dot product against every later sample, row by row
    let row_min = |i: usize| -> f64 {
        let [ax, ay, az] = pts[i];
        let (x, y, z) = (&xs[i + 1..], &ys[i + 1..], &zs[i + 1..]);
        let len = x.len().min(y.len()).min(z.len());
        let mut lanes = [f64::INFINITY; 4];
        let mut k = 0;
        while k + 4 <= len {
            for l in 0..4 {
                let d = ax * x[k + l] + ay * y[k + l] + az * z[k + l];
                lanes[l] = if d < lanes[l] { d } else { lanes[l] };
            }
            k += 4;
        }
        let mut m = lanes.iter().fold(f64::INFINITY, |a, &b| a.min(b));
        for k in k..len {
            m = m.min(ax * x[k] + ay * y[k] + az * z[k]);
        }
        m
    };
    let mins: Vec<f64> = (0..pts.len()).into_par_iter().map(row_min).collect();
    let Some(i) = (0..mins.len()).filter(|&i| mins[i].is_finite()).min_by(|&a, &b| mins[a].total_cmp(&mins[b])) else {
        return Ok(PI);
    };
    let j = (i + 1..pts.len())
        .find(|&j| pts[i][0] * xs[j] + pts[i][1] * ys[j] + pts[i][2] * zs[j] == mins[i])
        .expect("row minimum is attained");
    let a = UnitPoint::new(pts[i][0], pts[i][1], pts[i][2])?;
    let b = UnitPoint::new(pts[j][0], pts[j][1], pts[j][2])?;
    Ok(PI - dist(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{Edge, Side};
    use crate::sphere::Vec3;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    fn p(x: f64, y: f64, z: f64) -> UnitPoint {
        UnitPoint::new(x, y, z).unwrap()
    }

    fn octant() -> ConvexBody {
        ConvexBody::polygon(&[p(1.0, 0.0, 0.0), p(0.0, 1.0, 0.0), p(0.0, 0.0, 1.0)]).unwrap()
    }

    fn disk(r: f64) -> ConvexBody {
        let c = UnitPoint::NORTH;
        let pts: Vec<UnitPoint> = (0..4)
            .map(|k| c.toward(&Vec3::new((k as f64 * FRAC_PI_2).cos(), (k as f64 * FRAC_PI_2).sin(), 0.0), r))
            .collect();
        let edges = (1..=4).map(|k| Edge::circular(pts[k % 4], c, r, Side::Center)).collect();
        ConvexBody::new(pts[0], edges).unwrap()
    }

    #[test]
    fn supporting_examples() {
        let c = octant();
        assert!(is_supporting(&c, &Hemisphere::new(p(1.0, 0.0, 0.0))));
        assert!(!is_supporting(&c, &Hemisphere::new(p(1.0, 1.0, 1.0))));
        let d = disk(0.3);
        let k = UnitPoint::NORTH.toward(&Vec3::x(), FRAC_PI_2 - 0.3);
        assert!(is_supporting(&d, &Hemisphere::new(k)));
    }

    #[test]
    fn octant_is_self_dual() {
        let dual = polar_dual(&octant()).unwrap();
        assert_eq!(dual.body.vertices().len(), 3);
        for v in dual.body.vertices() {
            assert!(octant().vertices().iter().any(|w| w.approx_eq(v, 1e-12)));
        }
        assert_eq!(dual.links.len(), 6);
    }

    #[test]
    fn disk_dual_is_disk() {
        let dual = polar_dual(&disk(0.3)).unwrap();
        for a in dual.body.arcs() {
            assert!(a.center().approx_eq(&UnitPoint::NORTH, 1e-15));
            assert_abs_diff_eq!(a.radius(), FRAC_PI_2 - 0.3, epsilon = 1e-15);
        }
    }

    #[test]
    fn thickness_examples() {
        assert_abs_diff_eq!(thickness(&disk(0.4)).unwrap().value, 0.8, epsilon = 1e-12);
        let t = thickness(&octant()).unwrap();
        assert_abs_diff_eq!(t.value, FRAC_PI_2, epsilon = 1e-12);
        assert!(!t.minimal_lunes.is_empty());
    }

    #[test]
    fn width_examples() {
        let w = width_at(&octant(), &Hemisphere::new(p(1.0, 0.0, 0.0))).unwrap();
        assert_abs_diff_eq!(w.thickness, FRAC_PI_2, epsilon = 1e-12);
        let d = disk(0.25);
        let k = UnitPoint::NORTH.toward(&Vec3::new(0.3, 0.7, 0.0).normalize(), FRAC_PI_2 - 0.25);
        assert_abs_diff_eq!(width_at(&d, &Hemisphere::new(k)).unwrap().thickness, 0.5, epsilon = 1e-12);
        assert_eq!(width_at(&d, &Hemisphere::new(UnitPoint::NORTH)).unwrap_err(), GeometryError::NotSupporting);
    }

    #[test]
    fn constant_width_examples() {
        assert!(is_constant_width(&disk(0.5), 1e-9).unwrap());
        // the octant is the Reuleaux triangle of width pi/2
        assert!(is_constant_width(&octant(), 1e-9).unwrap());
    }

    #[test]
    fn brute_thickness_examples() {
        let b = brute_thickness(&disk(0.4), 10_000, 3).unwrap();
        assert!((b - 0.8).abs() <= 1e-3, "{b}");
        let o = brute_thickness(&octant(), 10_000, 3).unwrap();
        assert!((o - FRAC_PI_2).abs() <= 1e-3, "{o}");
        let coarse = brute_thickness(&octant(), 100, 9).unwrap();
        let fine = brute_thickness(&octant(), 10_000, 9).unwrap();
        assert!(fine <= coarse + 1e-12);
        assert!(brute_thickness(&octant(), 99, 9).is_err());
    }
}

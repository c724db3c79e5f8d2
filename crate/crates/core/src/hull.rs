//! Spherical convex hull by gnomonic projection.
//!
//! Points in an open hemisphere with center `w` are centrally projected onto
//! the tangent plane at `w`. Great circles map to lines, so the planar hull
//! of the projections lifts back to the spherical hull.

use crate::body::{witness_direction, ConvexBody, TURN_TOL};
use crate::error::{GeometryError, Result};
use crate::sphere::{UnitPoint, Vec3};

fn cross2(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Indices of the counterclockwise planar hull (Andrew's monotone chain),
/// collinear points dropped.
fn planar_hull(pts: &[(f64, f64)]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&i, &j| pts[i].0.total_cmp(&pts[j].0).then(pts[i].1.total_cmp(&pts[j].1)));
    idx.dedup_by(|a, b| pts[*a] == pts[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> =
            if pass == 0 { Box::new(idx.iter()) } else { Box::new(idx.iter().rev()) };
        for &i in iter {
            while hull.len() >= start + 2 && cross2(pts[hull[hull.len() - 2]], pts[hull[hull.len() - 1]], pts[i]) <= 0.0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// Spherical turning angle at `v` going `prev -> v -> next` along geodesics.
fn turn_at(prev: &UnitPoint, v: &UnitPoint, next: &UnitPoint) -> f64 {
    let n_in = prev.vector().cross(v.vector());
    let n_out = v.vector().cross(next.vector());
    let t_in = n_in.cross(v.vector());
    let t_out = n_out.cross(v.vector());
    t_in.cross(&t_out).dot(v.vector()).atan2(t_in.dot(&t_out))
}

/// Smallest convex polygon containing `points`; its vertices are a subset of
/// the input in counterclockwise order.
pub fn convex_hull(points: &[UnitPoint]) -> Result<ConvexBody> {
    let vectors: Vec<Vec3> = points.iter().map(|p| *p.vector()).collect();
    let w = witness_direction(&vectors).ok_or(GeometryError::NoWitnessHemisphere)?;
    let (e1, e2) = w.tangent_frame();
    let projected: Vec<(f64, f64)> = vectors
        .iter()
        .map(|v| {
            let h = v.dot(w.vector());
            (v.dot(&e1) / h, v.dot(&e2) / h)
        })
        .collect();
    let mut cycle: Vec<UnitPoint> = planar_hull(&projected).into_iter().map(|i| points[i]).collect();
    // merge vertices whose spherical turn is below the collinearity threshold
    loop {
        let n = cycle.len();
        if n < 3 {
            return Err(GeometryError::DegenerateInput("points lie on one great circle"));
        }
        let flat = (0..n).find(|&i| turn_at(&cycle[(i + n - 1) % n], &cycle[i], &cycle[(i + 1) % n]) < TURN_TOL);
        match flat {
            Some(i) => {
                cycle.remove(i);
            }
            None => break,
        }
    }
    ConvexBody::polygon(&cycle)
}

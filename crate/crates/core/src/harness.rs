//! Randomized verification of the lune, diameter and thickness statements.
//!
//! Every trial draws from its own ChaCha8 stream, keyed by the seed, the
//! property and the trial index, so a report depends only on
//! `(property, seed, trials)` and not on how trials are scheduled.
//!
//! `worst_violation` is the largest excess of a trial's violation over the
//! tolerance that applies to it, so it is at most zero when every trial
//! passes and `failures` counts trials with positive excess.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arc::Arc;
use crate::body::ConvexBody;
use crate::error::{GeometryError, Result};
use crate::hull::convex_hull;
use crate::measure::{diameter, diameter_of_extreme};
use crate::shapes::{BodySpec, Frame};
use crate::sphere::{dist, Bounding, Hemisphere, Lune, UnitPoint, Vec3};
use crate::width::{brute_thickness, thickness, width_at};

pub const PROPERTIES: [&str; 5] = ["lemma1", "lemma2", "theorem", "proposition", "bounds"];

/// Bodies whose brute-force thickness is compared, one in this many trials.
pub const BRUTE_EVERY: u64 = 100;
pub const BRUTE_SAMPLES: usize = 10_000;

/// Attempts at drawing a point of a lune before the lune is redrawn.
const LUNE_ATTEMPTS: usize = 1000;

/// Excess recorded for a trial whose instance could not be built.
const BUILD_FAILURE: f64 = f64::MAX;
/// Candidates this close to `pi/2` are checked against `diam = thickness`.
pub const WIDE_BRANCH_BAND: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    pub lemma1: f64,
    pub lemma2: f64,
    pub theorem: f64,
    pub theorem_wide: f64,
    pub equality_band: f64,
    pub proposition: f64,
    pub bounds: f64,
    pub brute: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            lemma1: 1e-10,
            lemma2: 1e-9,
            theorem: 1e-9,
            theorem_wide: 1e-6,
            equality_band: 1e-7,
            proposition: 1e-7,
            bounds: 1e-9,
            brute: 1e-3,
        }
    }
}

impl Tolerances {
    pub const KEYS: [&'static str; 8] =
        ["lemma1", "lemma2", "theorem", "theorem_wide", "equality_band", "proposition", "bounds", "brute"];

    /// Overrides one tolerance by name.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value >= 0.0) {
            return Err(GeometryError::OutOfRange { name: "tolerance", value });
        }
        let slot = match key {
            "lemma1" => &mut self.lemma1,
            "lemma2" => &mut self.lemma2,
            "theorem" => &mut self.theorem,
            "theorem_wide" => &mut self.theorem_wide,
            "equality_band" => &mut self.equality_band,
            "proposition" => &mut self.proposition,
            "bounds" => &mut self.bounds,
            "brute" => &mut self.brute,
            _ => return Err(GeometryError::DegenerateInput("unknown tolerance key")),
        };
        *slot = value;
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub trials: u64,
    pub seed: u64,
    pub tolerances: Tolerances,
    /// Amount subtracted from the diameter bound; nonzero only to check that
    /// the harness notices a wrong bound.
    pub bound_shift: f64,
}

impl VerifyOptions {
    pub fn new(trials: u64, seed: u64) -> Self {
        VerifyOptions { trials, seed, tolerances: Tolerances::default(), bound_shift: 0.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub property: String,
    pub trials: u64,
    pub failures: u64,
    /// Trials at the edge of a claim without breaking it.
    pub findings: u64,
    pub worst_violation: f64,
    pub tolerance: f64,
    pub seed: u64,
    pub witness: Value,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Copy, Debug)]
struct Outcome {
    excess: f64,
    finding: bool,
}

impl Outcome {
    fn new(violation: f64, tol: f64) -> Self {
        Outcome { excess: violation - tol, finding: false }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Random stream of trial `i` of `property`.
pub fn trial_rng(seed: u64, property: &str, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(property));
    rng.set_stream(i);
    rng
}

/// Area-uniform point of the sphere.
pub fn random_point<R: Rng>(rng: &mut R) -> UnitPoint {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..TAU);
    let s = (1.0 - z * z).max(0.0).sqrt();
    UnitPoint::normalized(Vec3::new(s * phi.cos(), s * phi.sin(), z))
}

/// Uniformly oriented unit tangent at `p`.
pub fn random_tangent<R: Rng>(rng: &mut R, p: &UnitPoint) -> Vec3 {
    let (e1, e2) = p.tangent_frame();
    let a: f64 = rng.gen_range(0.0..TAU);
    e1 * a.cos() + e2 * a.sin()
}

/// Area-uniform point of the cap of radius `radius` about `center`.
pub fn random_in_cap<R: Rng>(rng: &mut R, center: &UnitPoint, radius: f64) -> UnitPoint {
    let z: f64 = 1.0 - rng.gen::<f64>() * (1.0 - radius.cos());
    let t = random_tangent(rng, center);
    center.toward(&t, z.clamp(-1.0, 1.0).acos())
}

pub fn random_frame<R: Rng>(rng: &mut R) -> Frame {
    let c = random_point(rng);
    let t = random_tangent(rng, &c);
    Frame { center: c.to_array(), tangent: [t.x, t.y, t.z] }
}

pub const MAX_BODY_RETRIES: usize = 100;

/// Hull of `points` area-uniform samples in a randomly centered cap.
pub fn random_convex_body_with<R: Rng>(rng: &mut R, cap: f64, points: usize) -> Result<ConvexBody> {
    if !(cap > 0.0 && cap < FRAC_PI_2) {
        return Err(GeometryError::OutOfRange { name: "cap", value: cap });
    }
    if !(3..=50).contains(&points) {
        return Err(GeometryError::OutOfRange { name: "points", value: points as f64 });
    }
    let mut last = GeometryError::DegenerateInput("no attempt");
    for _ in 0..MAX_BODY_RETRIES {
        let center = random_point(rng);
        let pts: Vec<UnitPoint> = (0..points).map(|_| random_in_cap(rng, &center, cap)).collect();
        match convex_hull(&pts) {
            Ok(body) => return Ok(body),
            Err(e) => last = e,
        }
    }
    Err(last)
}

pub fn random_convex_body(cap: f64, points: usize, seed: u64) -> Result<ConvexBody> {
    random_convex_body_with(&mut ChaCha8Rng::seed_from_u64(seed), cap, points)
}

fn arr(p: &UnitPoint) -> Value {
    json!(p.to_array())
}

fn aggregate(
    property: &str,
    opts: &VerifyOptions,
    tolerance: f64,
    outcomes: &[Outcome],
    witness: impl Fn(u64) -> Value,
) -> VerificationReport {
    let mut worst: Option<(usize, f64)> = None;
    for (i, o) in outcomes.iter().enumerate() {
        if worst.is_none_or(|(_, w)| o.excess > w) {
            worst = Some((i, o.excess));
        }
    }
    VerificationReport {
        property: property.to_string(),
        trials: opts.trials,
        failures: outcomes.iter().filter(|o| o.excess > 0.0).count() as u64,
        findings: outcomes.iter().filter(|o| o.finding).count() as u64,
        worst_violation: worst.map_or(0.0, |w| w.1),
        tolerance,
        seed: opts.seed,
        witness: worst.map_or(Value::Null, |(i, _)| witness(i as u64)),
    }
}

fn run_trials(opts: &VerifyOptions, trial: impl Fn(u64) -> Outcome + Sync + Send) -> Vec<Outcome> {
    (0..opts.trials).into_par_iter().map(trial).collect()
}

struct LemmaInstance {
    lune: Lune,
    u: UnitPoint,
    v: UnitPoint,
    z: UnitPoint,
    q: UnitPoint,
}

impl LemmaInstance {
    fn violation(&self) -> f64 {
        dist(&self.q, &self.v) - dist(&self.q, &self.u).max(dist(&self.q, &self.z))
    }
}

fn lemma_instance(seed: u64, i: u64) -> LemmaInstance {
    let mut rng = trial_rng(seed, "lemma1", i);
    loop {
        let g = random_point(&mut rng);
        let angle = rng.gen_range(FRAC_PI_2..PI);
        let h = g.toward(&random_tangent(&mut rng, &g), angle);
        let Ok(lune) = Lune::new(Hemisphere::new(g), Hemisphere::new(h)) else { continue };
        let which = if rng.gen::<bool>() { Bounding::First } else { Bounding::Second };
        let semi = lune.boundary_semicircle(which);
        let u = semi.point_at(rng.gen_range(-FRAC_PI_2..=FRAC_PI_2));
        let z = semi.point_at(rng.gen_range(-FRAC_PI_2..=FRAC_PI_2));
        let Ok(uz) = Arc::new(u, z) else { continue };
        let v = uz.point_at_fraction(rng.gen());
        let q = (0..LUNE_ATTEMPTS).map(|_| random_point(&mut rng)).find(|q| lune.contains(q, 0.0));
        if let Some(q) = q {
            return LemmaInstance { lune, u, v, z, q };
        }
    }
}

/// Farthest point of an arc from a point of a lune of thickness at most
/// `pi/2` is an arc endpoint, for arcs on a bounding semicircle.
pub fn lemma_max(opts: &VerifyOptions) -> VerificationReport {
    let tol = opts.tolerances.lemma1;
    let outcomes = run_trials(opts, |i| Outcome::new(lemma_instance(opts.seed, i).violation(), tol));
    aggregate("lemma1", opts, tol, &outcomes, |i| {
        let x = lemma_instance(opts.seed, i);
        json!({
            "g": arr(&x.lune.first().center),
            "h": arr(&x.lune.second().center),
            "u": arr(&x.u),
            "v": arr(&x.v),
            "z": arr(&x.z),
            "q": arr(&x.q),
            "violation": x.violation(),
        })
    })
}

fn lemma2_instance(seed: u64, i: u64) -> Result<(ConvexBody, f64, f64)> {
    let mut rng = trial_rng(seed, "lemma2", i);
    loop {
        let cap = rng.gen_range(0.05..1.2);
        let points = rng.gen_range(3..=15);
        let body = random_convex_body_with(&mut rng, cap, points)?;
        let d = diameter(&body).value;
        if d <= FRAC_PI_2 {
            let de = diameter_of_extreme(&body).value;
            return Ok((body, d, de));
        }
    }
}

/// Diameter of a body of diameter at most `pi/2` equals that of its extreme
/// points.
pub fn diam_extreme(opts: &VerifyOptions) -> VerificationReport {
    let tol = opts.tolerances.lemma2;
    let outcomes = run_trials(opts, |i| match lemma2_instance(opts.seed, i) {
        Ok((_, d, de)) => Outcome::new((d - de).abs(), tol),
        Err(_) => Outcome::new(BUILD_FAILURE, 0.0),
    });
    aggregate("lemma2", opts, tol, &outcomes, |i| match lemma2_instance(opts.seed, i) {
        Ok((body, d, de)) => json!({ "body": body.to_data(), "diameter": d, "diameter_of_extreme": de }),
        Err(e) => json!({ "error": e.to_string() }),
    })
}

/// A reduced candidate body from the family shared by the diameter-bound
/// checks.
pub fn candidate_spec<R: Rng>(rng: &mut R, i: u64) -> BodySpec {
    let frame = Some(random_frame(rng));
    let odd = |rng: &mut R, max: u32| 2 * rng.gen_range(1..=(max - 1) / 2) + 1;
    match i % 10 {
        0 => BodySpec::QuarterDisk { radius: rng.gen_range(0.05..FRAC_PI_2 - 0.05), frame },
        1 => BodySpec::ReuleauxOddGon { n: odd(rng, 7), width: rng.gen_range(0.3..2.6), frame },
        9 => match (i / 10) % 3 {
            0 => BodySpec::QuarterDisk { radius: FRAC_PI_2, frame },
            1 => BodySpec::RegularOddGon { n: odd(rng, 11), thickness: FRAC_PI_2, frame },
            _ => BodySpec::ReuleauxOddGon { n: odd(rng, 7), width: FRAC_PI_2, frame },
        },
        _ => BodySpec::RegularOddGon { n: odd(rng, 11), thickness: rng.gen_range(0.05..FRAC_PI_2 - 0.05), frame },
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CandidateMeasure {
    pub spec: BodySpec,
    pub thickness: f64,
    pub diameter: f64,
}

pub fn measure_candidate(spec: &BodySpec) -> Result<CandidateMeasure> {
    let body = spec.build()?;
    Ok(CandidateMeasure { spec: *spec, thickness: thickness(&body)?.value, diameter: diameter(&body).value })
}

fn candidate(seed: u64, i: u64) -> Result<CandidateMeasure> {
    measure_candidate(&candidate_spec(&mut trial_rng(seed, "candidates", i), i))
}

fn candidates(opts: &VerifyOptions) -> Vec<std::result::Result<CandidateMeasure, String>> {
    (0..opts.trials).into_par_iter().map(|i| candidate(opts.seed, i).map_err(|e| e.to_string())).collect()
}

/// Diameter bound `arccos(cos^2 thickness)`, evaluated as
/// `2 arcsin(sin(thickness) / sqrt 2)` to keep precision near `0`.
pub fn diameter_bound(thickness: f64) -> f64 {
    2.0 * (thickness.sin().abs() * std::f64::consts::FRAC_1_SQRT_2).min(1.0).asin()
}

fn theorem_outcome(m: &CandidateMeasure, opts: &VerifyOptions) -> Outcome {
    let tol = &opts.tolerances;
    if m.thickness >= FRAC_PI_2 - WIDE_BRANCH_BAND {
        return Outcome::new((m.diameter - m.thickness).abs(), tol.theorem_wide);
    }
    let bound = diameter_bound(m.thickness) - opts.bound_shift;
    if matches!(m.spec, BodySpec::QuarterDisk { .. }) {
        Outcome::new((m.diameter - bound).abs(), tol.theorem)
    } else {
        Outcome { excess: m.diameter - bound - tol.theorem, finding: bound - m.diameter <= tol.equality_band }
    }
}

fn theorem_report(opts: &VerifyOptions, ms: &[std::result::Result<CandidateMeasure, String>]) -> VerificationReport {
    let outcomes: Vec<Outcome> = ms
        .iter()
        .map(|m| match m {
            Ok(m) => theorem_outcome(m, opts),
            Err(_) => Outcome::new(BUILD_FAILURE, 0.0),
        })
        .collect();
    aggregate("theorem", opts, opts.tolerances.theorem, &outcomes, |i| match &ms[i as usize] {
        Ok(m) => json!({
            "candidate": m,
            "bound": diameter_bound(m.thickness) - opts.bound_shift,
            "quarter_disk": matches!(m.spec, BodySpec::QuarterDisk { .. }),
        }),
        Err(e) => json!({ "error": e }),
    })
}

fn sign_band(x: f64, band: f64) -> i8 {
    if x > band {
        1
    } else if x < -band {
        -1
    } else {
        0
    }
}

fn proposition_outcome(m: &CandidateMeasure, band: f64) -> Outcome {
    let (a, b) = (m.diameter - FRAC_PI_2, m.thickness - FRAC_PI_2);
    let violation = if sign_band(a, band) == sign_band(b, band) { 0.0 } else { a.abs().max(b.abs()) };
    Outcome::new(violation, band)
}

fn proposition_report(
    opts: &VerifyOptions,
    ms: &[std::result::Result<CandidateMeasure, String>],
) -> VerificationReport {
    let band = opts.tolerances.proposition;
    let outcomes: Vec<Outcome> = ms
        .iter()
        .map(|m| match m {
            Ok(m) => proposition_outcome(m, band),
            Err(_) => Outcome::new(BUILD_FAILURE, 0.0),
        })
        .collect();
    aggregate("proposition", opts, band, &outcomes, |i| match &ms[i as usize] {
        Ok(m) => json!({ "candidate": m }),
        Err(e) => json!({ "error": e }),
    })
}

/// Diameter of reduced candidates against `arccos(cos^2 thickness)`, with
/// equality expected exactly for quarter-disks, and diameter equal to
/// thickness from `pi/2` on.
pub fn main_theorem(opts: &VerifyOptions) -> VerificationReport {
    theorem_report(opts, &candidates(opts))
}

/// Diameter and thickness of reduced candidates lie on the same side of
/// `pi/2`.
pub fn proposition(opts: &VerifyOptions) -> VerificationReport {
    proposition_report(opts, &candidates(opts))
}

struct BoundsInstance {
    body: ConvexBody,
    diameter: f64,
    thickness: f64,
    widths: Vec<(UnitPoint, f64)>,
    grid: (f64, f64, f64),
    brute: Option<f64>,
}

fn bounds_instance(opts: &VerifyOptions, i: u64) -> Result<BoundsInstance> {
    let mut rng = trial_rng(opts.seed, "bounds", i);
    let body = if i % 5 == 4 {
        candidate_spec(&mut rng, i / 5).build()?
    } else {
        let cap = rng.gen_range(0.05..1.4);
        let points = rng.gen_range(3..=20);
        random_convex_body_with(&mut rng, cap, points)?
    };
    let d = diameter(&body).value;
    let t = thickness(&body)?.value;
    let features = body.support_features();
    let mut widths = Vec::new();
    for _ in 0..3 {
        let f = &features[rng.gen_range(0..features.len())];
        let k = f.point_at_fraction(rng.gen());
        widths.push((k, width_at(&body, &Hemisphere::new(k))?.thickness));
    }
    let g = (i as f64 + 0.5) / opts.trials as f64 * FRAC_PI_2;
    let weak = 2.0 * (2f64.sqrt() * (0.5 * g).tan()).atan();
    let brute =
        if i.is_multiple_of(BRUTE_EVERY) { Some(brute_thickness(&body, BRUTE_SAMPLES, rng.gen())?) } else { None };
    Ok(BoundsInstance { body, diameter: d, thickness: t, widths, grid: (g, diameter_bound(g), weak), brute })
}

fn bounds_outcome(x: &BoundsInstance, tol: &Tolerances) -> Outcome {
    let mut excess = x.thickness - x.diameter - tol.bounds;
    for (_, w) in &x.widths {
        excess = excess.max(w - x.diameter - tol.bounds);
    }
    excess = excess.max(x.grid.1 - x.grid.2 - tol.bounds);
    if let Some(b) = x.brute {
        excess = excess.max((x.thickness - b).abs() - tol.brute);
    }
    Outcome { excess, finding: false }
}

/// Width and thickness against the diameter, the diameter bound against the
/// weaker `2 arctan(sqrt 2 tan(thickness / 2))`, and thickness against its
/// brute-force estimate.
pub fn bounds_and_duality(opts: &VerifyOptions) -> VerificationReport {
    let outcomes = run_trials(opts, |i| match bounds_instance(opts, i) {
        Ok(x) => bounds_outcome(&x, &opts.tolerances),
        Err(_) => Outcome::new(BUILD_FAILURE, 0.0),
    });
    aggregate("bounds", opts, opts.tolerances.bounds, &outcomes, |i| match bounds_instance(opts, i) {
        Ok(x) => json!({
            "body": x.body.to_data(),
            "diameter": x.diameter,
            "thickness": x.thickness,
            "widths": x.widths.iter().map(|(k, w)| json!({ "k": arr(k), "width": w })).collect::<Vec<_>>(),
            "grid": { "thickness": x.grid.0, "bound": x.grid.1, "weaker_bound": x.grid.2 },
            "brute_thickness": x.brute,
        }),
        Err(e) => json!({ "error": e.to_string() }),
    })
}

/// Runs one property, or all of them for `"all"`, in the order of
/// [`PROPERTIES`].
pub fn run_suite(suite: &str, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        "lemma1" => vec![lemma_max(opts)],
        "lemma2" => vec![diam_extreme(opts)],
        "theorem" => vec![main_theorem(opts)],
        "proposition" => vec![proposition(opts)],
        "bounds" => vec![bounds_and_duality(opts)],
        "all" => {
            let ms = candidates(opts);
            vec![
                lemma_max(opts),
                diam_extreme(opts),
                theorem_report(opts, &ms),
                proposition_report(opts, &ms),
                bounds_and_duality(opts),
            ]
        }
        _ => return Err(GeometryError::DegenerateInput("unknown suite")),
    })
}

pub fn check_lemma_max(trials: u64, seed: u64) -> VerificationReport {
    lemma_max(&VerifyOptions::new(trials, seed))
}

pub fn check_diam_extreme(trials: u64, seed: u64) -> VerificationReport {
    diam_extreme(&VerifyOptions::new(trials, seed))
}

pub fn check_main_theorem(trials: u64, seed: u64) -> VerificationReport {
    main_theorem(&VerifyOptions::new(trials, seed))
}

pub fn check_proposition(trials: u64, seed: u64) -> VerificationReport {
    proposition(&VerifyOptions::new(trials, seed))
}

pub fn check_bounds_and_duality(trials: u64, seed: u64) -> VerificationReport {
    bounds_and_duality(&VerifyOptions::new(trials, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn lemma_endpoint_and_center_cases() {
        let g = UnitPoint::NORTH;
        let h = g.toward(&Vec3::x(), FRAC_PI_2);
        let lune = Lune::new(Hemisphere::new(g), Hemisphere::new(h)).unwrap();
        let semi = lune.boundary_semicircle(Bounding::First);
        let u = semi.point_at(-0.4);
        let z = semi.point_at(1.1);
        // v = u
        let x = LemmaInstance { lune, u, v: u, z, q: g.toward(&Vec3::new(1.0, 1.0, 0.0).normalize(), 0.7) };
        assert!(x.violation() <= 0.0);
        // thickness pi/2: the center of the other semicircle is equidistant
        // from all of this one
        let q = lune.boundary_semicircle(Bounding::Second).center;
        let v = Arc::new(u, z).unwrap().point_at_fraction(0.3);
        let x = LemmaInstance { lune, u, v, z, q };
        assert_abs_diff_eq!(x.violation(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn suites_pass_and_repeat() {
        let opts = VerifyOptions::new(60, 3);
        let a = run_suite("all", &opts).unwrap();
        assert_eq!(a.len(), 5);
        for r in &a {
            assert!(r.passed(), "{r:?}");
            assert!(r.worst_violation <= 0.0);
        }
        assert_eq!(a, run_suite("all", &opts).unwrap());
        assert_eq!(a[2], main_theorem(&opts));
    }

    #[test]
    fn bound_shift_is_caught() {
        let mut opts = VerifyOptions::new(20, 1);
        opts.bound_shift = 1e-3;
        let r = main_theorem(&opts);
        assert!(r.failures > 0);
        assert!(r.witness.get("candidate").is_some());
    }

    #[test]
    fn random_bodies() {
        let a = random_convex_body(0.3, 12, 7).unwrap();
        assert_eq!(a, random_convex_body(0.3, 12, 7).unwrap());
        assert!(diameter(&a).value <= 0.6 + 1e-12);
        assert_eq!(random_convex_body(0.5, 3, 1).unwrap().vertices().len(), 3);
        assert!(random_convex_body(FRAC_PI_2, 5, 1).is_err());
        assert!(random_convex_body(0.5, 2, 1).is_err());
    }

    #[test]
    fn bound_forms_agree() {
        for k in 1..100 {
            let d = k as f64 * 0.0157;
            assert_abs_diff_eq!(diameter_bound(d), (d.cos() * d.cos()).acos(), epsilon = 1e-12);
        }
    }

    #[test]
    fn weaker_bound_example() {
        let d = PI / 3.0;
        assert_abs_diff_eq!(diameter_bound(d), 1.318_116_071_652_818, epsilon = 1e-12);
        assert_abs_diff_eq!(2.0 * (2f64.sqrt() * (0.5 * d).tan()).atan(), 1.369_438_406_004_566, epsilon = 1e-9);
    }

    #[test]
    fn tolerance_overrides() {
        let mut t = Tolerances::default();
        t.set("brute", 2e-3).unwrap();
        assert_eq!(t.brute, 2e-3);
        assert!(t.set("nope", 1.0).is_err());
        assert!(t.set("lemma1", -1.0).is_err());
    }
}

//! Convexity on the unit sphere: lunes, width, thickness, diameter and
//! reduced bodies.

pub mod arc;
pub mod body;
pub mod error;
pub mod harness;
pub mod hull;
pub mod measure;
pub mod reduced;
pub mod shapes;
pub mod sphere;
pub mod width;

pub use arc::{farthest_on_arc, nearest_on_arc, Arc, CircleArc};
pub use body::{BodyData, BoundaryPoint, ConvexBody, Edge, EdgeData, EdgeKind, Location, Side, SupportFeature};
pub use error::{GeometryError, Result};
pub use harness::{random_convex_body, run_suite, Tolerances, VerificationReport, VerifyOptions};
pub use hull::convex_hull;
pub use measure::{diameter, diameter_of_extreme, extreme_points, Diameter, ExtremeSet, PairKind};
pub use reduced::{reducedness_check, reducedness_check_with, ReducednessOptions, ReducednessReport};
pub use shapes::{disk, disk_at, isosceles_triangle, quarter_disk, regular_odd_gon, reuleaux_odd_gon, BodySpec, Frame};
pub use sphere::{
    boundary_semicircle, dist, lune_thickness, right_hypotenuse, Bounding, Hemisphere, Lune, Semicircle, UnitPoint,
    Vec3, GEOM_TOL,
};
pub use width::{
    brute_thickness, is_constant_width, is_supporting, polar_dual, thickness, width_at, SupportSet, ThicknessResult,
    WidthResult,
};

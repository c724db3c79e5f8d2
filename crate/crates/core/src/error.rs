use thiserror::Error;

/// Errors raised while constructing or validating spherical objects.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("vector cannot be normalized onto the sphere: {0:?}")]
    Degenerate([f64; 3]),
    #[error("points are equal or antipodal")]
    EqualOrAntipodal,
    #[error("arc is not shorter than a half great circle")]
    ArcTooLong,
    #[error("invalid lune: hemisphere centers are equal or opposite")]
    InvalidLune,
    #[error("parameter `{name}` out of range: {value}")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("points are not contained in any open hemisphere")]
    NoWitnessHemisphere,
    #[error("input is degenerate: {0}")]
    DegenerateInput(&'static str),
    #[error("boundary is not closed: edge {0} does not end where edge {1} starts")]
    NotClosed(usize, usize),
    #[error("circular edge {edge} endpoint is {offset:e} away from its circle")]
    OffCircle { edge: usize, offset: f64 },
    #[error("body is not convex at vertex {0}")]
    NotConvexAt(usize),
    #[error("circular edge {0} bends away from the body")]
    ConcaveEdge(usize),
    #[error("total turning {0} is not in (0, 2pi)")]
    BadTurning(f64),
    #[error("hemisphere does not support the body")]
    NotSupporting,
    #[error("bisection failed: {0}")]
    Bisection(&'static str),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

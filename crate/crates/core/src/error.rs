use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HotspotError {
    #[error("timestamps must strictly increase (vertex {index})")]
    NonMonotoneTime { index: usize },
    #[error("step into vertex {index} changes more than one coordinate")]
    NonOrthogonalStep { index: usize },
    #[error("trajectory has no vertices")]
    NoVertices,
    #[error("trajectory has no edges")]
    EmptyTrajectory,
    #[error("expected an x-parallel or point edge, found a y-parallel one")]
    VerticalEdge,
    #[error("edge is not axis-parallel")]
    NotAxisParallel,
    #[error("range [{start}, {end}] is outside 1..={len}")]
    IndexOutOfRange { start: usize, end: usize, len: usize },
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("expected a {expected}-dimensional trajectory, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("side length must be positive")]
    NonPositiveSide,
    #[error("invalid number {0:?}")]
    InvalidNumber(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = HotspotError> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by tile arithmetic, surface lifting and the codec.
///
/// Display strings are single-line and start with a kebab-case tag so that
/// callers (and the CLI) can match on them. Tile positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension-mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid-dimension: {0} (need at least 2)")]
    InvalidDimension(usize),

    #[error("invalid-tile: {0}")]
    InvalidTile(String),

    #[error("parse-error: {0}")]
    Parse(String),

    #[error("no-lift: neighbours are not adjacent on the slot cycle")]
    NoLift,

    #[error("invalid-turn at tile {tile}")]
    InvalidTurn { tile: usize },

    #[error("not-adjacent at tile {tile}")]
    NotAdjacent { tile: usize },

    #[error("no-surface-tile over {flat}")]
    NoSurfaceTile { flat: String },

    #[error("ambiguous-surface over {flat}: {count} lift classes lie on the surface")]
    AmbiguousSurface { flat: String, count: usize },

    #[error("trajectory-break at tile {tile}")]
    TrajectoryBreak { tile: usize },

    #[error("overlap-mismatch at tile {tile}")]
    OverlapMismatch { tile: usize },

    #[error("patch-conflict at tile {tile} (drawing {drawing})")]
    PatchConflict { tile: usize, drawing: usize },

    #[error("bad-range for drawing {drawing}: {reason}")]
    BadRange { drawing: usize, reason: String },

    #[error("empty-drawings: at least one drawing is required")]
    EmptyDrawings,

    #[error("empty-code")]
    EmptyCode,

    #[error("length-not-multiple-of-three: {len}")]
    LengthNotMultipleOfThree { len: usize },

    #[error("wrong-dimension: expected {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

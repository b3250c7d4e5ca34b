use thiserror::Error;

/// Errors produced by walk construction, evolution, and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coin angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    #[error("a cycle needs at least 2 positions, got {0}")]
    CycleTooSmall(usize),

    #[error("line window exhausted: state already at the step budget t_max = {0}")]
    WindowOverflow(usize),

    #[error("cannot undo a step of a state at t = 0")]
    NothingToUndo,

    #[error("position {0} is outside the position set of this topology")]
    InvalidPosition(i64),

    #[error("variance is undefined on a cycle (position is periodic)")]
    VarianceOnCycle,

    #[error("operation requires a cycle topology")]
    CycleRequired,

    #[error("time average needs a horizon of at least 1 step")]
    EmptyHorizon,

    #[error("series horizon {got} is too short, need at least {need}")]
    SeriesTooShort { got: usize, need: usize },

    #[error("distribution over {len} positions does not match n = {n}")]
    SizeMismatch { len: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use crate::quaternion::Quaternion;
use thiserror::Error;

/// Errors raised by kernel operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The sphere has no point with rational components and no
    /// representative was supplied by the caller.
    #[error("sphere admits no rational representative")]
    NoRationalRepresentative,

    #[error("trace^2 exceeds 4*normsq: not a sphere")]
    InvalidSphere,

    #[error("ring mismatch: {left} vs {right} variables")]
    RingMismatch { left: usize, right: usize },

    #[error("arity mismatch: expected {expected} components, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("variable index {var} out of range for {nvars} variables")]
    VarOutOfRange { var: usize, nvars: usize },

    /// The divisor's leading coefficient in the division variable is not
    /// the constant 1 (or its degree there is zero).
    #[error("divisor is not monic in the division variable")]
    NotMonic,

    /// Zero factorization was requested at a point where the polynomial
    /// does not vanish; carries the (nonzero) value at the point.
    #[error("polynomial does not vanish at the point (value {value})")]
    NotAZero { value: Box<Quaternion> },

    /// `{a} x H` with real `a` is just a strip; use the strip predicate.
    #[error("real first component not supported here")]
    RealPointNotSupported,

    #[error("grid points do not lie in a single slice")]
    PointsNotInOneSlice,

    /// Point components must commute pairwise for this predicate.
    #[error("point components must commute pairwise")]
    CommutingRequired,

    /// Like `CommutingRequired`, but reported distinctly for point-ideal
    /// membership: at a non-commuting point the ideal is the whole ring,
    /// so a silent `true` would mask misuse.
    #[error("point ideal at a non-commuting point is the whole ring")]
    NonCommutingPoint,

    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

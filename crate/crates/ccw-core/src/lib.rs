//! Combinatorial topology of simple closed curves on non-orientable surfaces.
//!
//! Purpose: model the non-orientable surface N_{g,n} as a polygon with edge
//! identifications, realize simple closed curves as transit words across the
//! glued edges, compute geometric intersection numbers by three independent
//! routes (closed-form chord rules, bigon reduction on an exact arrangement,
//! and a brute-force polyline oracle), classify curves topologically by
//! cutting, build the finite curve-complex subcomplex spanned by the standard
//! curve families, and verify pants-decomposition and rigidity statements on
//! top of that machinery.
//!
//! Why this design: every geometric quantity is computed with exact rational
//! arithmetic on a fixed convex polygon model, so all results are
//! deterministic and independently checkable; the three intersection routes
//! share no code beyond the curve types, so agreement between them is
//! meaningful evidence of correctness.

pub mod arrangement;
pub mod complex;
pub mod curves;
pub mod intersection;
pub mod oracle;
pub mod pants;
pub mod position;
pub mod rigidity;
pub mod surface_model;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The requested surface has no polygon model (g = n = 0) or parameters
    /// are out of the supported range for the requested operation.
    #[error("invalid surface parameters: {0}")]
    InvalidSurface(String),

    /// A curve description does not denote a valid curve on the given
    /// surface (index out of range, degenerate chord, etc.).
    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    /// An operation's precondition on its curve arguments failed
    /// (e.g. twisting about a one-sided curve).
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// A verification job failed: the checked statement is false for the
    /// given input, with a human-readable explanation of the first violation.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    /// A search exceeded its configured budget; raising the budget may allow
    /// it to complete.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// An internal invariant was violated; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared by the whole library.
//!
//! Every fallible operation reports which structural rule was broken; the
//! messages are written so a CLI can surface them to users verbatim.

use std::fmt;

/// Errors raised by bundle validation, ring arithmetic, cone construction,
/// and the cover oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parabolic weight list at a marked point is malformed (weight outside
    /// `[0, 1)`, not strictly increasing, zero multiplicity, or multiplicity
    /// sum different from the rank).
    InvalidWeights { point: String, detail: String },
    /// Line-summand data does not match the declared rank, degree, or the
    /// weight lists at the marked points.
    SplitInconsistent { detail: String },
    /// Both line-summand data and explicit Harder-Narasimhan data were
    /// supplied; the bundle's filtration would be over-determined.
    ConflictingFiltrationSources,
    /// Neither line-summand data nor explicit Harder-Narasimhan data is
    /// available (and the rank is not 1), so the filtration cannot be derived.
    UnderdeterminedBundle,
    /// Explicit Harder-Narasimhan data violates one of its invariants; the
    /// detail names the broken rule.
    InvalidFiltration { detail: String },
    /// Line-summand data was required by an operation but the bundle does not
    /// carry any.
    SplitDataRequired,
    /// The common denominator of the parabolic weights does not fit in `u64`.
    LevelOverflow,
    /// Two ring elements (or a class and a cone) live over different ring
    /// contexts.
    ContextMismatch { detail: String },
    /// A product would land in a grade beyond the dimension of the
    /// projectivization; such classes are not representable.
    GradeOverflow { grade: u32, rank: u32 },
    /// An operation received a class of the wrong grade.
    GradeMismatch { detail: String },
    /// An operation received a class with the wrong side tag (for example a
    /// product of two capped classes).
    SideMismatch { detail: String },
    /// The requested codimension `k` is outside `1 ..= rank - 1`.
    KOutOfRange { k: u32, rank: u32 },
    /// Rank-1 bundles have no intermediate grades, so the slope-excess table
    /// is empty.
    EmptyNuTable,
    /// Cone generators are proportional (or zero); the cone is not
    /// full-dimensional in its slice.
    DegenerateCone { detail: String },
    /// The requested cover degree is not admissible for this bundle; the
    /// smallest admissible degree is reported.
    InadmissibleGamma { gamma: u64, smallest: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWeights { point, detail } => {
                write!(f, "invalid weights at point {point}: {detail}")
            }
            Error::SplitInconsistent { detail } => {
                write!(f, "line-summand data inconsistent: {detail}")
            }
            Error::ConflictingFiltrationSources => write!(
                f,
                "both line-summand data and explicit HN data supplied; use exactly one"
            ),
            Error::UnderdeterminedBundle => write!(
                f,
                "bundle is underdetermined: no line-summand data, no explicit HN data, rank > 1"
            ),
            Error::InvalidFiltration { detail } => write!(f, "invalid HN data: {detail}"),
            Error::SplitDataRequired => {
                write!(f, "operation requires line-summand data, but none is present")
            }
            Error::LevelOverflow => {
                write!(f, "weight denominators have no common multiple within u64")
            }
            Error::ContextMismatch { detail } => write!(f, "ring context mismatch: {detail}"),
            Error::GradeOverflow { grade, rank } => write!(
                f,
                "grade {grade} exceeds the dimension {rank} of the projectivization; \
                 classes beyond the top grade are not representable"
            ),
            Error::GradeMismatch { detail } => write!(f, "grade mismatch: {detail}"),
            Error::SideMismatch { detail } => write!(f, "side mismatch: {detail}"),
            Error::KOutOfRange { k, rank } => {
                write!(f, "codimension {k} out of range 1..={} for rank {rank}", rank - 1)
            }
            Error::EmptyNuTable => {
                write!(f, "rank-1 bundles have no intermediate grades; the nu table is empty")
            }
            Error::DegenerateCone { detail } => write!(f, "degenerate cone: {detail}"),
            Error::InadmissibleGamma { gamma, smallest } => write!(
                f,
                "cover degree {gamma} is not admissible; the smallest admissible degree is {smallest}"
            ),
        }
    }
}

impl std::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

use crate::diagram::Violation;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The event word does not describe a valid diagram of the requested kind.
    #[error("invalid diagram: {}", format_violations(.0))]
    InvalidDiagram(Vec<Violation>),

    /// Text-format parse failure.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A strand index outside `1..=m`.
    #[error("strand index {strand} out of range 1..={num_strands}")]
    StrandOutOfRange { strand: usize, num_strands: usize },

    /// A braid letter outside `1..=m-1`.
    #[error("braid letter {letter} out of range 1..={max} (sign must be +1 or -1)")]
    BadBraidLetter { letter: usize, max: usize },

    /// Milnor index outside the supported families.
    #[error("unsupported Milnor index {index:?}: supported are ij, ijk (distinct), and iijj")]
    UnsupportedIndex { index: Vec<usize> },

    /// Truncation degree too small for the requested computation.
    #[error("truncation degree {q} too small (need at least {need})")]
    TruncationTooSmall { q: usize, need: usize },

    /// A word letter without an assigned series.
    #[error("no series assigned to generator {generator}")]
    MissingAssignment { generator: usize },

    /// An invariant was requested outside its domain of definition.
    #[error("linking number lk({i},{j}) = {value} must vanish to compute {what}")]
    NonVanishingLinking {
        i: usize,
        j: usize,
        value: i64,
        what: &'static str,
    },

    /// Arf invariant of a diagram that is not a knot.
    #[error("expected a 1-component closed diagram, found {components} components")]
    NotAKnot { components: usize },

    /// Operation restricted to 2-strand diagrams.
    #[error("operation requires a 2-strand diagram, found {num_strands} strands")]
    NotTwoStrands { num_strands: usize },
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::elemset::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("poset has no elements")]
    EmptyPoset,

    #[error("poset has {n} elements, above the cap of {cap}")]
    TooManyElements { n: usize, cap: usize },

    #[error("element `{0}` declared twice")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("order declarations violate antisymmetry: cycle {}", .cycle.join(" <= "))]
    AntisymmetryViolation { cycle: Vec<String> },

    #[error("element index {0} is out of range")]
    IndexOutOfRange(Elem),

    #[error("pair ({x}, {y}) is outside the star domain: {y} is not below {x}")]
    NotInSection { x: String, y: String },

    #[error("table shape mismatch: {0}")]
    TableShape(String),

    #[error("poset is not sectionally pseudocomplemented: no greatest candidate at ({x}, {y})")]
    NotSectionallyPseudocomplemented { x: String, y: String },

    #[error("poset is not sectionally bounded: [{0}) has no greatest element")]
    NotSectionallyBounded(String),

    #[error("poset is not a lower semilattice: {x} and {y} have no meet")]
    NotMeetSemilattice { x: String, y: String },

    #[error("system {system} requires {required}")]
    StructureMismatch { system: String, required: String },

    #[error("system {0} requires a local subset selection")]
    MissingSelection(String),

    #[error("selection violates {axiom} at {witness}")]
    SelectionAxiomViolation { axiom: String, witness: String },

    #[error("internal disagreement between {what} at ({x}, {y})")]
    InternalDisagreement { what: String, x: String, y: String },

    #[error("m-extension and max-form disagree at ({x}, {y})")]
    MextSchDisagreement { x: String, y: String },

    #[error("{what}: {requested} exceeds cap {cap}")]
    SizeCap {
        what: String,
        requested: usize,
        cap: usize,
    },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown predicate id `{0}`")]
    UnknownPredicate(String),

    #[error("subset is empty")]
    EmptySubset,
}

pub type Result<T> = std::result::Result<T, Error>;

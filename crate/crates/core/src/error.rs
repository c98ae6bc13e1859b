use thiserror::Error;

use crate::algebra::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("table violates the quandle axioms: {0}")]
    AxiomViolation(AxiomReport),

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("group enumeration exceeded the cap of {bound} elements")]
    BoundExceeded { bound: usize },

    #[error("ball exploration exceeded the cap of {cap} vertices")]
    VertexCap { cap: usize },

    #[error("cannot combine a {left} automorphism with a {right} one")]
    MixedRepresentation {
        left: &'static str,
        right: &'static str,
    },

    #[error("cannot apply a {automorphism} automorphism to a {element} element")]
    ElementMismatch {
        automorphism: &'static str,
        element: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not unimodular (determinant {determinant})")]
    NotUnimodular { determinant: String },

    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(String),

    #[error("subset is not closed under conjugation: {element} conjugated by {conjugator} leaves it")]
    NotConjugationClosed { element: usize, conjugator: usize },

    #[error("map is not a group automorphism: fails on the pair ({x}, {y})")]
    NotAutomorphism { x: usize, y: usize },

    #[error("map is not a quandle automorphism: fails on the pair ({x}, {y})")]
    NotQuandleAutomorphism { x: usize, y: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("malformed expression: {0}")]
    MalformedExpression(String),

    #[error("cannot parse element `{0}`")]
    ParseElement(String),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

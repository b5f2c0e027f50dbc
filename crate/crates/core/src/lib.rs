//! Exact computations on simple Lie algebras and their nilpotent orbits.
//!
//! The crate builds root systems and Chevalley bases of every simple type,
//! computes Dynkin gradings and sl2-triples, runs the smoothness and
//! pairing tests used to classify coverings of nilpotent orbit closures,
//! handles the partition calculus for classical orbits, and models the
//! moment map of the symplectic minimal orbit. All arithmetic is exact.

pub mod chevalley;
pub mod curated;
pub mod dynkin;
pub mod linalg;
pub mod matmodel;
pub mod partitions;
pub mod report;
pub mod rootsys;
pub mod suites;

pub use chevalley::{ChevalleyAlgebra, LieElement};
pub use dynkin::{Grading, Sl2Triple, WeightedDiagram};
pub use linalg::Q;
//pub use partitions::{ClassicalType, JordanOrbit, OrbitPoset};
pub use rootsys::{CartanType, Family, Root, RootSystem};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse Cartan type `{0}`")]
    ParseType(String),
    #[error("{op} requires {expected}, got {got}")]
    WrongType {
        op: &'static str,
        expected: &'static str,
        got: CartanType,
    },
    #[error("elements belong to different algebras ({0} and {1})")]
    MixedAlgebras(CartanType, CartanType),
    #[error("{0} must be nonzero")]
    ZeroElement(&'static str),
    #[error("element does not lie in {0}")]
    NotInSubspace(&'static str),
    #[error("no sl2-triple: the element does not realize this diagram's orbit")]
    NoTriple,
    #[error("diagram for {ty} needs {expected} labels, got {got}")]
    DiagramLength {
        ty: CartanType,
        expected: usize,
        got: usize,
    },
    #[error("diagram label {0} is outside {{0, 1, 2}}")]
    DiagramLabel(i64),
    #[error("invalid partition {partition:?} for {ty}: {reason}")]
    InvalidPartition {
        ty: String,
        partition: Vec<u32>,
        reason: String,
    },
    #[error("parse error at line {line}: {msg}")]
    TableParse { line: usize, msg: String },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Error type shared by all modules.

use core::fmt;

use crate::realize::Violation;
use crate::vector::DistanceVector;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex label outside `0..vertex_count`.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// An edge from a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered edge was given twice.
    DuplicateEdge { u: usize, v: usize },
    /// A landmark list names the same vertex twice.
    DuplicateLandmark { vertex: usize },
    /// An operation needing at least one landmark got none.
    EmptyLandmarks,
    /// The operation is only defined on connected graphs.
    Disconnected,
    /// Two vertices share this metric representation, so the landmarks do not resolve.
    NotResolving { vector: DistanceVector },
    /// A vector set must contain at least one vector.
    EmptyVectorSet,
    /// A vector set must have dimension at least one.
    ZeroDimension,
    /// Two vectors of different lengths were combined.
    LengthMismatch { expected: usize, found: usize },
    /// The same vector was given twice when building a set.
    DuplicateVector { vector: DistanceVector },
    /// The set fails the realizability characterization.
    NotRealizable { violation: Violation },
    /// Two realizations do not realize the same vector set.
    RealizedSetMismatch,
    /// The given pair is not an edge of the strong product.
    NotStrongAdjacent { u: DistanceVector, v: DistanceVector },
    /// The edge to add is already present.
    EdgeAlreadyPresent { u: DistanceVector, v: DistanceVector },
    /// A vector that should belong to the realized set does not.
    VectorNotInSet { vector: DistanceVector },
    /// The uniqueness decision is only available for this dimension range.
    UnsupportedDimension { dimension: usize },
    /// A witness failed validation against the set.
    InvalidWitness { reason: &'static str },
    /// An internally constructed realization failed its own re-verification.
    /// This signals a logic bug and must never occur on valid inputs.
    VerificationFailed,
    /// The canonical edge count exceeds the enumeration budget.
    BudgetExceeded { canonical_edges: usize, budget: usize },
    /// The requested strong-grid order is too small to host the set.
    OrderTooSmall { order: usize, required: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range (graph has {vertex_count} vertices)")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            Error::DuplicateLandmark { vertex } => {
                write!(f, "vertex {vertex} listed twice in landmark set")
            }
            Error::EmptyLandmarks => write!(f, "landmark set is empty"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NotResolving { vector } => {
                write!(f, "not a resolving set: representation {vector} is shared")
            }
            Error::EmptyVectorSet => write!(f, "vector set is empty"),
            Error::ZeroDimension => write!(f, "vector set dimension must be at least 1"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "vector length mismatch: expected {expected}, found {found}")
            }
            Error::DuplicateVector { vector } => write!(f, "duplicate vector {vector}"),
            Error::NotRealizable { violation } => write!(f, "not realizable: {violation}"),
            Error::RealizedSetMismatch => {
                write!(f, "realizations do not share the same realized set")
            }
            Error::NotStrongAdjacent { u, v } => {
                write!(f, "{u} and {v} are not adjacent in the strong product")
            }
            Error::EdgeAlreadyPresent { u, v } => write!(f, "edge {u}-{v} already present"),
            Error::VectorNotInSet { vector } => write!(f, "vector {vector} not in the set"),
            Error::UnsupportedDimension { dimension } => {
                write!(f, "uniqueness is not decided for dimension {dimension}")
            }
            Error::InvalidWitness { reason } => write!(f, "invalid witness: {reason}"),
            Error::VerificationFailed => {
                write!(f, "internal re-verification failed (logic bug)")
            }
            Error::BudgetExceeded { canonical_edges, budget } => {
                write!(
                    f,
                    "canonical edge count {canonical_edges} exceeds enumeration budget {budget}"
                )
            }
            Error::OrderTooSmall { order, required } => {
                write!(f, "grid order {order} too small, need at least {required}")
            }
        }
    }
}

impl core::error::Error for Error {}

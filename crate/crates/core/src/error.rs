use alloc::string::String;
use core::fmt;

use crate::sets::IntSet;
use crate::topology::TopologyViolation;

/// Errors raised by the library. Verification failures are not errors; they
/// are reported through [`crate::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A sumset operand was the empty set.
    EmptyOperand,
    /// An element exceeds the bound in force.
    ElementOutOfRange {
        element: u32,
        bound: u32,
    },
    /// The ground set does not contain 0.
    MissingZero,
    /// The ground set is larger than the configured cap.
    GroundSetTooLarge {
        size: usize,
        cap: usize,
    },
    /// A set was expected to be a subset of the ground set.
    NotASubset {
        set: IntSet,
        ground: IntSet,
    },
    /// A set literal could not be parsed.
    InvalidSetLiteral(String),
    /// An edge joins a vertex to itself.
    Loop(String),
    DuplicateEdge(String, String),
    DuplicateVertex(String),
    UnknownVertex(String),
    /// A vertex of the graph carries no label.
    IncompleteLabeling(String),
    /// The requested size is beyond what exhaustive enumeration supports.
    Infeasible {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    /// The topology does not contain `{0}`, so the star construction does not apply.
    NoZeroSingleton,
    /// The topology has fewer than three open sets; no labeled edge can be built.
    DegenerateTopology,
    NotATopology(TopologyViolation),
    UnknownTheorem(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyOperand => f.write_str("sumset operands must be non-empty"),
            Error::ElementOutOfRange { element, bound } => {
                write!(f, "element {element} exceeds the bound {bound}")
            }
            Error::MissingZero => f.write_str("ground set must contain 0"),
            Error::GroundSetTooLarge { size, cap } => {
                write!(f, "ground set has {size} elements, cap is {cap}")
            }
            Error::NotASubset { set, ground } => write!(f, "{set} is not a subset of {ground}"),
            Error::InvalidSetLiteral(s) => write!(f, "invalid set literal: {s}"),
            Error::Loop(v) => write!(f, "loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            Error::DuplicateVertex(v) => write!(f, "vertex {v} labeled twice"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::IncompleteLabeling(v) => write!(f, "vertex {v} has no label"),
            Error::Infeasible {
                what,
                requested,
                cap,
            } => write!(f, "{what}: requested {requested}, cap is {cap}"),
            Error::NoZeroSingleton => f.write_str("topology does not contain {0}"),
            Error::DegenerateTopology => {
                f.write_str("topology has fewer than three open sets; no non-trivial realisation")
            }
            Error::NotATopology(v) => write!(f, "not a topology: {v}"),
            Error::UnknownTheorem(id) => write!(f, "unknown theorem id {id}"),
        }
    }
}

impl core::error::Error for Error {}

use crate::family::FamilyId;

/// Errors shared by element construction, enumeration, counting, and the
/// semigroup sweeps.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("pair ({x}, {y}) lies outside the chain 1..={n}")]
    OutOfRange { n: u32, x: u32, y: u32 },

    #[error("domain point {x} is mapped twice (offending pair ({x}, {y}))")]
    NotFunctional { x: u32, y: u32 },

    #[error("image point {y} is hit twice (offending pair ({x}, {y}))")]
    NotInjective { x: u32, y: u32 },

    #[error("chain sizes differ: {left} vs {right}")]
    ChainMismatch { left: u32, right: u32 },

    #[error("{what} {actual} exceeds the limit {limit}")]
    CeilingExceeded {
        what: &'static str,
        actual: u32,
        limit: u32,
    },

    #[error("operation is not supported for family {family}")]
    UnsupportedFamily { family: FamilyId },

    #[error("{what} {value} is out of range (max {max})")]
    IndexOutOfRange {
        what: &'static str,
        value: u32,
        max: u32,
    },

    #[error("closure violation: {left} * {right} = {product} escapes the carrier")]
    ClosureViolation {
        left: String,
        right: String,
        product: String,
    },

    #[error("the empty map is missing from the element set")]
    MissingZero,

    #[error("cannot parse element text: {0}")]
    Parse(String),
}

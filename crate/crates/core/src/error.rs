use alloc::boxed::Box;
use alloc::string::String;

use crate::variety::DesignPoint;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("point {0} is not on the design variety")]
    OffVariety(Box<DesignPoint>),

    #[error("point {0} is flat; a bumpy point is required")]
    NotBumpy(Box<DesignPoint>),

    #[error("a plane does not intersect itself in a lower-dimensional flat")]
    SamePlane,

    #[error("multiplier must be nonzero")]
    ZeroMultiplier,

    #[error("invalid line descriptor: {0}")]
    InvalidLine(String),

    #[error("{op} does not apply to line {line}")]
    UnsupportedLine { op: &'static str, line: String },

    #[error("point {point} is not on line {line}")]
    NotOnLine { point: Box<DesignPoint>, line: String },

    #[error("bounded coordinate is constant along line {0}")]
    ConstantBoundCoordinate(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("catalog: {0}")]
    Catalog(String),

    #[error("sieve verdict for {point} contradicts catalog status {status}: {detail}")]
    CatalogContradiction {
        point: Box<DesignPoint>,
        status: String,
        detail: String,
    },

    #[error("divisibility conditions fail for (v,k,lambda) = ({v},{k},{lambda})")]
    DivisibilityConditions { v: u64, k: u64, lambda: u64 },

    #[error("system too large: C({v},{k}) = {columns} exceeds {limit}")]
    ScaleExceeded {
        v: u64,
        k: u64,
        columns: u64,
        limit: u64,
    },

    #[error("invalid multiplicity function: {0}")]
    Multiplicity(String),

    #[error("no integer solution found")]
    NoIntegerSolution,
}

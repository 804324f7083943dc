use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("coefficient {0} is not defined in characteristic {1}")]
    Unrepresentable(String, u64),

    #[error("monomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("{what} {value} out of range (max {max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("sequence element {element} is not in the monomial ideal: term {term} is divisible by no generator")]
    NotInIdeal { element: usize, term: String },

    #[error("sequence element {element} is not homogeneous")]
    Nonhomogeneous { element: usize },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid lift assignment: {0}")]
    InvalidAssignment(String),

    #[error("lift mismatch: row {row} does not recombine to its sequence element")]
    LiftMismatch { row: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("averaging weights must be nonnegative and sum to 1")]
    WeightSum,

    #[error("weight {weight} cannot be used in characteristic {characteristic}")]
    CharacteristicObstruction { weight: String, characteristic: u64 },

    #[error("no stable periodic tail within max step {max_step}")]
    NoStableTail { max_step: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("prime {0} is not usable here: {1}")]
    BadPrime(u64, String),

    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;

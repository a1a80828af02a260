use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by (or inversion of) the zero rational function.
    DivisionByZero,
    /// A denominator vanishes identically under the requested bindings.
    SingularSpecialization { detail: String },
    /// Multiplying affine Hecke elements of different rank `l`.
    RankMismatch { left: usize, right: usize },
    /// A tensor position or generator index outside `1..=max`.
    PositionOutOfRange { position: usize, max: usize },
    /// Root vector indices outside `1..=n+1` or equal.
    IndexOutOfRange { i: usize, j: usize, n: usize },
    /// ξ appeared where only U_q(sl(n+1)) words are accepted.
    XiNotAllowed,
    /// The Drinfeldian constructions need n ≥ 2.
    RankTooSmall { n: usize, min: usize },
    /// An installed operator does not preserve the balanced-tensor relations.
    NotWellDefined { operator: String },
    /// Generic rank and rank at a random specialization disagree.
    NonGenericStratum { generic: usize, specialized: usize },
    DimensionMismatch { expected: usize, found: usize },
    /// A representation whose Cartan images are not diagonal monomials q^w.
    NotWeightRepresentation,
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::SingularSpecialization { detail } => {
                write!(f, "singular specialization: {detail}")
            }
            Error::RankMismatch { left, right } => {
                write!(f, "rank mismatch: l={left} vs l={right}")
            }
            Error::PositionOutOfRange { position, max } => {
                write!(f, "position {position} out of range 1..={max}")
            }
            Error::IndexOutOfRange { i, j, n } => {
                write!(f, "root index ({i},{j}) invalid for n={n}")
            }
            Error::XiNotAllowed => write!(f, "the affine generator xi is not allowed here"),
            Error::RankTooSmall { n, min } => write!(f, "rank n={n} too small (need n >= {min})"),
            Error::NotWellDefined { operator } => {
                write!(f, "operator {operator} does not preserve the relation subspace")
            }
            Error::NonGenericStratum { generic, specialized } => write!(
                f,
                "generic rank {generic} disagrees with specialized rank {specialized}"
            ),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotWeightRepresentation => {
                write!(f, "Cartan images are not diagonal monomials q^w")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

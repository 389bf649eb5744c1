use alloc::string::String;
use core::fmt;

/// Errors raised by the core algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DuplicateVertex(String),
    DuplicateArrow(String),
    UnknownVertex(String),
    UnknownArrow(String),
    /// Consecutive arrows of a path do not compose.
    NotComposable {
        first: String,
        second: String,
    },
    EmptyPath,
    /// Relations must have length at least two.
    RelationTooShort(usize),
    /// The two sides of a commutativity relation have different endpoints.
    CommutativityEndpoints,
    InfiniteDimensional,
    Disconnected,
    NotRadicalSquareZero,
    NoCanonicalForm,
    NoPeriodicCovering,
    NotMonomial,
    EmptyWindow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateVertex(v) => write!(f, "duplicate vertex `{v}`"),
            Error::DuplicateArrow(a) => write!(f, "duplicate arrow `{a}`"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            Error::UnknownArrow(a) => write!(f, "unknown arrow `{a}`"),
            Error::NotComposable { first, second } => {
                write!(f, "arrows `{first}` and `{second}` do not compose")
            }
            Error::EmptyPath => f.write_str("path has no arrows"),
            Error::RelationTooShort(n) => {
                write!(f, "relation of length {n}; relations need length at least 2")
            }
            Error::CommutativityEndpoints => f.write_str("commutativity relation sides have different endpoints"),
            Error::InfiniteDimensional => f.write_str("infinite dimensional"),
            Error::Disconnected => f.write_str("quiver is not connected"),
            Error::NotRadicalSquareZero => f.write_str("not radical square zero"),
            Error::NoCanonicalForm => f.write_str("no canonical form for this shape"),
            Error::NoPeriodicCovering => f.write_str("no periodic covering construction"),
            Error::NotMonomial => f.write_str("presentation has commutativity relations"),
            Error::EmptyWindow => f.write_str("window length must be at least 1"),
        }
    }
}

impl core::error::Error for Error {}

use thiserror::Error;

use crate::farey::Slope;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed slope {0:?}")]
    MalformedSlope(String),

    #[error("malformed word {0:?}: expected a nonempty string over L and R")]
    MalformedWord(String),

    #[error("slope component out of range: {0}")]
    OutOfRange(String),

    #[error("{a} and {b} are not Farey neighbours")]
    NotNeighbours { a: Slope, b: Slope },

    #[error("negative slope {0} is not supported here; use a nonnegative member of its V-orbit")]
    NegativeSlope(Slope),

    #[error("{op} is not defined for slope {slope}")]
    Unsupported { op: &'static str, slope: Slope },

    #[error("not a Farey chain: {a} and {b} are consecutive but not neighbours")]
    NotAChain { a: Slope, b: Slope },

    #[error("a Farey chain needs at least two distinct slopes")]
    ChainTooShort,

    #[error("parabolic element (trace 2) has no closed geodesic")]
    Parabolic,

    #[error("elliptic element (trace {0}) has no closed geodesic")]
    Elliptic(u8),

    #[error("identity element has no closed geodesic")]
    Identity,

    #[error("determinant of [[{a}, {b}], [{c}, {d}]] is not 1")]
    NotUnimodular {
        a: String,
        b: String,
        c: String,
        d: String,
    },

    #[error("trace {0} exceeds the trial-division factoring bound")]
    TooLargeToFactor(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Short machine-readable reason code.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::MalformedSlope(_) => "malformed-slope",
            Error::MalformedWord(_) => "malformed-word",
            Error::OutOfRange(_) => "out-of-range",
            Error::NotNeighbours { .. } => "not-neighbours",
            Error::NegativeSlope(_) => "negative-slope",
            Error::Unsupported { .. } => "unsupported",
            Error::NotAChain { .. } => "not-a-chain",
            Error::ChainTooShort => "chain-too-short",
            Error::Parabolic => "parabolic",
            Error::Elliptic(_) => "elliptic",
            Error::Identity => "identity",
            Error::NotUnimodular { .. } => "not-unimodular",
            Error::TooLargeToFactor(_) => "too-large-to-factor",
            Error::Invariant(_) => "invariant",
        }
    }

    /// True for errors caused by unparseable input rather than by a
    /// well-formed value outside an operation's domain.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::MalformedSlope(_) | Error::MalformedWord(_) | Error::OutOfRange(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

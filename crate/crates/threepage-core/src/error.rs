use alloc::string::String;
use core::fmt;

/// Crate-wide error type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A token that is not part of the word grammar.
    UnknownToken(String),
    /// A page index outside {0, 1, 2}.
    BadPageIndex(String),
    /// A vertex degree below 3.
    DegreeTooSmall(u16),
    /// A vertex degree that is not in the alphabet's degree set.
    DegreeNotInAlphabet(u16),
    /// A word failed the balance test on the given page at the given letter
    /// position (position == word length means unclosed arcs remain).
    Unbalanced { page: u8, position: usize },
    /// A general word has a point whose stub pattern matches no alphabet
    /// letter.
    NotExpressible { position: usize },
    /// An operation's input precondition failed.
    Precondition(String),
    /// The enumeration budget of a homomorphism count was exceeded.
    HomBudget { generators: usize, sym: u8 },
    /// A rewriting move did not apply at the requested position.
    NoOccurrence { rule: String, position: usize },
    /// A rule id that is not registered with the prover.
    UnknownRule(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownToken(t) => write!(f, "unknown token `{t}`"),
            Error::BadPageIndex(t) => write!(f, "page index outside 0..=2 in `{t}`"),
            Error::DegreeTooSmall(m) => write!(f, "vertex degree {m} is below 3"),
            Error::DegreeNotInAlphabet(m) => {
                write!(f, "vertex degree {m} is not in the alphabet")
            }
            Error::Unbalanced { page, position } => {
                write!(f, "word is unbalanced on page {page} at position {position}")
            }
            Error::NotExpressible { position } => {
                write!(f, "point {position} matches no alphabet letter")
            }
            Error::Precondition(msg) => write!(f, "{msg}"),
            Error::HomBudget { generators, sym } => write!(
                f,
                "homomorphism count budget exceeded: {generators} generators into S{sym}"
            ),
            Error::NoOccurrence { rule, position } => {
                write!(f, "rule {rule} does not occur at position {position}")
            }
            Error::UnknownRule(id) => write!(f, "unknown rule id `{id}`"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

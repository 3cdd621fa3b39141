use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("letter index {index} out of range for alphabet of rank {rank}")]
    LetterOutOfRange { index: usize, rank: usize },

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),

    #[error("alphabet mismatch: rank {left} vs rank {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("operation requires a nontrivial subgroup")]
    TrivialSubgroup,

    #[error("word {0} is not an element of the subgroup")]
    NotInSubgroup(String),

    #[error("radius {radius} exceeds the configured guard {max}")]
    RadiusGuard { radius: usize, max: usize },

    #[error("parameter {name} = {value} exceeds the guard {max}")]
    GuardExceeded {
        name: &'static str,
        value: usize,
        max: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence underspecified: index {index} beyond table of length {len}")]
    SequenceUnderspecified { index: usize, len: usize },
    #[error("series must have constant term 1")]
    NonUnitConstant,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("not in span at degree {degree}")]
    NotInSpan { degree: u32 },
    #[error("criterion requires integer sequence (value at index {index} is {value})")]
    NonIntegerSequence { index: u64, value: String },
    #[error("exp did not terminate within {cap} steps")]
    ExpDidNotTerminate { cap: usize },
    #[error("realization invalid: {0}")]
    RealizationInvalid(String),
    #[error("unsupported root: {0}")]
    UnsupportedRoot(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("non-Cartan exponent: {0}")]
    NonCartanExponent(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

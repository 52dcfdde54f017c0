use thiserror::Error;

use crate::letters::Classical;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LetterError {
    #[error("unknown family tag {0:?}")]
    UnknownFamily(String),
    #[error("rank {0} out of range 2..=9")]
    BadRank(u8),
    #[error("malformed letter token {0:?}")]
    BadToken(String),
    #[error("letter {letter} is not in the {kind}{rank} alphabet")]
    NotInAlphabet { letter: String, kind: Classical, rank: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error(transparent)]
    Letter(#[from] LetterError),
    #[error("second row longer than first ({r2} > {r1})")]
    RowLength { r1: usize, r2: usize },
    #[error("more than two rows in {0:?}")]
    TooManyRows(String),
    #[error("box ({row}, {col}) is not the rightmost box of its row")]
    NotRowEnd { row: usize, col: usize },
    #[error("removing box ({row}, {col}) does not leave a valid shape")]
    NotCorner { row: usize, col: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertError {
    #[error("no {kind} insertion case for letter {letter} into column [{column}]")]
    NoCase { kind: Classical, column: String, letter: String },
    #[error("no {kind} inverse insertion case for letter {letter} into column [{column}]")]
    NoInverseCase { kind: Classical, column: String, letter: String },
    #[error("inserting {letter} into column [{column}] would start a third row")]
    ThreeRow { column: String, letter: String },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error(transparent)]
    Letter(#[from] LetterError),
    #[error("0-arrow is not implemented for family {0}")]
    UnsupportedZeroArrow(String),
    #[error("operator index {i} out of range 0..={n}")]
    BadIndex { i: u8, n: u8 },
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("malformed element text {0:?}")]
    Parse(String),
    #[error("operation needs a twisted family, got {0}")]
    NotTwisted(String),
    #[error("not in the image of the doubling map: {0}")]
    NotInImage(String),
    #[error("tensor factors disagree: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RmatrixError {
    #[error("insertion failed: {source}; state: {state}")]
    Insertion { source: InsertError, state: String },
    #[error("pull-back failed: {source}; state: {state}")]
    PullBack { source: CrystalError, state: String },
    #[error("padding mismatch: {0}")]
    Padding(String),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("propagation left {missing} of {total} elements unreached")]
    Coverage { missing: usize, total: usize },
    #[error("inconsistent revisit at {at}: {detail}")]
    Inconsistent { at: String, detail: String },
    #[error("classical highest element of unexpected form: {0}")]
    Form(String),
    #[error("doubling image not preserved: {0}")]
    Theorem(String),
    #[error("oracle not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Letter(#[from] LetterError),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}

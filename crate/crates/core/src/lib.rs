//! Combinatorial R matrix and energy function for tensor products of one-row
//! affine crystals, computed by column insertion on two-row tableaux.

pub mod crystal;
pub mod error;
pub mod insertion;
pub mod letters;
pub mod oracle;
pub mod rmatrix;
pub mod tableaux;

pub use crystal::{Crystal, Element, Tensor, TensorElement};
pub use error::{CrystalError, InsertError, LetterError, OracleError, RmatrixError, TableauError};
pub use letters::{Affine, Alphabet, Classical, Family, Letter, LetterOrder};
pub use oracle::{verify, verify_with, Check, IsoTable, Report};
pub use rmatrix::{
    pipeline_input, r_apply, r_engine_c, r_inverse, Diagnostics, EngineRun, PipelineInput, RMatrix, RResult,
};
pub use tableaux::{Shape, Tableau};

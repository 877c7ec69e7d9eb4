//! Associative and associative-commutative spectra of binary operations.
//!
//! Terms over `x1, ..., xn` are enumerated exhaustively and grouped by the
//! operation they induce on a groupoid. Counting formulas for the resulting
//! sequences live in [`formulas`]; the depth-based relations that explain the
//! linear examples live in [`equivalences`].

pub mod equivalences;
pub mod error;
pub mod formulas;
pub mod groupoids;
pub mod limits;
pub mod spectrum;
pub mod terms;

pub use error::{Error, Result};
pub use limits::Limits;
pub use terms::{TermTree, Var};

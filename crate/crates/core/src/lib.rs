//! Smooth infinite words over n-letter alphabets.
//!
//! The crate provides run-length coding and the derivative on finite words,
//! cyclic-order pseudo-inverses of Δ, constant-memory generators for the
//! generalized Kolakoski words (the fixpoints of Δ), block substitutions that
//! generate those words, and an empirical analysis layer: letter frequencies,
//! recurrence and gap statistics, and closure of factor sets under reversal
//! and letter permutations.

pub mod alphabet;
pub mod analysis;
pub mod derivative;
pub mod error;
pub mod inverse;
pub mod kolakoski;
pub mod rle;
pub mod substitution;
pub mod transform;
pub mod verify;
pub mod word;

pub use alphabet::{Alphabet, Permutation, Remainder};
pub use error::{Error, Result};
pub use inverse::{ChainExpander, CyclicOrder, ExpansionBudget};
pub use kolakoski::{BaseSequenceSpec, GeneratorState, KolakoskiStream};
pub use rle::RunDecomposition;
pub use substitution::{IncidenceMatrix, Substitution, Symbol};
pub use word::{Letter, Word};

//! Exact free-group word algebra.
//!
//! Generators are numbered from 1. A [`Word`] is always freely reduced and a
//! [`CyclicWord`] is the canonical representative of a conjugacy class:
//! cyclically reduced and rotated to its lexicographically least position
//! under the letter order `x1 < X1 < x2 < X2 < ...`.

mod automorphism;
mod combination;
mod cyclic;
mod letter;
mod notation;
pub mod random;
mod word;

pub use automorphism::FreeGroupAutomorphism;
pub use combination::{format_rational, parse_rational, LinearCombination, Rational};
pub use cyclic::CyclicWord;
pub use letter::Letter;
pub use notation::{format_named, parse_letter_token, parse_word, Alphabet};
pub use word::Word;

/// Freely reduces an arbitrary letter sequence.
pub fn reduce(raw: impl IntoIterator<Item = Letter>) -> Word {
    Word::from_letters(raw)
}

/// Exponent-sum vector of `word` in `Z^rank`.
pub fn abelianize_word(word: &Word, rank: usize) -> crate::Result<Vec<i64>> {
    word.abelianize(rank)
}

/// Canonical conjugacy class of `word`.
pub fn conjugacy_class(word: &Word) -> CyclicWord {
    CyclicWord::from_word(word)
}

/// Returns `(root, k)` with `class = root^k` and `root` not a proper power.
pub fn primitive_root(class: &CyclicWord) -> crate::Result<(CyclicWord, usize)> {
    class.primitive_root()
}

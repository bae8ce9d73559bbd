use std::fmt;

use super::{Alphabet, Letter, Word};
use crate::{Error, Result};

/// Canonical representative of a conjugacy class in a free group.
///
/// Cyclically reduced and rotated to the least rotation in the letter order.
/// The empty cyclic word is the class of the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    pub fn trivial() -> Self {
        CyclicWord(Vec::new())
    }

    pub fn from_word(word: &Word) -> Self {
        let letters = word.letters();
        let (mut lo, mut hi) = (0, letters.len());
        while hi - lo >= 2 && letters[lo].is_inverse_of(letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        let core = &letters[lo..hi];
        let start = least_rotation(core);
        CyclicWord(core[start..].iter().chain(&core[..start]).copied().collect())
    }

    pub fn from_letters(raw: impl IntoIterator<Item = Letter>) -> Self {
        Self::from_word(&Word::from_letters(raw))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The canonical representative as a based word.
    pub fn to_word(&self) -> Word {
        Word::from_letters(self.0.iter().copied())
    }

    /// The representative read from `position`; equal as a class.
    pub fn rotation(&self, position: usize) -> Word {
        self.to_word().rotated(position)
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        Self::from_word(&self.to_word().inverse())
    }

    #[must_use]
    pub fn pow(&self, exponent: i64) -> Self {
        Self::from_word(&self.to_word().pow(exponent))
    }

    /// `(root, k)` with `self = root^k` and `root` not a proper power.
    pub fn primitive_root(&self) -> Result<(CyclicWord, usize)> {
        let n = self.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        for period in (1..=n).filter(|&d| n.is_multiple_of(d)) {
            if (0..n).all(|i| self.0[i] == self.0[(i + period) % n]) {
                // A prefix of a least rotation is the least rotation of the root.
                return Ok((CyclicWord(self.0[..period].to_vec()), n / period));
            }
        }
        unreachable!("the full length is always a period")
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        alphabet.format_letters(&self.0)
    }

    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.generator()).max().unwrap_or(0)
    }

    /// Total order used for orbit representatives: shorter first, then
    /// lexicographic.
    pub fn shortlex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

/// Start of the lexicographically least rotation (two-pointer scan, linear time).
fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

impl From<&Word> for CyclicWord {
    fn from(word: &Word) -> Self {
        CyclicWord::from_word(word)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Alphabet::Genus))
    }
}

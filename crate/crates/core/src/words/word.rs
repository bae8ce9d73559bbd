use std::fmt;
use std::ops::Mul;

use super::{Alphabet, Letter};
use crate::{Error, Result};

/// A freely reduced word in a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces `raw` with a single left-to-right stack pass.
    pub fn from_letters(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for letter in raw {
            match out.last() {
                Some(&last) if last.is_inverse_of(letter) => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        Word(out)
    }

    pub fn generator(index: usize) -> Self {
        Word(vec![Letter::pos(index)])
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

    /// Largest generator index used, 0 for the identity.
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.generator()).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        let found = self.max_generator();
        if found > rank {
            Err(Error::RankMismatch {
                expected: rank,
                found,
            })
        } else {
            Ok(())
        }
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    #[must_use]
    pub fn pow(&self, exponent: i64) -> Self {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let n = exponent.unsigned_abs() as usize;
        Word::from_letters(base.0.iter().copied().cycle().take(base.len() * n))
    }

    /// `g * self * g^-1`.
    #[must_use]
    pub fn conjugated_by(&self, g: &Word) -> Self {
        Word::from_letters(
            g.0.iter()
                .copied()
                .chain(self.0.iter().copied())
                .chain(g.inverse().0),
        )
    }

    /// Rotation starting at `position`. Only meaningful as a group element when
    /// the word is cyclically reduced, in which case the result is reduced.
    #[must_use]
    pub fn rotated(&self, position: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let p = position % self.len();
        Word::from_letters(self.0[p..].iter().chain(&self.0[..p]).copied())
    }

    #[must_use]
    pub fn shifted(&self, offset: usize) -> Self {
        Word(self.0.iter().map(|l| l.shifted(offset)).collect())
    }

    /// Replaces every generator `i` by `images[i - 1]` and reduces.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        self.check_rank(images.len())?;
        let mut out = Vec::new();
        for letter in &self.0 {
            let image = &images[letter.generator() - 1];
            if letter.is_inverse() {
                out.extend(image.0.iter().rev().map(|l| l.inverse()));
            } else {
                out.extend_from_slice(&image.0);
            }
        }
        Ok(Word::from_letters(out))
    }

    /// Exponent-sum vector of length `rank`.
    pub fn abelianize(&self, rank: usize) -> Result<Vec<i64>> {
        self.check_rank(rank)?;
        let mut v = vec![0i64; rank];
        for l in &self.0 {
            v[l.generator() - 1] += l.sign();
        }
        Ok(v)
    }

    /// Sum of the exponents of generator `index`.
    pub fn exponent_sum(&self, index: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator() == index)
            .map(|l| l.sign())
            .sum()
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        alphabet.format_letters(&self.0)
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(&rhs.0).copied())
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::from_letters(iter)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Alphabet::Genus))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_word, random};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn reduce_cancels_pairs() {
        let a = Letter::pos(1);
        let b = Letter::pos(2);
        assert!(Word::from_letters([a, a.inverse()]).is_empty());
        assert_eq!(Word::from_letters([a, b, b.inverse(), a]), w("a1.a1"));
    }

    #[test]
    fn reduce_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let raw = random::raw_letters(&mut rng, 4, 20);
            let once = Word::from_letters(raw);
            let twice = Word::from_letters(once.letters().iter().copied());
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn multiply_examples() {
        assert!((&w("a1") * &w("A1")).is_empty());
        assert_eq!(&w("a1.b1") * &w("B1"), w("a1"));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("a1.b1").inverse(), w("B1.A1"));
        assert!(Word::identity().inverse().is_empty());
    }

    #[test]
    fn group_axioms_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let u = random::word(&mut rng, 4, 10);
            let v = random::word(&mut rng, 4, 10);
            let x = random::word(&mut rng, 4, 10);
            assert_eq!(&(&u * &v) * &x, &u * &(&v * &x));
            assert!((&u * &u.inverse()).is_empty());
            assert!((&u.inverse() * &u).is_empty());
            assert_eq!(&u * &Word::identity(), u);
        }
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(w("a1.b1.A1.B1").abelianize(2).unwrap(), vec![0, 0]);
        assert_eq!(w("a1.a1.b1").abelianize(2).unwrap(), vec![2, 1]);
        assert!(w("a2").abelianize(2).is_err());
    }

    #[test]
    fn abelianize_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let u = random::word(&mut rng, 3, 9);
            let v = random::word(&mut rng, 3, 9);
            let sum: Vec<i64> = u
                .abelianize(3)
                .unwrap()
                .iter()
                .zip(v.abelianize(3).unwrap())
                .map(|(a, b)| a + b)
                .collect();
            assert_eq!((&u * &v).abelianize(3).unwrap(), sum);
        }
    }

    #[test]
    fn pow_and_conjugation() {
        assert_eq!(w("a1.b1").pow(2), w("a1.b1.a1.b1"));
        assert_eq!(w("a1.b1").pow(-1), w("B1.A1"));
        assert!(w("a1").pow(0).is_empty());
        assert_eq!(w("a1").conjugated_by(&w("b1")), w("b1.a1.B1"));
    }
}

//! Seeded random words for randomized suites.

use rand::Rng;

use super::{CyclicWord, Letter, LinearCombination, Rational, Word};

pub fn letter<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> Letter {
    Letter::new(rng.gen_range(1..=rank), rng.gen_bool(0.5))
}

/// Unreduced letter sequence of length at most `max_len`.
pub fn raw_letters<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> Vec<Letter> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| letter(rng, rank)).collect()
}

/// Reduced word with length uniform in `0..=max_len`.
pub fn word<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    reduced_of_len(rng, rank, n, false)
}

/// Cyclically reduced word with length uniform in `0..=max_len`.
pub fn cyclically_reduced<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    reduced_of_len(rng, rank, n, true)
}

/// Nontrivial class of length in `1..=max_len`.
pub fn class<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> CyclicWord {
    let n = rng.gen_range(1..=max_len.max(1));
    CyclicWord::from_word(&reduced_of_len(rng, rank, n, true))
}

/// Combination of up to `max_terms` classes with small integer coefficients.
pub fn combination<R: Rng + ?Sized>(
    rng: &mut R,
    rank: usize,
    max_terms: usize,
    max_len: usize,
) -> LinearCombination {
    let terms = rng.gen_range(0..=max_terms);
    let mut out = LinearCombination::zero();
    for _ in 0..terms {
        let c = CyclicWord::from_word(&word(rng, rank, max_len));
        let numer: i64 = rng.gen_range(-3..=3);
        let denom: i64 = rng.gen_range(1..=2);
        out.add_term(c, Rational::new(numer.into(), denom.into()));
    }
    out
}

fn reduced_of_len<R: Rng + ?Sized>(rng: &mut R, rank: usize, n: usize, cyclic: bool) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(n);
    while letters.len() < n {
        let l = letter(rng, rank);
        if letters.last().is_some_and(|&p| p.is_inverse_of(l)) {
            continue;
        }
        if cyclic && letters.len() + 1 == n && n > 1 && l.is_inverse_of(letters[0]) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(letters)
}

//! Infinite cyclic cover of a fibered knot complement.
//!
//! Conventions, fixed once:
//! - the meridional presentation has relators `m⁻¹ φ(x_i) m x_i⁻¹`;
//! - Schreier rewriting with transversal `{mⁿ}` assigns a letter the running
//!   meridian exponent to its left as its level, so `m⁻¹ x m` rewrites to
//!   `x^{(-1)}` and `x^{(n)}` projects back to `mⁿ x m⁻ⁿ`;
//! - the relators become `φ(x_i)^{(k)} (x_i^{(k+1)})⁻¹`, so `t` raises levels
//!   and identifies `x^{(n)}` with `φⁿ(x)` in the fiber group.

mod leveled;
mod window;

use serde_json::{json, Value};

use crate::knots::{FiberedKnotModel, GroupPresentation};
use crate::words::{Alphabet, CyclicWord, Letter, LinearCombination, Word};
use crate::{Error, Result};

pub use leveled::{parse_leveled_word, LeveledGenerator, LeveledLetter, LeveledWord};
pub use window::{pushforward, window, WindowMap};

/// `⟨m, x_1..x_2g | m⁻¹ φ(x_i) m x_i⁻¹⟩`; generator 1 is the meridian `m`,
/// generator `i + 1` is fiber generator `x_i`.
pub fn meridional_presentation(model: &FiberedKnotModel) -> GroupPresentation {
    let rank = model.rank();
    let m = Word::generator(1);
    let relators = (1..=rank)
        .map(|i| {
            let image = model.monodromy().images()[i - 1].shifted(1);
            let x = Word::generator(i + 1);
            &(&(&m.inverse() * &image) * &m) * &x.inverse()
        })
        .collect();
    let mut names = vec!["m".to_string()];
    names.extend((1..=rank).map(|g| Alphabet::Genus.letter_name(Letter::pos(g))));
    GroupPresentation::new(names, relators).expect("relators use rank + 1 generators")
}

/// Relator family `y_i^{(k)} (z_i^{(k+1)})⁻¹`, `k ∈ Z`, with `y_i`, `z_i`
/// words in the fiber generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeveledPresentation {
    base_rank: usize,
    schema: Vec<(Word, Word)>,
}

impl LeveledPresentation {
    pub fn base_rank(&self) -> usize {
        self.base_rank
    }

    pub fn schema(&self) -> &[(Word, Word)] {
        &self.schema
    }

    /// The relators at level `k`.
    pub fn instantiate(&self, k: i64) -> Vec<LeveledWord> {
        self.schema
            .iter()
            .map(|(y, z)| level_word(y, k).concat(&level_word(z, k + 1).inverse()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let relators: Vec<Value> = self
            .schema
            .iter()
            .map(|(y, z)| {
                json!({
                    "y": y.display(Alphabet::Generic),
                    "z": z.display(Alphabet::Generic),
                    "relator": "y(k).z(k+1)^-1",
                    "at_level_0": level_word(y, 0).concat(&level_word(z, 1).inverse()).to_string(),
                })
            })
            .collect();
        json!({
            "base_rank": self.base_rank,
            "transversal": "m^n",
            "level_convention": "m^-1.x.m -> x(-1)",
            "relators": relators,
        })
    }
}

/// Every letter of `w` at level `k`.
pub fn level_word(w: &Word, k: i64) -> LeveledWord {
    LeveledWord::from_letters(
        w.letters()
            .iter()
            .map(|l| LeveledLetter::new(l.generator(), k, l.is_inverse())),
    )
}

/// Reads the relators of a presentation of shape `m⁻¹ y_i m z_i⁻¹` (meridian
/// first, `y_i` and `z_i` free of `m`) as a leveled presentation.
pub fn reidemeister_schreier(p: &GroupPresentation) -> Result<LeveledPresentation> {
    if p.rank() < 2 {
        return Err(Error::ShapeMismatch("need a meridian and fiber generators".into()));
    }
    let meridian = Letter::pos(1);
    let down = |letters: &[Letter]| -> Result<Word> {
        letters
            .iter()
            .map(|&l| {
                if l.generator() == 1 {
                    Err(Error::ShapeMismatch("meridian inside y or z".into()))
                } else {
                    Ok(Letter::new(l.generator() - 1, l.is_inverse()))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from_letters)
    };
    let mut schema = Vec::with_capacity(p.relators().len());
    for r in p.relators() {
        let letters = r.letters();
        let text = p.format_word(r);
        if letters.first() != Some(&meridian.inverse()) {
            return Err(Error::ShapeMismatch(format!("`{text}` does not start with m^-1")));
        }
        let close = letters
            .iter()
            .position(|&l| l == meridian)
            .ok_or_else(|| Error::ShapeMismatch(format!("`{text}` has no m")))?;
        let y = down(&letters[1..close])?;
        let z = down(&letters[close + 1..])?.inverse();
        schema.push((y, z));
    }
    Ok(LeveledPresentation {
        base_rank: p.rank() - 1,
        schema,
    })
}

/// Schreier rewriting of a word over `{m, x_i}` with zero meridian
/// exponent.
pub fn rewrite_to_cover(w: &Word) -> Result<LeveledWord> {
    let total = w.exponent_sum(1);
    if total != 0 {
        return Err(Error::NotInCover(total));
    }
    let mut level = 0i64;
    let mut out = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if l.generator() == 1 {
            level += l.sign();
        } else {
            out.push(LeveledLetter::new(l.generator() - 1, level, l.is_inverse()));
        }
    }
    Ok(LeveledWord::from_letters(out))
}

/// Inverse of [`rewrite_to_cover`]: `x^{(n)} ↦ mⁿ x m⁻ⁿ`.
pub fn project_back(w: &LeveledWord) -> Word {
    let m = Word::generator(1);
    let mut out = Word::identity();
    for l in w.letters() {
        let g = l.generator;
        let x = Word::from_letters([Letter::new(g.base + 1, l.inverse)]);
        out = &out * &x.conjugated_by(&m.pow(g.level));
    }
    out
}

/// Identifies the cover group with the fiber group: `x^{(n)} ↦ φⁿ(x)`.
pub fn to_fiber(w: &LeveledWord, model: &FiberedKnotModel) -> Result<Word> {
    let mut out = Word::identity();
    for l in w.letters() {
        let g = l.generator;
        let image = model
            .monodromy()
            .apply_word_power(&Word::generator(g.base), g.level)?;
        out = &out * &if l.inverse { image.inverse() } else { image };
    }
    Ok(out)
}

/// The deck transformation `tⁿ`: shifts levels in the cover alphabet and
/// applies `φⁿ` in the fiber alphabet.
pub trait TShift: Sized {
    fn t_shift(&self, n: i64, model: &FiberedKnotModel) -> Result<Self>;
}

impl TShift for LeveledWord {
    fn t_shift(&self, n: i64, _model: &FiberedKnotModel) -> Result<Self> {
        Ok(self.shifted(n))
    }
}

impl TShift for Word {
    fn t_shift(&self, n: i64, model: &FiberedKnotModel) -> Result<Self> {
        model.monodromy().apply_word_power(self, n)
    }
}

impl TShift for CyclicWord {
    fn t_shift(&self, n: i64, model: &FiberedKnotModel) -> Result<Self> {
        model.monodromy().apply_class_power(self, n)
    }
}

impl TShift for LinearCombination {
    fn t_shift(&self, n: i64, model: &FiberedKnotModel) -> Result<Self> {
        let phi = model.monodromy().pow(n);
        phi.apply_combination(self)
    }
}

/// Random word over `{m, x_1..x_rank}` with meridian exponent zero: a
/// random word followed by the meridian power that balances it.
pub fn random_cover_word<R: rand::Rng + ?Sized>(rng: &mut R, base_rank: usize, max_len: usize) -> Word {
    let w = crate::words::random::word(rng, base_rank + 1, max_len);
    let balance = Word::generator(1).pow(-w.exponent_sum(1));
    &w * &balance
}

#[cfg(test)]
mod tests;

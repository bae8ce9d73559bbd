use std::fmt;

use crate::{Error, Result};

/// Generator `x_base` lifted to level `level` of the infinite cyclic cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeveledGenerator {
    pub base: usize,
    pub level: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeveledLetter {
    pub generator: LeveledGenerator,
    pub inverse: bool,
}

impl LeveledLetter {
    pub fn new(base: usize, level: i64, inverse: bool) -> Self {
        assert!(base >= 1, "generator indices start at 1");
        LeveledLetter {
            generator: LeveledGenerator { base, level },
            inverse,
        }
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        LeveledLetter {
            inverse: !self.inverse,
            ..self
        }
    }

    #[must_use]
    pub fn shifted(self, n: i64) -> Self {
        LeveledLetter::new(self.generator.base, self.generator.level + n, self.inverse)
    }
}

impl fmt::Display for LeveledLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let stem = if self.inverse { "X" } else { "x" };
        write!(f, "{stem}{}({})", self.generator.base, self.generator.level)
    }
}

/// Freely reduced word in the leveled generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeveledWord(Vec<LeveledLetter>);

impl LeveledWord {
    pub fn identity() -> Self {
        LeveledWord(Vec::new())
    }

    pub fn from_letters(raw: impl IntoIterator<Item = LeveledLetter>) -> Self {
        let mut out: Vec<LeveledLetter> = Vec::new();
        for l in raw {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        LeveledWord(out)
    }

    pub fn letters(&self) -> &[LeveledLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        LeveledWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Adds `n` to every level: the deck transformation `tⁿ`.
    #[must_use]
    pub fn shifted(&self, n: i64) -> Self {
        LeveledWord(self.0.iter().map(|l| l.shifted(n)).collect())
    }

    #[must_use]
    pub fn concat(&self, other: &Self) -> Self {
        Self::from_letters(self.0.iter().chain(&other.0).copied())
    }

    /// Levels spanned, if nonempty.
    pub fn level_range(&self) -> Option<(i64, i64)> {
        let levels = self.0.iter().map(|l| l.generator.level);
        Some((levels.clone().min()?, levels.max()?))
    }
}

impl fmt::Display for LeveledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let tokens: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", tokens.join("."))
    }
}

/// Parses `x1(0).X2(-1)`; `x2(-1)^-1` is accepted for inverses and `1` is
/// the identity.
pub fn parse_leveled_word(text: &str) -> Result<LeveledWord> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    if trimmed == "1" {
        return Ok(LeveledWord::identity());
    }
    let mut letters = Vec::new();
    let mut position = offset;
    for token in trimmed.split('.') {
        letters.push(parse_token(token, position)?);
        position += token.len() + 1;
    }
    Ok(LeveledWord::from_letters(letters))
}

fn parse_token(token: &str, position: usize) -> Result<LeveledLetter> {
    let bad = || Error::parse(position, format!("malformed leveled token `{token}`"));
    let (body, explicit) = match token.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (token, false),
    };
    let inverse = match body.chars().next() {
        Some('x') => explicit,
        Some('X') if !explicit => true,
        _ => return Err(bad()),
    };
    let open = body.find('(').ok_or_else(bad)?;
    let inner = body[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let base: usize = body[1..open].parse().map_err(|_| bad())?;
    let level: i64 = inner.parse().map_err(|_| bad())?;
    if base == 0 {
        return Err(Error::parse(position, "generator indices start at 1"));
    }
    Ok(LeveledLetter::new(base, level, inverse))
}

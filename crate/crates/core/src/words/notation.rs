//! Text form of words: `.`-separated tokens, `1` for the identity.
//!
//! A token is a name (`letters digits`) optionally followed by `^-1`; an
//! uppercase name also denotes the inverse. `a<i>` and `b<i>` are the
//! symplectic generators `2i-1` and `2i` of a genus alphabet, `x<n>` is
//! generator `n`.

use super::{Letter, Word};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// `a1, b1, a2, b2, ...`
    Genus,
    /// `x1, x2, ...`
    Generic,
}

impl Alphabet {
    pub fn letter_name(self, letter: Letter) -> String {
        let (stem, index) = match self {
            Alphabet::Genus => {
                let g = letter.generator();
                (if g % 2 == 1 { "a" } else { "b" }, g.div_ceil(2))
            }
            Alphabet::Generic => ("x", letter.generator()),
        };
        if letter.is_inverse() {
            format!("{}{index}", stem.to_uppercase())
        } else {
            format!("{stem}{index}")
        }
    }

    pub fn format_letters(self, letters: &[Letter]) -> String {
        if letters.is_empty() {
            return "1".to_string();
        }
        letters
            .iter()
            .map(|&l| self.letter_name(l))
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Formats a word over named generators (`names[i - 1]` for generator `i`).
pub fn format_named(word: &Word, names: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.letters()
        .iter()
        .map(|l| {
            let name = &names[l.generator() - 1];
            match (l.is_inverse(), name.chars().all(|c| !c.is_uppercase())) {
                (false, _) => name.clone(),
                (true, true) => name.to_uppercase(),
                (true, false) => format!("{name}^-1"),
            }
        })
        .collect::<Vec<_>>()
        .join(".")
}

/// Parses a single token at byte offset `position`.
pub fn parse_letter_token(token: &str, position: usize) -> Result<Letter> {
    let (name, explicit_inverse) = match token.strip_suffix("^-1") {
        Some(stem) => (stem, true),
        None => (token, false),
    };
    let split = name
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| Error::parse(position, format!("token `{token}` has no index")))?;
    let (stem, digits) = name.split_at(split);
    if stem.is_empty() || !stem.chars().all(|c| c.is_ascii_alphabetic()) {
        return Err(Error::parse(position, format!("malformed token `{token}`")));
    }
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(position, format!("malformed token `{token}`")));
    }
    let index: usize = digits
        .parse()
        .map_err(|_| Error::parse(position, format!("index out of range in `{token}`")))?;
    if index == 0 {
        return Err(Error::parse(position, format!("indices start at 1 in `{token}`")));
    }
    let uppercase = stem.chars().all(|c| c.is_ascii_uppercase());
    if !uppercase && !stem.chars().all(|c| c.is_ascii_lowercase()) {
        return Err(Error::parse(position, format!("mixed case in `{token}`")));
    }
    if uppercase && explicit_inverse {
        return Err(Error::parse(position, format!("double inverse in `{token}`")));
    }
    let generator = match stem.to_ascii_lowercase().as_str() {
        "a" => 2 * index - 1,
        "b" => 2 * index,
        "x" => index,
        other => {
            return Err(Error::parse(
                position,
                format!("unknown generator name `{other}`"),
            ))
        }
    };
    Ok(Letter::new(generator, uppercase || explicit_inverse))
}

/// Parses the word grammar; the result is freely reduced.
pub fn parse_word(text: &str) -> Result<Word> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    if trimmed == "1" {
        return Ok(Word::identity());
    }
    if trimmed.is_empty() {
        return Err(Error::parse(offset, "empty word literal; use `1`"));
    }
    let mut letters = Vec::new();
    let mut position = offset;
    for token in trimmed.split('.') {
        letters.push(parse_letter_token(token, position)?);
        position += token.len() + 1;
    }
    Ok(Word::from_letters(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_and_generic_names() {
        let w = Word::from_letters([Letter::pos(1), Letter::pos(2), Letter::neg(3), Letter::neg(4)]);
        assert_eq!(w.display(Alphabet::Genus), "a1.b1.A2.B2");
        assert_eq!(w.display(Alphabet::Generic), "x1.x2.X3.X4");
        assert_eq!(Word::identity().display(Alphabet::Genus), "1");
    }

    #[test]
    fn parse_variants() {
        let expected = Word::from_letters([Letter::pos(3), Letter::neg(2)]);
        assert_eq!(parse_word("a2.B1").unwrap(), expected);
        assert_eq!(parse_word("a2.b1^-1").unwrap(), expected);
        assert_eq!(parse_word("x3.X2").unwrap(), expected);
        assert_eq!(parse_word(" 1 ").unwrap(), Word::identity());
        assert_eq!(parse_word("x12").unwrap(), Word::generator(12));
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            parse_word("a1..b1").unwrap_err(),
            Error::parse(3, "token `` has no index")
        );
        match parse_word("a1.q2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_word("a0").is_err());
        assert!(parse_word("A1^-1").is_err());
        assert!(parse_word("").is_err());
        assert!(parse_word("aB1").is_err());
    }

    #[test]
    fn named_format_uses_uppercase_inverse() {
        let names = vec!["m".to_string(), "a1".to_string()];
        let w = Word::from_letters([Letter::neg(1), Letter::pos(2), Letter::pos(1)]);
        assert_eq!(format_named(&w, &names), "M.a1.m");
    }
}

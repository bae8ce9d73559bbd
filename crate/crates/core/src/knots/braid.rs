use std::fmt;

use super::GroupPresentation;
use crate::words::Word;
use crate::{Error, Result};

/// Braid on `strands` strands as a sequence of Artin generators `σ_i^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for &(i, sign) in &letters {
            if i == 0 || i >= strands {
                return Err(Error::Invalid(format!(
                    "generator s{i} out of range for {strands} strands"
                )));
            }
            if sign != 1 && sign != -1 {
                return Err(Error::Invalid(format!("sign {sign} is not ±1")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    /// Image of strand position `p` (0-based) under the underlying permutation.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &(i, _) in &self.letters {
            perm.swap(i - 1, i);
        }
        perm
    }

    /// Artin action of the braid on the free group of rank `strands`.
    pub fn act(&self, w: &Word) -> Word {
        let mut images: Vec<Word> = (1..=self.strands).map(Word::generator).collect();
        for &(i, sign) in &self.letters {
            let (xi, xj) = (images[i - 1].clone(), images[i].clone());
            if sign > 0 {
                images[i - 1] = &(&xi * &xj) * &xi.inverse();
                images[i] = xi;
            } else {
                images[i - 1] = xj.clone();
                images[i] = &(&xj.inverse() * &xi) * &xj;
            }
        }
        w.substitute(&images).expect("braid acts on its own strands")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let tokens: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, s)| if s > 0 { format!("s{i}") } else { format!("s{i}'") })
            .collect();
        write!(f, "{}", tokens.join(" "))
    }
}

/// Parses whitespace-separated `s<i>` tokens, each optionally followed by
/// `'` or `^-1`. Without `strands`, the strand count is the largest index
/// plus one (at least one strand for the empty braid).
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut letters = Vec::new();
    let base = text.as_ptr() as usize;
    for token in text.split_whitespace() {
        let position = token.as_ptr() as usize - base;
        let (stem, sign) = if let Some(s) = token.strip_suffix('\'') {
            (s, -1)
        } else if let Some(s) = token.strip_suffix("^-1") {
            (s, -1)
        } else {
            (token, 1)
        };
        let digits = stem
            .strip_prefix('s')
            .filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()))
            .ok_or_else(|| Error::parse(position, format!("malformed braid token `{token}`")))?;
        let index: usize = digits
            .parse()
            .map_err(|_| Error::parse(position, format!("index too large in `{token}`")))?;
        if index == 0 {
            return Err(Error::parse(position, "braid generators start at s1"));
        }
        if let Some(n) = strands {
            if index >= n {
                return Err(Error::parse(
                    position,
                    format!("s{index} out of range for {n} strands"),
                ));
            }
        }
        letters.push((index, sign));
    }
    let inferred = letters.iter().map(|&(i, _)| i + 1).max().unwrap_or(1);
    BraidWord::new(strands.unwrap_or(inferred), letters)
}

/// Number of components of the braid closure.
pub fn closure_components(b: &BraidWord) -> usize {
    let perm = b.permutation();
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
        }
    }
    cycles
}

/// Knot group of the closure: `⟨x_1..x_n | β(x_i) = x_i, i < n⟩`, then
/// generators identified by a relator `x_i = x_j` are eliminated.
pub fn wirtinger_from_braid(b: &BraidWord) -> Result<GroupPresentation> {
    let components = closure_components(b);
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let n = b.strands();
    let relators = (1..n)
        .map(|i| {
            let x = Word::generator(i);
            &b.act(&x) * &x.inverse()
        })
        .collect();
    Ok(GroupPresentation::with_generic_names(n, relators)?.tietze_cleanup())
}

/// Meridian exponent of every generator of a Wirtinger presentation.
pub fn wirtinger_exponents(p: &GroupPresentation) -> Vec<i64> {
    vec![1; p.rank()]
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{Alphabet, CyclicWord};
use crate::{Error, Result};

pub type Rational = BigRational;

/// Element of `Q[Ĝ]`: a finite rational combination of conjugacy classes.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearCombination {
    terms: BTreeMap<CyclicWord, Rational>,
}

impl LinearCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn singleton(class: CyclicWord) -> Self {
        Self::term(class, Rational::one())
    }

    pub fn term(class: CyclicWord, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(class, coeff);
        out
    }

    pub fn from_integer_terms(terms: impl IntoIterator<Item = (CyclicWord, i64)>) -> Self {
        let mut out = Self::zero();
        for (class, c) in terms {
            out.add_term(class, Rational::from_integer(c.into()));
        }
        out
    }

    pub fn add_term(&mut self, class: CyclicWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(class) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, class: &CyclicWord) -> Rational {
        self.terms.get(class).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CyclicWord, &Rational)> {
        self.terms.iter()
    }

    #[must_use]
    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        LinearCombination {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
        }
    }

    /// Linear extension of a map on classes; coefficients of classes that
    /// collide are merged.
    pub fn map_classes<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&CyclicWord) -> CyclicWord,
    {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    pub fn try_map_classes<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&CyclicWord) -> Result<CyclicWord>,
    {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k)?, v.clone());
        }
        Ok(out)
    }

    pub fn max_generator(&self) -> usize {
        self.terms.keys().map(|k| k.max_generator()).max().unwrap_or(0)
    }

    /// Terms sorted by class string in the given alphabet.
    pub fn sorted_terms(&self, alphabet: Alphabet) -> Vec<(String, Rational)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(k, v)| (k.display(alphabet), v.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// `{"terms": [{"coeff": "p/q", "class": "a1.b1"}, ...]}`, sorted by class.
    pub fn to_json(&self, alphabet: Alphabet) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms(alphabet)
            .into_iter()
            .map(|(class, coeff)| json!({"coeff": format_rational(&coeff), "class": class}))
            .collect();
        json!({ "terms": terms })
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (class, coeff)) in self.sorted_terms(alphabet).into_iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !magnitude.is_one() {
                out.push_str(&format_rational(&magnitude));
                out.push(' ');
            }
            out.push('<');
            out.push_str(&class);
            out.push('>');
        }
        out
    }
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::parse(0, format!("malformed rational `{text}`"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl Add for &LinearCombination {
    type Output = LinearCombination;

    fn add(self, rhs: &LinearCombination) -> LinearCombination {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &LinearCombination {
    type Output = LinearCombination;

    fn sub(self, rhs: &LinearCombination) -> LinearCombination {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }
}

impl Neg for &LinearCombination {
    type Output = LinearCombination;

    fn neg(self) -> LinearCombination {
        LinearCombination {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }
}

impl Add for LinearCombination {
    type Output = LinearCombination;

    fn add(self, rhs: LinearCombination) -> LinearCombination {
        &self + &rhs
    }
}

impl Sub for LinearCombination {
    type Output = LinearCombination;

    fn sub(self, rhs: LinearCombination) -> LinearCombination {
        &self - &rhs
    }
}

impl Neg for LinearCombination {
    type Output = LinearCombination;

    fn neg(self) -> LinearCombination {
        -&self
    }
}

impl fmt::Display for LinearCombination {
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

    fn class(s: &str) -> CyclicWord {
        CyclicWord::from_word(&parse_word(s).unwrap())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut c = LinearCombination::zero();
        c.add_term(class("a1"), q(1, 2));
        c.add_term(class("b1.a1.B1"), q(-1, 2));
        assert!(c.is_zero());
        c.add_term(class("a1"), q(0, 1));
        assert!(c.is_zero());
    }

    #[test]
    fn exact_cancellation_on_random_combinations() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..200 {
            let x = random::combination(&mut rng, 4, 6, 6);
            let y = random::combination(&mut rng, 4, 6, 6);
            assert_eq!(&(&x + &y) - &y, x);
            assert_eq!(&x + &(-&x), LinearCombination::zero());
            assert_eq!(x.scaled(&q(2, 3)).scaled(&q(3, 2)), x);
        }
    }

    #[test]
    fn json_is_sorted_by_class_string() {
        let mut c = LinearCombination::zero();
        c.add_term(class("b1"), q(-2, 3));
        c.add_term(class("a1.b1"), q(1, 1));
        assert_eq!(
            c.to_json(Alphabet::Genus).to_string(),
            r#"{"terms":[{"coeff":"1","class":"a1.b1"},{"coeff":"-2/3","class":"b1"}]}"#
        );
        assert_eq!(c.display(Alphabet::Genus), "<a1.b1> - 2/3 <b1>");
    }

    #[test]
    fn rational_text_round_trip() {
        for r in [q(3, 4), q(-7, 1), q(0, 1), q(-1, 3)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}

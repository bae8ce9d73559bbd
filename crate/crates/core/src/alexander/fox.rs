use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LaurentPolynomial;
use crate::words::Word;

/// Element of the integral group ring `Z[F]` of a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut out = Self::zero();
        out.add_term(w, BigInt::one());
        out
    }

    pub fn add_term(&mut self, w: Word, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    #[must_use]
    pub fn neg(&self) -> Self {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// `u · self`.
    #[must_use]
    pub fn left_multiply(&self, u: &Word) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(u * w, c.clone());
        }
        out
    }

    /// Image under the abelianization sending generator `i` to
    /// `t^exponents[i - 1]`.
    pub fn abelianize(&self, exponents: &[i64]) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (w, c) in &self.terms {
            let e: i64 = w
                .letters()
                .iter()
                .map(|l| l.sign() * exponents[l.generator() - 1])
                .sum();
            out = &out + &LaurentPolynomial::monomial(c.clone(), e);
        }
        out
    }
}

/// Fox derivative `∂w/∂x_generator`.
///
/// A letter `x` at position `k` contributes `+w[..k]`, a letter `x⁻¹`
/// contributes `-w[..=k]`.
pub fn fox_derivative(w: &Word, generator: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let letters = w.letters();
    for (k, l) in letters.iter().enumerate() {
        if l.generator() != generator {
            continue;
        }
        if l.is_inverse() {
            out.add_term(Word::from_letters(letters[..=k].iter().copied()), -BigInt::one());
        } else {
            out.add_term(Word::from_letters(letters[..k].iter().copied()), BigInt::one());
        }
    }
    out
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

    fn element(terms: &[(&str, i64)]) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (s, c) in terms {
            out.add_term(w(s), BigInt::from(*c));
        }
        out
    }

    #[test]
    fn defining_identities() {
        assert_eq!(fox_derivative(&w("x1"), 1), GroupRingElement::one());
        assert!(fox_derivative(&w("x2"), 1).is_zero());
        assert_eq!(fox_derivative(&w("X1"), 1), element(&[("X1", -1)]));
        assert_eq!(fox_derivative(&w("x1.x2"), 1), GroupRingElement::one());
        assert_eq!(fox_derivative(&w("x1.x2.X1"), 1), element(&[("1", 1), ("x1.x2.X1", -1)]));
    }

    #[test]
    fn product_rule_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        for _ in 0..200 {
            let u = random::word(&mut rng, 3, 8);
            let v = random::word(&mut rng, 3, 8);
            for x in 1..=3 {
                let lhs = fox_derivative(&(&u * &v), x);
                let rhs = fox_derivative(&u, x).add(&fox_derivative(&v, x).left_multiply(&u));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn fundamental_formula() {
        // Σ_j (∂w/∂x_j)(x_j - 1) = w - 1
        let mut rng = ChaCha8Rng::seed_from_u64(89);
        for _ in 0..100 {
            let u = random::word(&mut rng, 3, 10);
            let mut total = GroupRingElement::zero();
            for j in 1..=3 {
                for (prefix, c) in fox_derivative(&u, j).iter() {
                    total.add_term(prefix * &Word::generator(j), c.clone());
                    total.add_term(prefix.clone(), -c.clone());
                }
            }
            let expected = GroupRingElement::from_word(u.clone()).add(&GroupRingElement::one().neg());
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn abelianization_sends_words_to_monomials() {
        let e = element(&[("x1.x2.X1", 2), ("x1", -1)]);
        assert_eq!(e.abelianize(&[1, 1]), "2t-t".parse().unwrap());
        assert_eq!(e.abelianize(&[0, 1]), "2t-1".parse().unwrap());
    }
}

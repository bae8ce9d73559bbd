//! The Goldman bracket on a one-vertex ribbon surface, computed from linked
//! pairs.
//!
//! For cyclic words `x, y` and positions `p, q`, the lifts of `x` and `y`
//! through the base vertex of the universal cover (a planar tree) are lines
//! with ends `x⁻, x⁺` and `y⁻, y⁺`. The pair contributes when the lines cross,
//! i.e. the four ends interleave on the circle at infinity, and the base
//! vertex is where the `x` line enters the segment shared with the `y` line.
//! Each crossing orbit is then counted exactly once, with the term
//! `⟨x_p · y_q⟩` and the sign of the interleaving.
//!
//! Lines that share an end are parallel copies of a common root and
//! contribute nothing.

mod ray;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::surface::RibbonSurface;
use crate::words::{CyclicWord, LinearCombination, Rational, Word};
use crate::{Error, Result};

pub use ray::{circular_order, rays_at, Ray};

/// Sign fixing `[⟨a1⟩, ⟨b1⟩] = +⟨a1·b1⟩` on the standard genus-one surface;
/// the raw interleaving sign is the opposite under the counterclockwise
/// reading of vertex orders.
const ORIENTATION: i8 = -1;

/// Deliberate corruption of the bracket, used to check that the invariant
/// suites detect errors.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Negatively linked pairs are counted with a positive sign.
    SignFlip,
}

/// Contribution of the position pair `(p, q)`: `±1` for a crossing entered at
/// the base vertex, `0` otherwise (including coincident rays).
pub fn linked_sign(
    surface: &RibbonSurface,
    x: &CyclicWord,
    p: usize,
    y: &CyclicWord,
    q: usize,
) -> Result<i8> {
    let (x_back, x_fwd) = rays_at(x, p)?;
    let (y_back, y_fwd) = rays_at(y, q)?;
    Ok(linked_sign_of_rays(surface, &x_back, &x_fwd, &y_back, &y_fwd))
}

fn linked_sign_of_rays(
    surface: &RibbonSurface,
    x_back: &Ray,
    x_fwd: &Ray,
    y_back: &Ray,
    y_fwd: &Ray,
) -> i8 {
    for a in [x_back, x_fwd] {
        for b in [y_back, y_fwd] {
            if a.common_prefix(b).is_none() {
                return 0;
            }
        }
    }
    // Only the entry vertex of the shared segment counts.
    let entering = x_back.at(0);
    if entering == y_back.at(0) || entering == y_fwd.at(0) {
        return 0;
    }
    let side_back = circular_order(x_back, x_fwd, y_back, surface).expect("distinct rays");
    let side_fwd = circular_order(x_back, x_fwd, y_fwd, surface).expect("distinct rays");
    if side_back == side_fwd {
        0
    } else {
        side_fwd
    }
}

fn check_rank(surface: &RibbonSurface, c: &CyclicWord) -> Result<()> {
    let found = c.max_generator();
    if found > surface.rank() {
        Err(Error::RankMismatch {
            expected: surface.rank(),
            found,
        })
    } else {
        Ok(())
    }
}

/// Integer-coefficient bracket of two classes.
pub fn goldman_bracket_integral(
    surface: &RibbonSurface,
    x: &CyclicWord,
    y: &CyclicWord,
) -> Result<BTreeMap<CyclicWord, i64>> {
    bracket_terms(surface, x, y, Mutation::None)
}

fn bracket_terms(
    surface: &RibbonSurface,
    x: &CyclicWord,
    y: &CyclicWord,
    mutation: Mutation,
) -> Result<BTreeMap<CyclicWord, i64>> {
    check_rank(surface, x)?;
    check_rank(surface, y)?;
    let mut terms: BTreeMap<CyclicWord, i64> = BTreeMap::new();
    if x.is_empty() || y.is_empty() {
        return Ok(terms);
    }
    let y_rays: Vec<(Ray, Ray)> = (0..y.len())
        .map(|q| rays_at(y, q))
        .collect::<Result<_>>()?;
    for p in 0..x.len() {
        let (x_back, x_fwd) = rays_at(x, p)?;
        for (q, (y_back, y_fwd)) in y_rays.iter().enumerate() {
            let mut sign = linked_sign_of_rays(surface, &x_back, &x_fwd, y_back, y_fwd);
            if sign == 0 {
                continue;
            }
            if mutation == Mutation::SignFlip && sign < 0 {
                sign = 1;
            }
            let product = CyclicWord::from_letters(
                x.rotation(p)
                    .letters()
                    .iter()
                    .chain(y.rotation(q).letters())
                    .copied(),
            );
            let entry = terms.entry(product).or_insert(0);
            *entry += i64::from(sign * ORIENTATION);
        }
    }
    terms.retain(|_, c| *c != 0);
    Ok(terms)
}

/// Goldman bracket `[x, y]` of two conjugacy classes on `surface`.
pub fn goldman_bracket(
    surface: &RibbonSurface,
    x: &CyclicWord,
    y: &CyclicWord,
) -> Result<LinearCombination> {
    goldman_bracket_mutated(surface, x, y, Mutation::None)
}

#[doc(hidden)]
pub fn goldman_bracket_mutated(
    surface: &RibbonSurface,
    x: &CyclicWord,
    y: &CyclicWord,
    mutation: Mutation,
) -> Result<LinearCombination> {
    Ok(LinearCombination::from_integer_terms(
        bracket_terms(surface, x, y, mutation)?,
    ))
}

/// Bracket of words; the words are replaced by their conjugacy classes first.
pub fn goldman_bracket_words(surface: &RibbonSurface, x: &Word, y: &Word) -> Result<LinearCombination> {
    goldman_bracket(surface, &CyclicWord::from_word(x), &CyclicWord::from_word(y))
}

/// Bilinear extension to combinations.
pub fn goldman_bracket_linear(
    surface: &RibbonSurface,
    x: &LinearCombination,
    y: &LinearCombination,
) -> Result<LinearCombination> {
    goldman_bracket_linear_mutated(surface, x, y, Mutation::None)
}

#[doc(hidden)]
pub fn goldman_bracket_linear_mutated(
    surface: &RibbonSurface,
    x: &LinearCombination,
    y: &LinearCombination,
    mutation: Mutation,
) -> Result<LinearCombination> {
    let mut out = LinearCombination::zero();
    for (cx, ax) in x.iter() {
        for (cy, ay) in y.iter() {
            let coeff = ax * ay;
            for (class, n) in bracket_terms(surface, cx, cy, mutation)? {
                out.add_term(class, &coeff * Rational::from_integer(n.into()));
            }
        }
    }
    Ok(out)
}

/// Element of `Q[H]` for `H = Z^rank`: exponent vector to coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyCombination {
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl HomologyCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, class: Vec<i64>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(class.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&class);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
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

    pub fn coefficient(&self, class: &[i64]) -> Rational {
        self.terms.get(class).cloned().unwrap_or_else(Rational::zero)
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * factor);
        }
    }

    pub fn map_classes<F: FnMut(&[i64]) -> Vec<i64>>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// `{"terms": [{"coeff": "p/q", "class": [..]}, ...]}`, sorted by class.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(k, v)| serde_json::json!({"coeff": crate::words::format_rational(v), "class": k}))
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

/// Pushes every class to its exponent-sum vector, merging coefficients.
pub fn homological_projection(c: &LinearCombination, rank: usize) -> Result<HomologyCombination> {
    let mut out = HomologyCombination::zero();
    for (class, coeff) in c.iter() {
        out.add_term(class.to_word().abelianize(rank)?, coeff.clone());
    }
    Ok(out)
}

/// Standard symplectic form on `Z^{2g}` in the basis `a1, b1, a2, b2, ...`.
pub fn symplectic_form(u: &[i64], v: &[i64]) -> i64 {
    assert_eq!(u.len(), v.len(), "vectors of equal length");
    u.chunks(2)
        .zip(v.chunks(2))
        .map(|(a, b)| a[0] * b[1] - a[1] * b[0])
        .sum()
}

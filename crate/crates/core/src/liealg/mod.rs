//! The knot Lie algebras of a fibered knot: the bracket on conjugacy classes
//! of the fiber group, its quotient by the `t`-orbit relation, and the
//! homological quotient.
//!
//! The fiber group of a fibered knot is the commutator subgroup of the knot
//! group, and the covering transformation acts on it as the monodromy, so the
//! knot bracket is the Goldman bracket of the fiber surface.

mod orbit;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::goldman::{goldman_bracket, goldman_bracket_linear, symplectic_form, HomologyCombination};
use crate::knots::FiberedKnotModel;
use crate::words::{format_rational, Alphabet, CyclicWord, LinearCombination, Rational};
use crate::{Error, Result};

pub use orbit::{orbit_canonical, TOrbitClass, MAX_ORBIT_STEPS};

/// Bracket of two classes of the fiber group.
pub fn bracket_pi_k(model: &FiberedKnotModel, x: &CyclicWord, y: &CyclicWord) -> Result<LinearCombination> {
    for c in [x, y] {
        if c.max_generator() > model.rank() {
            return Err(Error::RankMismatch {
                expected: model.rank(),
                found: c.max_generator(),
            });
        }
    }
    goldman_bracket(model.fiber(), x, y)
}

pub fn bracket_pi_k_linear(
    model: &FiberedKnotModel,
    x: &LinearCombination,
    y: &LinearCombination,
) -> Result<LinearCombination> {
    goldman_bracket_linear(model.fiber(), x, y)
}

/// Element of `Q[Π_K]`, keyed by canonical orbit representatives.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrbitCombination {
    terms: BTreeMap<TOrbitClass, Rational>,
}

impl OrbitCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, class: TOrbitClass, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&class) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&class);
                }
            }
            None => {
                self.terms.insert(class, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TOrbitClass, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, class: &TOrbitClass) -> Rational {
        self.terms.get(class).cloned().unwrap_or_else(Rational::zero)
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * factor);
        }
    }

    pub fn to_json(&self) -> Value {
        let mut terms: Vec<(String, &TOrbitClass, &Rational)> = self
            .terms
            .iter()
            .map(|(k, v)| (k.representative().display(Alphabet::Genus), k, v))
            .collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let terms: Vec<Value> = terms
            .into_iter()
            .map(|(name, k, v)| {
                let (low, high) = k.window();
                json!({"coeff": format_rational(v), "class": name, "window": [low, high]})
            })
            .collect();
        json!({ "terms": terms })
    }
}

/// Projects every term to its `t`-orbit.
pub fn project_to_orbits(
    model: &FiberedKnotModel,
    c: &LinearCombination,
    search_bound: usize,
) -> Result<OrbitCombination> {
    let mut out = OrbitCombination::zero();
    for (class, coeff) in c.iter() {
        out.add_term(orbit_canonical(model, class, search_bound)?, coeff.clone());
    }
    Ok(out)
}

/// Bracket on `Q[Π_K]`: the fiber bracket of the representatives, projected
/// to orbits.
#[allow(non_snake_case)]
pub fn bracket_PiK(
    model: &FiberedKnotModel,
    a: &TOrbitClass,
    b: &TOrbitClass,
    search_bound: usize,
) -> Result<OrbitCombination> {
    let c = bracket_pi_k(model, a.representative(), b.representative())?;
    project_to_orbits(model, &c, search_bound)
}

/// Bilinear extension of [`bracket_PiK`].
#[allow(non_snake_case)]
pub fn bracket_PiK_linear(
    model: &FiberedKnotModel,
    a: &OrbitCombination,
    b: &OrbitCombination,
    search_bound: usize,
) -> Result<OrbitCombination> {
    let mut out = OrbitCombination::zero();
    for (ca, xa) in a.iter() {
        for (cb, xb) in b.iter() {
            out.add_scaled(&bracket_PiK(model, ca, cb, search_bound)?, &(xa * xb));
        }
    }
    Ok(out)
}

/// `ω(h1, h2) · [h1 + h2]` on `Q[Z^{2g}]`.
#[allow(non_snake_case)]
pub fn bracket_H(genus: usize, h1: &[i64], h2: &[i64]) -> Result<HomologyCombination> {
    for h in [h1, h2] {
        if h.len() != 2 * genus {
            return Err(Error::RankMismatch {
                expected: 2 * genus,
                found: h.len(),
            });
        }
    }
    let mut out = HomologyCombination::zero();
    let sum: Vec<i64> = h1.iter().zip(h2).map(|(a, b)| a + b).collect();
    out.add_term(sum, Rational::from_integer(symplectic_form(h1, h2).into()));
    Ok(out)
}

#[allow(non_snake_case)]
pub fn bracket_H_linear(
    genus: usize,
    a: &HomologyCombination,
    b: &HomologyCombination,
) -> Result<HomologyCombination> {
    let mut out = HomologyCombination::zero();
    for (ha, xa) in a.iter() {
        for (hb, xb) in b.iter() {
            out.add_scaled(&bracket_H(genus, ha, hb)?, &(xa * xb));
        }
    }
    Ok(out)
}

/// Action of `t` on `H`: the monodromy homology matrix.
pub fn t_on_h(model: &FiberedKnotModel, h: &[i64]) -> Result<Vec<i64>> {
    let m = model.homology_matrix();
    if h.len() != m.len() {
        return Err(Error::RankMismatch {
            expected: m.len(),
            found: h.len(),
        });
    }
    Ok(m.iter().map(|row| row.iter().zip(h).map(|(a, b)| a * b).sum()).collect())
}

/// `t` applied termwise to a combination in `Q[H]`.
pub fn t_on_h_combination(model: &FiberedKnotModel, c: &HomologyCombination) -> Result<HomologyCombination> {
    let mut out = HomologyCombination::zero();
    for (h, coeff) in c.iter() {
        out.add_term(t_on_h(model, h)?, coeff.clone());
    }
    Ok(out)
}

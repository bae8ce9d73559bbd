//! Knot input: braid closures, Wirtinger presentations and fibered models.

mod braid;
mod model;
mod presentation;

pub use braid::{closure_components, parse_braid, wirtinger_from_braid, wirtinger_exponents, BraidWord};
pub use model::{catalog, is_symplectic, FiberedKnotModel, CATALOG};
pub use presentation::GroupPresentation;

use crate::alexander::{alexander_matrix, alexander_polynomial, LaurentPolynomial};
use crate::{Error, Result};

/// Braid whose closure is the catalog knot `name`.
pub fn catalog_braid(name: &str) -> Option<&'static str> {
    match name {
        "trefoil" => Some("s1 s1 s1"),
        "figure8" => Some("s1 s2' s1 s2'"),
        _ => None,
    }
}

/// A knot as the tool sees it: a fibered model carries the bracket, a bare
/// presentation only supports the Alexander machinery.
#[derive(Clone, Debug)]
pub enum Knot {
    Fibered(FiberedKnotModel),
    Presented {
        name: String,
        presentation: GroupPresentation,
    },
}

impl Knot {
    /// Catalog knot by name.
    pub fn catalog(name: &str) -> Result<Self> {
        catalog(name).map(Knot::Fibered)
    }

    /// Closure of a braid, without a fibered structure.
    pub fn from_braid(text: &str, strands: Option<usize>) -> Result<Self> {
        let braid = parse_braid(text, strands)?;
        Ok(Knot::Presented {
            name: format!("closure of {braid}"),
            presentation: wirtinger_from_braid(&braid)?,
        })
    }

    pub fn name(&self) -> &str {
        match self {
            Knot::Fibered(m) => m.name(),
            Knot::Presented { name, .. } => name,
        }
    }

    pub fn model(&self) -> Result<&FiberedKnotModel> {
        match self {
            Knot::Fibered(m) => Ok(m),
            Knot::Presented { name, .. } => Err(Error::NotFibered(name.clone())),
        }
    }

    /// Meridional presentation for fibered models, Wirtinger otherwise.
    pub fn presentation(&self) -> GroupPresentation {
        match self {
            Knot::Fibered(m) => crate::cover::meridional_presentation(m),
            Knot::Presented { presentation, .. } => presentation.clone(),
        }
    }

    /// Meridian exponent of each generator of [`Knot::presentation`].
    pub fn exponents(&self) -> Vec<i64> {
        let p = self.presentation();
        match self {
            Knot::Fibered(_) => (0..p.rank()).map(|i| i64::from(i == 0)).collect(),
            Knot::Presented { .. } => wirtinger_exponents(&p),
        }
    }

    pub fn alexander_polynomial(&self) -> Result<LaurentPolynomial> {
        alexander_polynomial(&alexander_matrix(&self.presentation(), &self.exponents())?)
    }
}

#[cfg(test)]
mod tests;

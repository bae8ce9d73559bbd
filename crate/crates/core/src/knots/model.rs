use serde_json::Value;

use crate::alexander::{characteristic_polynomial, LaurentPolynomial};
use crate::goldman::symplectic_form;
use crate::surface::{standard_surface, RibbonSurface};
use crate::words::{parse_word, Alphabet, CyclicWord, FreeGroupAutomorphism, Word};
use crate::{Error, Result};

/// Fibered knot given by its fiber genus and monodromy.
///
/// The fiber is the standard surface with boundary `[a1,b1]···[ag,bg]`. The
/// covering transformation `t` acts on the fiber group as the monodromy `φ`.
#[derive(Clone, Debug)]
pub struct FiberedKnotModel {
    name: String,
    genus: usize,
    fiber: RibbonSurface,
    monodromy: FreeGroupAutomorphism,
    alexander_reference: LaurentPolynomial,
}

impl FiberedKnotModel {
    /// Checks that `φ` fixes the boundary class, that its homology matrix is
    /// symplectic and that its characteristic polynomial matches.
    pub fn new(
        name: impl Into<String>,
        genus: usize,
        monodromy: FreeGroupAutomorphism,
        alexander_reference: LaurentPolynomial,
    ) -> Result<Self> {
        let name = name.into();
        if genus == 0 {
            return Err(Error::InvalidModel("genus must be positive".into()));
        }
        if monodromy.rank() != 2 * genus {
            return Err(Error::InvalidModel(format!(
                "monodromy has rank {} but genus {genus} needs rank {}",
                monodromy.rank(),
                2 * genus
            )));
        }
        let fiber = standard_surface(genus)?;
        let boundary = fiber.boundary_word();
        if monodromy.apply_class(&boundary)? != boundary {
            return Err(Error::InvalidModel(
                "monodromy does not fix the boundary class".into(),
            ));
        }
        let m = monodromy.abelianization_matrix();
        if !is_symplectic(&m) {
            return Err(Error::InvalidModel(
                "homology matrix does not preserve the intersection form".into(),
            ));
        }
        let charpoly = characteristic_polynomial(&m).normalized();
        let alexander_reference = alexander_reference.normalized();
        if charpoly != alexander_reference {
            return Err(Error::InvalidModel(format!(
                "characteristic polynomial {charpoly} differs from Alexander polynomial {alexander_reference}"
            )));
        }
        Ok(FiberedKnotModel {
            name,
            genus,
            fiber,
            monodromy,
            alexander_reference,
        })
    }

    /// Reads `{"genus": g, "monodromy": {"a1": "word", ...}, "alexander": "..."}`
    /// with optional `"name"` and `"inverse"` (same shape as `"monodromy"`).
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidModel(format!("bad JSON: {e}")))?;
        let genus = value
            .get("genus")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidModel("missing integer `genus`".into()))? as usize;
        let name = value.get("name").and_then(Value::as_str).unwrap_or("custom");
        let images = generator_map(&value, "monodromy", genus)?
            .ok_or_else(|| Error::InvalidModel("missing object `monodromy`".into()))?;
        let monodromy = match generator_map(&value, "inverse", genus)? {
            Some(inverse) => FreeGroupAutomorphism::new(2 * genus, images, inverse)?,
            None => FreeGroupAutomorphism::from_images(2 * genus, images)?,
        };
        let alexander: LaurentPolynomial = value
            .get("alexander")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::InvalidModel("missing string `alexander`".into()))?
            .parse()?;
        Self::new(name, genus, monodromy, alexander)
    }

    pub fn to_json(&self) -> Value {
        let images = |ws: &[Word]| -> serde_json::Map<String, Value> {
            ws.iter()
                .enumerate()
                .map(|(k, w)| {
                    let name = Alphabet::Genus.letter_name(crate::words::Letter::pos(k + 1));
                    (name, Value::String(w.display(Alphabet::Genus)))
                })
                .collect()
        };
        serde_json::json!({
            "name": self.name,
            "genus": self.genus,
            "monodromy": images(self.monodromy.images()),
            "inverse": images(self.monodromy.inverse_images()),
            "alexander": self.alexander_reference.to_string(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn fiber(&self) -> &RibbonSurface {
        &self.fiber
    }

    pub fn monodromy(&self) -> &FreeGroupAutomorphism {
        &self.monodromy
    }

    pub fn alexander_reference(&self) -> &LaurentPolynomial {
        &self.alexander_reference
    }

    pub fn boundary_class(&self) -> CyclicWord {
        self.fiber.boundary_word()
    }

    /// Action of `t` on `H_1(F) = Z^{2g}` (column convention).
    pub fn homology_matrix(&self) -> Vec<Vec<i64>> {
        self.monodromy.abelianization_matrix()
    }
}

fn generator_map(value: &Value, key: &str, genus: usize) -> Result<Option<Vec<Word>>> {
    let Some(map) = value.get(key) else {
        return Ok(None);
    };
    let map = map
        .as_object()
        .ok_or_else(|| Error::InvalidModel(format!("`{key}` must be an object")))?;
    let names: Vec<String> = (1..=genus).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    if let Some(extra) = map.keys().find(|k| !names.contains(k)) {
        return Err(Error::InvalidModel(format!(
            "`{key}` has unexpected generator `{extra}`"
        )));
    }
    names
        .iter()
        .map(|n| {
            let text = map
                .get(n)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::InvalidModel(format!("`{key}` is missing `{n}`")))?;
            let w = parse_word(text)?;
            w.check_rank(2 * genus)?;
            Ok(w)
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// `MᵀJM = J` for the standard symplectic form.
pub fn is_symplectic(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    if !n.is_multiple_of(2) || m.iter().any(|r| r.len() != n) {
        return false;
    }
    let column = |j: usize| -> Vec<i64> { m.iter().map(|r| r[j]).collect() };
    let unit = |j: usize| -> Vec<i64> { (0..n).map(|i| i64::from(i == j)).collect() };
    (0..n).all(|i| {
        (0..n).all(|j| symplectic_form(&column(i), &column(j)) == symplectic_form(&unit(i), &unit(j)))
    })
}

fn twist_a() -> FreeGroupAutomorphism {
    FreeGroupAutomorphism::new(
        2,
        vec![word("a1"), word("b1.a1")],
        vec![word("a1"), word("b1.A1")],
    )
    .expect("Dehn twist is invertible")
}

fn twist_b() -> FreeGroupAutomorphism {
    FreeGroupAutomorphism::new(
        2,
        vec![word("a1.b1"), word("b1")],
        vec![word("a1.B1"), word("b1")],
    )
    .expect("Dehn twist is invertible")
}

fn word(text: &str) -> Word {
    parse_word(text).expect("catalog words are well formed")
}

/// Names accepted by [`catalog`].
pub const CATALOG: [&str; 2] = ["trefoil", "figure8"];

/// Built-in fibered models: the trefoil and the figure-eight knot, both
/// genus one, with monodromies composed of Dehn twists about `a1` and `b1`.
pub fn catalog(name: &str) -> Result<FiberedKnotModel> {
    match name {
        "trefoil" => FiberedKnotModel::new(
            "trefoil",
            1,
            twist_a().compose(&twist_b().inverse())?,
            "t^2-t+1".parse()?,
        ),
        "figure8" => FiberedKnotModel::new(
            "figure8",
            1,
            twist_a().compose(&twist_b())?,
            "t^2-3t+1".parse()?,
        ),
        other => Err(Error::UnknownKnot(other.to_string())),
    }
}

use serde_json::{json, Value};

use crate::words::{format_named, Word};
use crate::Result;

/// Finite presentation: named generators and freely reduced relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            r.check_rank(generator_names.len())?;
        }
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(GroupPresentation {
            generator_names,
            relators,
        })
    }

    /// Generators named `x1, ..., xn`.
    pub fn with_generic_names(rank: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new((1..=rank).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn rank(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Generators minus relators.
    pub fn deficiency(&self) -> i64 {
        self.rank() as i64 - self.relators.len() as i64
    }

    pub fn format_word(&self, w: &Word) -> String {
        format_named(w, &self.generator_names)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.generator_names,
            "relators": self.relators.iter().map(|r| self.format_word(r)).collect::<Vec<_>>(),
        })
    }

    /// Abelianization as `(free rank, torsion coefficients > 1)`, from the
    /// Smith normal form of the relator exponent matrix.
    pub fn abelianization(&self) -> (usize, Vec<i64>) {
        let mut m: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| r.abelianize(self.rank()).expect("checked at construction"))
            .collect();
        let diagonal = smith_diagonal(&mut m, self.rank());
        let nonzero: Vec<i64> = diagonal.into_iter().filter(|&d| d != 0).collect();
        let torsion = nonzero.iter().copied().filter(|&d| d > 1).collect();
        (self.rank() - nonzero.len(), torsion)
    }

    /// Eliminates generators that a relator of the form `x_i·x_j⁻¹` (or its
    /// inverse) identifies with another generator. Generators keep their
    /// names; the survivors are renumbered in order.
    #[must_use]
    pub fn tietze_cleanup(&self) -> Self {
        let mut current = self.clone();
        loop {
            let found = current.relators.iter().enumerate().find_map(|(k, r)| {
                let l = r.letters();
                (l.len() == 2 && l[0].generator() != l[1].generator() && l[0].is_inverse() != l[1].is_inverse())
                    .then_some((k, l[0], l[1]))
            });
            let Some((k, first, second)) = found else {
                return current;
            };
            // first·second = 1, so eliminate `first` as second⁻¹.
            let gone = first.generator();
            let replacement = if first.is_inverse() {
                Word::from_letters([second])
            } else {
                Word::from_letters([second.inverse()])
            };
            let rank = current.rank();
            let images: Vec<Word> = (1..=rank)
                .map(|i| if i == gone { replacement.clone() } else { Word::generator(i) })
                .collect();
            let renumber: Vec<Word> = (1..=rank)
                .map(|i| match i.cmp(&gone) {
                    std::cmp::Ordering::Less => Word::generator(i),
                    std::cmp::Ordering::Equal => Word::identity(),
                    std::cmp::Ordering::Greater => Word::generator(i - 1),
                })
                .collect();
            let relators = current
                .relators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, r)| {
                    r.substitute(&images)
                        .and_then(|w| w.substitute(&renumber))
                        .expect("ranks agree")
                })
                .collect();
            let mut names = current.generator_names.clone();
            names.remove(gone - 1);
            current = GroupPresentation::new(names, relators).expect("renumbered within rank");
        }
    }
}

/// Diagonal of the Smith normal form (absolute values) of an integer matrix
/// with `columns` columns.
#[allow(clippy::needless_range_loop)]
pub(crate) fn smith_diagonal(m: &mut [Vec<i64>], columns: usize) -> Vec<i64> {
    let rows = m.len();
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(columns) {
        // pivot: smallest nonzero absolute value in the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..columns).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut done = true;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            for j in t..columns {
                m[i][j] -= q * m[t][j];
            }
            done &= m[i][t] == 0;
        }
        for j in t + 1..columns {
            let q = m[t][j] / m[t][t];
            for i in t..rows {
                m[i][j] -= q * m[i][t];
            }
            done &= m[t][j] == 0;
        }
        if !done {
            continue;
        }
        // pivot must divide the rest of the block
        if let Some((i, _)) = (t + 1..rows)
            .flat_map(|i| (t + 1..columns).map(move |j| (i, j)))
            .find(|&(i, j)| m[i][j] % m[t][t] != 0)
        {
            for j in t..columns {
                m[t][j] += m[i][j];
            }
            continue;
        }
        diagonal.push(m[t][t].abs());
        t += 1;
    }
    diagonal
}

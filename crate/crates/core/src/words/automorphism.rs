use super::{CyclicWord, LinearCombination, Word};
use crate::{Error, Result};

/// Automorphism of the free group of rank `rank`, stored with its inverse.
///
/// Construction checks that the two substitutions are mutually inverse on
/// every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGroupAutomorphism {
    rank: usize,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl FreeGroupAutomorphism {
    pub fn new(rank: usize, images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidAutomorphism("rank must be positive".into()));
        }
        if images.len() != rank || inverse_images.len() != rank {
            return Err(Error::InvalidAutomorphism(format!(
                "expected {rank} images and {rank} inverse images, got {} and {}",
                images.len(),
                inverse_images.len()
            )));
        }
        for w in images.iter().chain(&inverse_images) {
            w.check_rank(rank)?;
        }
        for i in 1..=rank {
            let x = Word::generator(i);
            let there_and_back = x.substitute(&images)?.substitute(&inverse_images)?;
            let back_and_there = x.substitute(&inverse_images)?.substitute(&images)?;
            if there_and_back != x || back_and_there != x {
                return Err(Error::InvalidAutomorphism(format!(
                    "inverse images do not invert generator {i}"
                )));
            }
        }
        Ok(FreeGroupAutomorphism {
            rank,
            images,
            inverse_images,
        })
    }

    /// Builds an automorphism from generator images alone, finding the inverse
    /// by greedy length-reducing Nielsen moves. Fails if no pairwise move
    /// shortens the tuple before it becomes a permutation of letters.
    pub fn from_images(rank: usize, images: Vec<Word>) -> Result<Self> {
        let inverse = greedy_inverse(rank, &images)?;
        Self::new(rank, images, inverse)
    }

    pub fn identity(rank: usize) -> Self {
        let ids: Vec<Word> = (1..=rank).map(Word::generator).collect();
        FreeGroupAutomorphism {
            rank,
            images: ids.clone(),
            inverse_images: ids,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        FreeGroupAutomorphism {
            rank: self.rank,
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| w.substitute(&self.images))
            .collect::<Result<Vec<_>>>()?;
        let inverse_images = self
            .inverse_images
            .iter()
            .map(|w| w.substitute(&other.inverse_images))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeGroupAutomorphism {
            rank: self.rank,
            images,
            inverse_images,
        })
    }

    #[must_use]
    pub fn pow(&self, exponent: i64) -> Self {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.rank);
        for _ in 0..exponent.unsigned_abs() {
            out = base.compose(&out).expect("equal ranks");
        }
        out
    }

    pub fn apply_word(&self, w: &Word) -> Result<Word> {
        w.substitute(&self.images)
    }

    pub fn apply_class(&self, c: &CyclicWord) -> Result<CyclicWord> {
        Ok(CyclicWord::from_word(&self.apply_word(&c.to_word())?))
    }

    pub fn apply_combination(&self, c: &LinearCombination) -> Result<LinearCombination> {
        c.try_map_classes(|k| self.apply_class(k))
    }

    /// Applies `self^n` to a class by iterating, without materialising the power.
    pub fn apply_class_power(&self, c: &CyclicWord, n: i64) -> Result<CyclicWord> {
        let step = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = c.clone();
        for _ in 0..n.unsigned_abs() {
            out = step.apply_class(&out)?;
        }
        Ok(out)
    }

    pub fn apply_word_power(&self, w: &Word, n: i64) -> Result<Word> {
        let step = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = w.clone();
        for _ in 0..n.unsigned_abs() {
            out = step.apply_word(&out)?;
        }
        Ok(out)
    }

    /// Integer matrix of the induced map on `Z^rank`; column `j` is the
    /// exponent-sum vector of the image of generator `j + 1`.
    pub fn abelianization_matrix(&self) -> Vec<Vec<i64>> {
        let columns: Vec<Vec<i64>> = self
            .images
            .iter()
            .map(|w| w.abelianize(self.rank).expect("checked at construction"))
            .collect();
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| columns[j][i]).collect())
            .collect()
    }
}

fn greedy_inverse(rank: usize, images: &[Word]) -> Result<Vec<Word>> {
    if images.len() != rank {
        return Err(Error::InvalidAutomorphism(format!(
            "expected {rank} images, got {}",
            images.len()
        )));
    }
    for w in images {
        w.check_rank(rank)?;
    }
    // Invariant: u[k] = φ(t[k]).
    let mut u: Vec<Word> = images.to_vec();
    let mut t: Vec<Word> = (1..=rank).map(Word::generator).collect();
    loop {
        if u.iter().all(|w| w.len() == 1) {
            break;
        }
        let mut best: Option<(usize, usize, bool, bool, usize)> = None;
        for i in 0..rank {
            for j in (0..rank).filter(|&j| j != i) {
                for invert in [false, true] {
                    let uj = if invert { u[j].inverse() } else { u[j].clone() };
                    for left in [false, true] {
                        let candidate = if left { &uj * &u[i] } else { &u[i] * &uj };
                        if candidate.len() < u[i].len()
                            && best.is_none_or(|b| candidate.len() < b.4)
                        {
                            best = Some((i, j, invert, left, candidate.len()));
                        }
                    }
                }
            }
        }
        let Some((i, j, invert, left, _)) = best else {
            return Err(Error::InvalidAutomorphism(
                "could not invert the images by length-reducing Nielsen moves; supply inverse images"
                    .into(),
            ));
        };
        let (uj, tj) = if invert {
            (u[j].inverse(), t[j].inverse())
        } else {
            (u[j].clone(), t[j].clone())
        };
        if left {
            u[i] = &uj * &u[i];
            t[i] = &tj * &t[i];
        } else {
            u[i] = &u[i] * &uj;
            t[i] = &t[i] * &tj;
        }
    }
    let mut inverse = vec![None; rank];
    for (k, w) in u.iter().enumerate() {
        let l = w.letters()[0];
        let slot = &mut inverse[l.generator() - 1];
        if slot.is_some() {
            return Err(Error::InvalidAutomorphism("images do not form a basis".into()));
        }
        *slot = Some(if l.is_inverse() { t[k].inverse() } else { t[k].clone() });
    }
    Ok(inverse.into_iter().map(|w| w.expect("every slot filled")).collect())
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

    /// Dehn-twist-like pair on rank 2: a ↦ a, b ↦ b·a.
    fn twist() -> FreeGroupAutomorphism {
        FreeGroupAutomorphism::new(2, vec![w("a1"), w("b1.a1")], vec![w("a1"), w("b1.A1")]).unwrap()
    }

    #[test]
    fn rejects_non_inverse_pair() {
        let err = FreeGroupAutomorphism::new(2, vec![w("a1"), w("b1.a1")], vec![w("a1"), w("b1")]);
        assert!(matches!(err, Err(Error::InvalidAutomorphism(_))));
        let rank = FreeGroupAutomorphism::new(1, vec![w("b1")], vec![w("b1")]);
        assert!(matches!(rank, Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn identity_leaves_inputs_unchanged() {
        let id = FreeGroupAutomorphism::identity(4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let u = random::word(&mut rng, 4, 8);
            assert_eq!(id.apply_word(&u).unwrap(), u);
        }
    }

    #[test]
    fn inverse_undoes_on_random_inputs() {
        let phi = twist().compose(&twist().inverse().pow(3)).unwrap().compose(&FreeGroupAutomorphism::new(
            2,
            vec![w("a1.b1"), w("b1")],
            vec![w("a1.B1"), w("b1")],
        ).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let u = random::word(&mut rng, 2, 8);
            assert_eq!(phi.inverse().apply_word(&phi.apply_word(&u).unwrap()).unwrap(), u);
            let c = CyclicWord::from_word(&u);
            assert_eq!(phi.inverse().apply_class(&phi.apply_class(&c).unwrap()).unwrap(), c);
            let combo = random::combination(&mut rng, 2, 4, 6);
            assert_eq!(
                phi.inverse().apply_combination(&phi.apply_combination(&combo).unwrap()).unwrap(),
                combo
            );
        }
    }

    #[test]
    fn class_map_is_well_defined() {
        let phi = twist();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let u = random::word(&mut rng, 2, 8);
            let g = random::word(&mut rng, 2, 5);
            let lhs = CyclicWord::from_word(&phi.apply_word(&u).unwrap());
            let rhs = CyclicWord::from_word(&phi.apply_word(&u.conjugated_by(&g)).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rank_mismatch_on_apply() {
        assert!(matches!(twist().apply_word(&w("a2")), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn powers_and_matrix() {
        let phi = twist();
        assert_eq!(phi.pow(3).apply_word(&w("b1")).unwrap(), w("b1.a1.a1.a1"));
        assert_eq!(phi.pow(-2).apply_word(&w("b1")).unwrap(), w("b1.A1.A1"));
        assert_eq!(phi.apply_word_power(&w("b1"), -2).unwrap(), w("b1.A1.A1"));
        assert_eq!(phi.abelianization_matrix(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn greedy_inverse_recovers_twist_products() {
        let phi = twist().compose(&twist()).unwrap();
        let rebuilt = FreeGroupAutomorphism::from_images(2, phi.images().to_vec()).unwrap();
        assert_eq!(rebuilt.inverse_images(), phi.inverse_images());
        assert!(FreeGroupAutomorphism::from_images(2, vec![w("a1.a1"), w("b1")]).is_err());
    }
}

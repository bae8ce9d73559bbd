use crate::knots::FiberedKnotModel;
use crate::surface::{connected_power, RibbonSurface};
use crate::words::{CyclicWord, LinearCombination, Word};
use crate::{Error, Result};

/// The part of the cover between levels `k` and `l`: one fiber copy per
/// level, glued by boundary connected sum, with its map to the fiber group.
///
/// Generator `x_i` of the copy at level `n` is window generator
/// `(n - k)·2g + i` and projects to `φⁿ(x_i)`.
#[derive(Clone, Debug)]
pub struct WindowMap {
    k: i64,
    l: i64,
    base_rank: usize,
    surface: RibbonSurface,
    projection: Vec<Word>,
}

impl WindowMap {
    pub fn levels(&self) -> (i64, i64) {
        (self.k, self.l)
    }

    pub fn width(&self) -> usize {
        (self.l - self.k + 1) as usize
    }

    pub fn surface(&self) -> &RibbonSurface {
        &self.surface
    }

    pub fn projection(&self) -> &[Word] {
        &self.projection
    }

    /// Window generator for `x_base` at `level`.
    pub fn generator(&self, base: usize, level: i64) -> Result<usize> {
        if base == 0 || base > self.base_rank || level < self.k || level > self.l {
            return Err(Error::Invalid(format!(
                "x{base} at level {level} is outside the window {}..={}",
                self.k, self.l
            )));
        }
        Ok((level - self.k) as usize * self.base_rank + base)
    }

    pub fn project_word(&self, w: &Word) -> Result<Word> {
        w.substitute(&self.projection)
    }

    pub fn project_class(&self, c: &CyclicWord) -> Result<CyclicWord> {
        Ok(CyclicWord::from_word(&self.project_word(&c.to_word())?))
    }
}

/// Window of levels `k..=l` over the fiber of `model`.
pub fn window(model: &FiberedKnotModel, k: i64, l: i64) -> Result<WindowMap> {
    if k > l {
        return Err(Error::Invalid(format!("empty window {k}..={l}")));
    }
    let width = (l - k + 1) as usize;
    let surface = connected_power(model.fiber(), width)?;
    let mut projection = Vec::with_capacity(width * model.rank());
    for n in k..=l {
        for i in 1..=model.rank() {
            projection.push(model.monodromy().apply_word_power(&Word::generator(i), n)?);
        }
    }
    Ok(WindowMap {
        k,
        l,
        base_rank: model.rank(),
        surface,
        projection,
    })
}

/// Linear map induced on conjugacy classes by the window projection.
pub fn pushforward(wm: &WindowMap, c: &LinearCombination) -> Result<LinearCombination> {
    c.try_map_classes(|class| wm.project_class(class))
}

use crate::surface::{End, RibbonSurface};
use crate::words::{CyclicWord, Letter};
use crate::{Error, Result};

/// Purely periodic reduced edge path leaving the base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    period: Vec<Letter>,
}

impl Ray {
    /// The period must be nonempty and cyclically reduced.
    pub fn new(period: Vec<Letter>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = period.len();
        if (0..n).any(|i| period[i].is_inverse_of(period[(i + 1) % n])) {
            return Err(Error::Invalid("ray period is not cyclically reduced".into()));
        }
        Ok(Ray { period })
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    /// Letter at depth `k` (0-based).
    pub fn at(&self, k: usize) -> Letter {
        self.period[k % self.period.len()]
    }

    /// Length of the common prefix, or `None` if the rays are equal. Two
    /// periodic sequences agreeing on `|p1| + |p2|` letters agree forever.
    pub fn common_prefix(&self, other: &Ray) -> Option<usize> {
        let cap = self.period.len() + other.period.len();
        (0..cap).find(|&k| self.at(k) != other.at(k))
    }
}

/// Backward and forward rays of `w` at position `p`: the forward ray reads
/// `w` cyclically from `p`, the backward ray reads inverted letters from
/// `p - 1` downwards.
pub fn rays_at(w: &CyclicWord, p: usize) -> Result<(Ray, Ray)> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    if p >= n {
        return Err(Error::Invalid(format!("position {p} out of range for length {n}")));
    }
    let letters = w.letters();
    let forward: Vec<Letter> = (0..n).map(|k| letters[(p + k) % n]).collect();
    let backward: Vec<Letter> = (0..n)
        .map(|k| letters[(p + 2 * n - 1 - k) % n].inverse())
        .collect();
    Ok((Ray { period: backward }, Ray { period: forward }))
}

/// `+1` if the ends of the three rays occur counterclockwise in the order
/// `(r1, r2, r3)` on the boundary of the universal cover.
pub fn circular_order(r1: &Ray, r2: &Ray, r3: &Ray, surface: &RibbonSurface) -> Result<i8> {
    let (l12, l13, l23) = match (r1.common_prefix(r2), r1.common_prefix(r3), r2.common_prefix(r3)) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return Err(Error::CoincidentRays),
    };
    let dep = |r: &Ray, k: usize| End::departure(r.at(k));
    // Two rays running together stand on one side of the arrival end at the
    // vertex where they split; the third ray lies behind that end.
    let sign = if l12 > l13 {
        let arrival = End::arrival(r1.at(l12 - 1));
        surface.cyclic_sign(dep(r1, l12), dep(r2, l12), arrival)
    } else if l13 > l12 {
        let arrival = End::arrival(r1.at(l13 - 1));
        surface.cyclic_sign(dep(r1, l13), arrival, dep(r3, l13))
    } else if l23 > l12 {
        let arrival = End::arrival(r2.at(l23 - 1));
        surface.cyclic_sign(arrival, dep(r2, l23), dep(r3, l23))
    } else {
        surface.cyclic_sign(dep(r1, l12), dep(r2, l12), dep(r3, l12))
    };
    Ok(sign)
}

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::knots::FiberedKnotModel;
use crate::words::{Alphabet, CyclicWord};
use crate::{Error, Result};

/// Steps taken in each direction before the search gives up.
pub const MAX_ORBIT_STEPS: usize = 64;

/// Longest class examined before the search gives up.
const MAX_ORBIT_LENGTH: usize = 1 << 16;

/// Orbit of a class under `t`, stored as its least element (by length, then
/// lexicographically) over the searched segment `t^low(x) .. t^high(x)`.
///
/// Orbit classes compare by representative only.
#[derive(Clone, Debug)]
pub struct TOrbitClass {
    representative: CyclicWord,
    window: (i64, i64),
    periodic: bool,
}

impl TOrbitClass {
    pub fn representative(&self) -> &CyclicWord {
        &self.representative
    }

    /// Searched exponents, relative to the input class.
    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    /// Whether the whole (finite) orbit was seen.
    pub fn is_periodic(&self) -> bool {
        self.periodic
    }

    pub fn to_json(&self) -> Value {
        json!({
            "class": self.representative.display(Alphabet::Genus),
            "window": [self.window.0, self.window.1],
            "periodic": self.periodic,
        })
    }
}

impl PartialEq for TOrbitClass {
    fn eq(&self, other: &Self) -> bool {
        self.representative == other.representative
    }
}

impl Eq for TOrbitClass {}

impl PartialOrd for TOrbitClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TOrbitClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.representative.cmp(&other.representative)
    }
}

/// Canonical representative of the `t`-orbit of `x`.
///
/// Each direction is scanned until the orbit closes up or the class length
/// has strictly increased `search_bound` times in a row.
pub fn orbit_canonical(model: &FiberedKnotModel, x: &CyclicWord, search_bound: usize) -> Result<TOrbitClass> {
    if search_bound == 0 {
        return Err(Error::Invalid("search bound must be positive".into()));
    }
    let forward = model.monodromy().clone();
    let backward = forward.inverse();
    let mut best = x.clone();
    let mut window = (0i64, 0i64);
    for (step, sign) in [(&forward, 1i64), (&backward, -1i64)] {
        let mut current = x.clone();
        let mut rising = 0;
        for n in 1..=MAX_ORBIT_STEPS {
            let next = step.apply_class(&current)?;
            if next == *x {
                return Ok(TOrbitClass {
                    representative: best,
                    window: if sign > 0 { (0, n as i64 - 1) } else { (-(n as i64 - 1), window.1) },
                    periodic: true,
                });
            }
            rising = if next.len() > current.len() { rising + 1 } else { 0 };
            current = next;
            if current.shortlex_cmp(&best) == Ordering::Less {
                best = current.clone();
            }
            if sign > 0 {
                window.1 = n as i64;
            } else {
                window.0 = -(n as i64);
            }
            if rising >= search_bound {
                break;
            }
            if n == MAX_ORBIT_STEPS || current.len() > MAX_ORBIT_LENGTH {
                return Err(Error::OrbitNotCertified {
                    bound: search_bound,
                    best: best.display(Alphabet::Genus),
                    low: window.0,
                    high: window.1,
                });
            }
        }
    }
    Ok(TOrbitClass {
        representative: best,
        window,
        periodic: false,
    })
}

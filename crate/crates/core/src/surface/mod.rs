//! One-vertex ribbon graphs (roses) modelling `Σ_{g,1}`.
//!
//! Each generator `i` is a loop at the single vertex with an outgoing end
//! `+i` and an incoming end `-i`. The cyclic order of the `2·rank` ends around
//! the vertex (read counterclockwise) determines the fattened surface.
//! Traversing letter `x_i` leaves through `+i` and arrives through `-i`;
//! `X_i` leaves through `-i` and arrives through `+i`.
//!
//! Faces are traced by the rule: after arriving through an end, leave through
//! its successor in the vertex order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::words::{CyclicWord, Letter, Word};
use crate::{Error, Result};

/// A directed edge-end at the vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End(i64);

impl End {
    pub fn outgoing(generator: usize) -> Self {
        End(generator as i64)
    }

    pub fn incoming(generator: usize) -> Self {
        End(-(generator as i64))
    }

    pub fn generator(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_outgoing(self) -> bool {
        self.0 > 0
    }

    /// The other end of the same edge.
    #[must_use]
    pub fn reversal(self) -> Self {
        End(-self.0)
    }

    /// End through which `letter` leaves the vertex.
    pub fn departure(letter: Letter) -> Self {
        if letter.is_inverse() {
            End::incoming(letter.generator())
        } else {
            End::outgoing(letter.generator())
        }
    }

    /// End through which `letter` arrives back at the vertex.
    pub fn arrival(letter: Letter) -> Self {
        End::departure(letter).reversal()
    }

    /// Letter that leaves through this end.
    pub fn letter(self) -> Letter {
        Letter::new(self.generator(), !self.is_outgoing())
    }

    pub fn token(self) -> i64 {
        self.0
    }

    fn index(self, rank: usize) -> usize {
        // +i -> 2(i-1), -i -> 2(i-1)+1
        let g = self.generator();
        debug_assert!(g >= 1 && g <= rank);
        2 * (g - 1) + usize::from(!self.is_outgoing())
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.0)
    }
}

/// Ribbon structure of a one-vertex graph with exactly one boundary component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonSurface {
    rank: usize,
    order: Vec<End>,
    basepoint: usize,
    position: Vec<usize>,
    boundary: Word,
}

/// Serialized form: `{"rank": n, "order": [signed ends], "basepoint": k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceJson {
    pub rank: usize,
    pub order: Vec<i64>,
    pub basepoint: usize,
}

impl RibbonSurface {
    /// Validates the ribbon structure and traces its boundary.
    pub fn new(rank: usize, order: Vec<End>, basepoint: usize) -> Result<Self> {
        let position = end_positions(rank, &order)?;
        if !rank.is_multiple_of(2) {
            return Err(Error::InvalidSurface(format!(
                "rank {rank} is odd; a one-boundary surface has rank 2g"
            )));
        }
        if basepoint >= order.len() {
            return Err(Error::InvalidSurface(format!(
                "basepoint {basepoint} out of range"
            )));
        }
        let faces = trace_faces_with(rank, &order, &position);
        if faces.len() != 1 {
            return Err(Error::NotOneBoundary { faces: faces.len() });
        }
        let boundary = face_from(rank, &order, &position, order[basepoint]);
        Ok(RibbonSurface {
            rank,
            order,
            basepoint,
            position,
            boundary,
        })
    }

    /// The ribbon structure whose single face reads `boundary` from the
    /// basepoint. Every directed end must occur exactly once in `boundary`.
    pub fn from_boundary(rank: usize, boundary: &Word) -> Result<Self> {
        let letters = boundary.letters();
        if letters.len() != 2 * rank {
            return Err(Error::InvalidSurface(format!(
                "boundary of length {} cannot use all {} ends",
                letters.len(),
                2 * rank
            )));
        }
        boundary.check_rank(rank)?;
        // successor(arrival of letter k) = departure of letter k+1
        let mut successor = vec![None; 2 * rank];
        for (k, &l) in letters.iter().enumerate() {
            let next = End::departure(letters[(k + 1) % letters.len()]);
            let slot = &mut successor[End::arrival(l).index(rank)];
            if slot.is_some() {
                return Err(Error::InvalidSurface(
                    "boundary word traverses an end twice".into(),
                ));
            }
            *slot = Some(next);
        }
        let start = End::departure(letters[0]);
        let mut order = vec![start];
        let mut current = start;
        loop {
            let next = successor[current.index(rank)].expect("all ends assigned");
            if next == start {
                break;
            }
            if order.len() == 2 * rank {
                return Err(Error::InvalidSurface(
                    "boundary word does not induce a cyclic order".into(),
                ));
            }
            order.push(next);
            current = next;
        }
        if order.len() != 2 * rank {
            return Err(Error::InvalidSurface(
                "boundary word does not induce a single cyclic order".into(),
            ));
        }
        Self::new(rank, order, 0)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn genus(&self) -> usize {
        self.rank / 2
    }

    pub fn order(&self) -> &[End] {
        &self.order
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    /// Position of `end` in the vertex order.
    pub fn position_of(&self, end: End) -> usize {
        self.position[end.index(self.rank)]
    }

    /// The boundary read from the basepoint, as a based word.
    pub fn based_boundary(&self) -> &Word {
        &self.boundary
    }

    /// Boundary class (the longitude).
    pub fn boundary_word(&self) -> CyclicWord {
        CyclicWord::from_word(&self.boundary)
    }

    /// `+1` if the three distinct ends occur counterclockwise in this order.
    pub fn cyclic_sign(&self, e1: End, e2: End, e3: End) -> i8 {
        let n = self.order.len();
        let (p1, p2, p3) = (self.position_of(e1), self.position_of(e2), self.position_of(e3));
        debug_assert!(p1 != p2 && p2 != p3 && p1 != p3);
        if (p2 + n - p1) % n < (p3 + n - p1) % n {
            1
        } else {
            -1
        }
    }

    pub fn to_json(&self) -> SurfaceJson {
        SurfaceJson {
            rank: self.rank,
            order: self.order.iter().map(|e| e.token()).collect(),
            basepoint: self.basepoint,
        }
    }

    pub fn from_json(json: &SurfaceJson) -> Result<Self> {
        let order = json
            .order
            .iter()
            .map(|&t| {
                if t == 0 {
                    Err(Error::InvalidSurface("end token 0".into()))
                } else {
                    Ok(End(t))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.rank, order, json.basepoint)
    }
}

fn end_positions(rank: usize, order: &[End]) -> Result<Vec<usize>> {
    if rank == 0 {
        return Err(Error::InvalidSurface("rank must be positive".into()));
    }
    if order.len() != 2 * rank {
        return Err(Error::InvalidSurface(format!(
            "vertex order has {} ends, expected {}",
            order.len(),
            2 * rank
        )));
    }
    let mut position = vec![usize::MAX; 2 * rank];
    for (p, e) in order.iter().enumerate() {
        if e.generator() == 0 || e.generator() > rank {
            return Err(Error::InvalidSurface(format!("end {e} out of range")));
        }
        let slot = &mut position[e.index(rank)];
        if *slot != usize::MAX {
            return Err(Error::InvalidSurface(format!("end {e} repeated")));
        }
        *slot = p;
    }
    Ok(position)
}

fn face_from(rank: usize, order: &[End], position: &[usize], start: End) -> Word {
    let mut letters = Vec::new();
    let mut departure = start;
    loop {
        letters.push(departure.letter());
        let arrival = departure.reversal();
        departure = order[(position[arrival.index(rank)] + 1) % order.len()];
        if departure == start {
            break;
        }
    }
    Word::from_letters(letters)
}

fn trace_faces_with(rank: usize, order: &[End], position: &[usize]) -> Vec<Vec<Letter>> {
    let mut seen = vec![false; 2 * rank];
    let mut faces = Vec::new();
    for &start in order {
        if seen[start.index(rank)] {
            continue;
        }
        let mut face = Vec::new();
        let mut departure = start;
        while !seen[departure.index(rank)] {
            seen[departure.index(rank)] = true;
            face.push(departure.letter());
            let arrival = departure.reversal();
            departure = order[(position[arrival.index(rank)] + 1) % order.len()];
        }
        faces.push(face);
    }
    faces
}

/// All faces of an arbitrary one-vertex ribbon graph, each as the letter
/// sequence read along it. Every directed end is used by exactly one face.
pub fn trace_faces(rank: usize, order: &[End]) -> Result<Vec<Vec<Letter>>> {
    let position = end_positions(rank, order)?;
    Ok(trace_faces_with(rank, order, &position))
}

/// Boundary class of a candidate ribbon structure; errors unless there is
/// exactly one face.
pub fn boundary_word(rank: usize, order: &[End], basepoint: usize) -> Result<CyclicWord> {
    Ok(RibbonSurface::new(rank, order.to_vec(), basepoint)?.boundary_word())
}

/// Surface of genus `g` with boundary `[a1,b1]···[ag,bg]`.
pub fn standard_surface(genus: usize) -> Result<RibbonSurface> {
    if genus == 0 {
        return Err(Error::InvalidSurface(
            "genus 0 (the disk) has trivial fundamental group".into(),
        ));
    }
    let mut letters = Vec::with_capacity(4 * genus);
    for i in 0..genus {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        letters.extend([Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]);
    }
    RibbonSurface::from_boundary(2 * genus, &Word::from_letters(letters))
}

/// Boundary connected sum. Generators of `second` are shifted past those of
/// `first`; the boundary of the result reads `W1·W2` from its basepoint.
pub fn connected_sum(first: &RibbonSurface, second: &RibbonSurface) -> Result<RibbonSurface> {
    let shift = first.rank as i64;
    let cut = |s: &RibbonSurface| -> Vec<End> {
        s.order[s.basepoint..]
            .iter()
            .chain(&s.order[..s.basepoint])
            .copied()
            .collect()
    };
    let mut order = cut(first);
    order.extend(
        cut(second)
            .into_iter()
            .map(|e| End(e.0 + e.0.signum() * shift)),
    );
    RibbonSurface::new(first.rank + second.rank, order, 0)
}

/// Iterated connected sum of `copies` copies of `surface`.
pub fn connected_power(surface: &RibbonSurface, copies: usize) -> Result<RibbonSurface> {
    if copies == 0 {
        return Err(Error::InvalidSurface("at least one copy required".into()));
    }
    let mut out = surface.clone();
    for _ in 1..copies {
        out = connected_sum(&out, surface)?;
    }
    Ok(out)
}

use std::cmp::Ordering;

/// A generator or its inverse. Generator indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    generator: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        assert!(generator >= 1, "generator indices start at 1");
        Letter {
            generator: u32::try_from(generator).expect("generator index too large"),
            inverse,
        }
    }

    pub fn pos(generator: usize) -> Self {
        Self::new(generator, false)
    }

    pub fn neg(generator: usize) -> Self {
        Self::new(generator, true)
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }

    #[must_use]
    pub fn shifted(self, offset: usize) -> Self {
        Letter::new(self.generator() + offset, self.inverse)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.generator, self.inverse).cmp(&(other.generator, other.inverse))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_puts_generator_before_its_inverse() {
        let mut letters = vec![Letter::neg(2), Letter::pos(2), Letter::neg(1), Letter::pos(1)];
        letters.sort();
        assert_eq!(
            letters,
            vec![Letter::pos(1), Letter::neg(1), Letter::pos(2), Letter::neg(2)]
        );
    }

    #[test]
    fn inverse_is_involution() {
        let l = Letter::neg(5);
        assert_eq!(l.inverse().inverse(), l);
        assert!(l.is_inverse_of(Letter::pos(5)));
        assert!(!l.is_inverse_of(l));
    }
}

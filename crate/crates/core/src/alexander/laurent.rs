use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer Laurent polynomial in `t`, stored densely from its lowest
/// exponent. Both end coefficients are nonzero; the zero polynomial is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exponent: i64) -> Self {
        Self::from_coeffs(exponent, vec![coeff.into()])
    }

    /// `coeffs[k]` is the coefficient of `t^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Width `high - low` (0 for monomials); `None` for zero.
    pub fn span(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        let k = exponent - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `t^k`.
    #[must_use]
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPolynomial {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes `t ↦ t^-1`.
    #[must_use]
    pub fn reciprocal(&self) -> Self {
        match self.high_degree() {
            None => self.clone(),
            Some(high) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPolynomial { low: -high, coeffs }
            }
        }
    }

    #[must_use]
    pub fn scaled(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|c| c * k).collect())
    }

    #[must_use]
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Canonical associate: lowest exponent 0, positive leading coefficient.
    /// Two polynomials agree up to `±t^k` iff their normalizations are equal.
    #[must_use]
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = LaurentPolynomial {
            low: 0,
            coeffs: self.coeffs.clone(),
        };
        if out.coeffs.last().is_some_and(Signed::is_negative) {
            out = -out;
        }
        out
    }

    /// Equality up to units `±t^k` of `Z[t, t^-1]`.
    pub fn associates(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// `Some(q)` with `self = q * divisor` if the quotient is a Laurent
    /// polynomial with integer coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = poly_div_rem(&self.coeffs, &divisor.coeffs)?;
        if !r.iter().all(Zero::is_zero) {
            return None;
        }
        Some(Self::from_coeffs(self.low - divisor.low, q))
    }

    /// Gcd in `Z[t, t^-1]`, normalized. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let content = self.content().gcd(&other.content());
        let mut a = primitive(&self.coeffs);
        let mut b = primitive(&other.coeffs);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = if r.is_empty() { Vec::new() } else { primitive(&r) };
        }
        Self::from_coeffs(0, a.iter().map(|c| c * &content).collect()).normalized()
    }
}

fn strip_trailing(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if c.is_zero() {
        return Vec::new();
    }
    strip_trailing(v.iter().map(|x| x / &c).collect())
}

/// `lc(b)^k · a mod b` by repeated leading-term elimination (dense, low first).
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = strip_trailing(a.to_vec());
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (k, c) in b.iter().enumerate() {
            r[k + shift] -= &lr * c;
        }
        r = strip_trailing(r);
    }
    r
}

/// Exact long division over `Z`; `None` if a leading coefficient does not
/// divide.
fn poly_div_rem(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let mut r = strip_trailing(a.to_vec());
    let lb = b.last()?;
    if r.len() < b.len() {
        return Some((vec![BigInt::zero()], r));
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let lr = r.last().expect("nonempty");
        let (quot, rem) = lr.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - b.len();
        for (k, c) in b.iter().enumerate() {
            r[k + shift] -= &quot * c;
        }
        q[shift] = quot;
        r = strip_trailing(r);
    }
    Some((q, r))
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        let coeffs = (low..=high)
            .map(|e| self.coefficient(e) + rhs.coefficient(e))
            .collect();
        LaurentPolynomial::from_coeffs(low, coeffs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;

            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Descending exponents, e.g. `t^2-3t+1`, `2t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(i64, &BigInt)> = self.terms().collect();
        for (i, (e, c)) in terms.into_iter().rev().enumerate() {
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let magnitude = c.abs();
            if e == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            if e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Parses sums of terms `[±][digits][t[^[-]digits]]`; whitespace is ignored.
    fn from_str(text: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        if chars.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut out = LaurentPolynomial::zero();
        let mut i = 0;
        let at = |i: usize| chars.get(i).map(|&(_, c)| c);
        let pos = |i: usize| chars.get(i).map_or(text.len(), |&(p, _)| p);
        while i < chars.len() {
            let start = i;
            let mut negative = false;
            match at(i) {
                Some('+') => i += 1,
                Some('-') => {
                    negative = true;
                    i += 1;
                }
                _ if start != 0 => return Err(Error::parse(pos(i), "expected `+` or `-`")),
                _ => {}
            }
            let digits_start = i;
            while at(i).is_some_and(|c| c.is_ascii_digit()) {
                i += 1;
            }
            let digits: String = chars[digits_start..i].iter().map(|&(_, c)| c).collect();
            let mut exponent = 0i64;
            let has_t = at(i) == Some('t');
            if has_t {
                i += 1;
                exponent = 1;
                if at(i) == Some('^') {
                    i += 1;
                    let exp_start = i;
                    if at(i) == Some('-') {
                        i += 1;
                    }
                    while at(i).is_some_and(|c| c.is_ascii_digit()) {
                        i += 1;
                    }
                    let exp: String = chars[exp_start..i].iter().map(|&(_, c)| c).collect();
                    exponent = exp
                        .parse()
                        .map_err(|_| Error::parse(pos(exp_start), "malformed exponent"))?;
                }
            }
            if digits.is_empty() && !has_t {
                return Err(Error::parse(pos(digits_start), "expected a term"));
            }
            let mut coeff: BigInt = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse().expect("ascii digits")
            };
            if negative {
                coeff = -coeff;
            }
            out = &out + &LaurentPolynomial::monomial(coeff, exponent);
        }
        Ok(out)
    }
}

//! Laurent polynomials in `v` with exact `i64` coefficients.
//!
//! Terms are kept sorted by exponent with zero coefficients dropped, so the
//! derived `PartialEq` is mathematical equality. All arithmetic is checked;
//! the `checked_*` methods report overflow as [`Error::Overflow`] and the
//! operator impls panic on it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    /// `(exponent, coefficient)`, exponents strictly increasing, no zeros.
    terms: Vec<(i32, i64)>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `coeff * v^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            LaurentPolynomial {
                terms: vec![(exp, coeff)],
            }
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Result<Self> {
        let mut raw: Vec<(i32, i64)> = terms.into_iter().collect();
        raw.sort_by_key(|&(e, _)| e);
        let mut out: Vec<(i32, i64)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = lc.checked_add(c).ok_or(Error::Overflow)?,
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Ok(LaurentPolynomial { terms: out })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Coefficient of `v^k`.
    pub fn coefficient(&self, k: i32) -> i64 {
        self.terms
            .binary_search_by_key(&k, |&(e, _)| e)
            .map(|idx| self.terms[idx].1)
            .unwrap_or(0)
    }

    /// Value at `v = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> i128 {
        self.terms.iter().map(|&(_, c)| c as i128).sum()
    }

    /// Exponent negation `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|&(e, c)| e.checked_add(k).map(|e| (e, c)).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(LaurentPolynomial { terms })
    }

    pub fn checked_scale(&self, c: i64) -> Result<Self> {
        if c == 0 {
            return Ok(Self::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|&(e, a)| a.checked_mul(c).map(|x| (e, x)).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(LaurentPolynomial { terms })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.merge(other, 1)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.merge(other, -1)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        self.checked_scale(-1)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &other.terms {
                let e = ea.checked_add(eb).ok_or(Error::Overflow)?;
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                products.push((e, c));
            }
        }
        Self::from_terms(products)
    }

    /// `self += sign * other` on sorted term lists.
    fn merge(&self, other: &Self, sign: i64) -> Result<Self> {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i]);
                i += 1;
            } else if take_b {
                let c = b[j].1.checked_mul(sign).ok_or(Error::Overflow)?;
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = b[j]
                    .1
                    .checked_mul(sign)
                    .and_then(|c| a[i].1.checked_add(c))
                    .ok_or(Error::Overflow)?;
                if c != 0 {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(LaurentPolynomial { terms: out })
    }

    /// In-place `self += c * v^k * other`, the inner loop of the KL recursion.
    pub(crate) fn add_scaled_shifted(&mut self, other: &Self, c: i64, k: i32) -> Result<()> {
        if other.is_zero() || c == 0 {
            return Ok(());
        }
        let scaled = other.checked_scale(c)?.shift(k)?;
        *self = self.checked_add(&scaled)?;
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.$checked(rhs).expect("Laurent polynomial overflow")
            }
        }

        impl $trait for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.checked_neg().expect("Laurent polynomial overflow")
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Highest exponent first: `v^5 + v^3`, `-2v + 1`, `v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, &(e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "v")?,
                (1, m) => write!(f, "{m}v")?,
                (e, 1) => write!(f, "v^{e}")?,
                (e, m) => write!(f, "{m}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Parses sums of terms `c`, `v`, `cv^k`, `c*v^k`, `v^-k`, `v^(-k)`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = compact.as_bytes();
        // split at +/- that are not directly after '^' or '('
        let mut pieces: Vec<&str> = Vec::new();
        let mut start = 0;
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' && bytes[k - 1] != b'(' {
                pieces.push(&compact[start..k]);
                start = k;
            }
        }
        pieces.push(&compact[start..]);

        let mut terms = Vec::with_capacity(pieces.len());
        for piece in pieces {
            terms.push(parse_term(piece).ok_or_else(|| Error::Parse(format!("bad term {piece:?} in {s:?}")))?);
        }
        Self::from_terms(terms)
    }
}

fn parse_term(piece: &str) -> Option<(i32, i64)> {
    let (sign, body) = match piece.as_bytes().first()? {
        b'+' => (1, &piece[1..]),
        b'-' => (-1, &piece[1..]),
        _ => (1, piece),
    };
    if body.is_empty() {
        return None;
    }
    let (coeff_part, var_part) = match body.find('v') {
        Some(p) => (&body[..p], Some(&body[p + 1..])),
        None => (body, None),
    };
    let coeff_part = coeff_part.trim_end_matches('*');
    let coeff: i64 = if coeff_part.is_empty() {
        var_part?;
        1
    } else {
        coeff_part.parse().ok()?
    };
    let exp: i32 = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let rest = rest.strip_prefix('^')?;
            let rest = rest.trim_start_matches('(').trim_end_matches(')');
            rest.parse().ok()?
        }
    };
    Some((exp, coeff.checked_mul(sign)?))
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

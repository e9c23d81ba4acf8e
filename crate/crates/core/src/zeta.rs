//! Zeta functions written as finite products of `(1 - t^k)^e`.
//!
//! Every zeta function the engine produces lives in this multiplicative
//! group, so equality is equality of the canonical factor table. Two
//! different tables that happen to describe the same rational function
//! through cyclotomic identities are *not* identified.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::ParseError;

/// A product `∏_k (1 - t^k)^{e_k}` with integer exponents.
///
/// Keys are cycle lengths `k >= 1`; zero exponents are never stored, so the
/// empty table is the constant function 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycloProd {
    factors: BTreeMap<u64, i64>,
}

impl CycloProd {
    pub fn one() -> Self {
        Self::default()
    }

    /// The single factor `(1 - t^k)^e`.
    ///
    /// Panics if `k == 0`.
    pub fn factor(k: u64, e: i64) -> Self {
        assert!(k >= 1, "cycle length must be positive");
        let mut out = Self::one();
        out.add_exponent(k, e);
        out
    }

    /// `1 - t^k`.
    pub fn cyclic(k: u64) -> Self {
        Self::factor(k, 1)
    }

    pub fn from_pairs<I: IntoIterator<Item = (u64, i64)>>(pairs: I) -> Self {
        let mut out = Self::one();
        for (k, e) in pairs {
            assert!(k >= 1, "cycle length must be positive");
            out.add_exponent(k, e);
        }
        out
    }

    fn add_exponent(&mut self, k: u64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.factors.entry(k).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&k);
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of `(1 - t^k)`, zero when absent.
    pub fn exponent(&self, k: u64) -> i64 {
        self.factors.get(&k).copied().unwrap_or(0)
    }

    /// Factors in ascending order of `k`.
    pub fn factors(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&k, &e)| (k, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, e) in other.factors() {
            out.add_exponent(k, e);
        }
        out
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.pow(-1))
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut out = Self::one();
        for (k, x) in self.factors() {
            out.add_exponent(k, x * e);
        }
        out
    }

    /// `Σ k·e_k`: numerator degree minus denominator degree. For a monodromy
    /// zeta function this is the Euler characteristic of the fibre.
    pub fn degree(&self) -> i64 {
        self.factors().map(|(k, e)| k as i64 * e).sum()
    }

    /// Taylor coefficients at `t = 0` up to and including `t^order`.
    ///
    /// Each `(1 - t^k)^{-1}` has an integral geometric series, so the
    /// coefficients are always integers.
    pub fn expand_series(&self, order: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); order + 1];
        c[0] = BigInt::from(1);
        for (k, e) in self.factors() {
            let k = k as usize;
            if k > order {
                continue;
            }
            if e > 0 {
                for _ in 0..e {
                    for i in (k..=order).rev() {
                        let prev = c[i - k].clone();
                        c[i] -= prev;
                    }
                }
            } else {
                for _ in 0..(-e) {
                    for i in k..=order {
                        let prev = c[i - k].clone();
                        c[i] += prev;
                    }
                }
            }
        }
        c
    }
}

impl fmt::Display for CycloProd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, e) in self.factors() {
            if k == 1 {
                write!(f, "(1-t)")?;
            } else {
                write!(f, "(1-t^{k})")?;
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Canonical text form: ascending `k`, exponent 1 omitted, `1` for the
/// empty product.
pub fn format_zeta(z: &CycloProd) -> String {
    z.to_string()
}

pub fn parse_zeta(s: &str) -> Result<CycloProd, ParseError> {
    ZetaParser { src: s.as_bytes(), pos: 0 }.parse()
}

impl FromStr for CycloProd {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_zeta(s)
    }
}

struct ZetaParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ZetaParser<'_> {
    fn parse(mut self) -> Result<CycloProd, ParseError> {
        let mut out = CycloProd::one();
        let mut atoms = 0usize;
        loop {
            self.skip_ws();
            if self.pos >= self.src.len() {
                break;
            }
            if atoms > 0 && self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            }
            let (k, mut e) = self.atom()?;
            while self.peek() == Some(b'^') {
                self.pos += 1;
                e *= self.signed_int()?;
            }
            if let Some(k) = k {
                out.add_exponent(k, e);
            }
            atoms += 1;
        }
        if atoms == 0 {
            return Err(ParseError::new(self.pos, "expected a zeta factor"));
        }
        Ok(out)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), ParseError> {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(ParseError::new(self.pos, format!("expected `{lit}`")))
        }
    }

    /// Returns `None` for the constant atom `1`.
    fn atom(&mut self) -> Result<(Option<u64>, i64), ParseError> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok((None, 1))
            }
            Some(b'(') => {
                self.expect("(1-t")?;
                let k = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let start = self.pos;
                    let k = self.unsigned_int()?;
                    if k == 0 {
                        return Err(ParseError::new(start, "cycle length must be positive"));
                    }
                    k
                } else {
                    1
                };
                self.expect(")")?;
                Ok((Some(k), 1))
            }
            _ => Err(ParseError::new(self.pos, "expected `1` or `(1-t...)`")),
        }
    }

    fn unsigned_int(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected a decimal integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::new(start, "integer out of range"))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let v = self.unsigned_int()?;
        let v = i64::try_from(v).map_err(|_| ParseError::new(start, "integer out of range"))?;
        Ok(if negative { -v } else { v })
    }
}

//! Exact sparse multivariate polynomials over the rationals.
//!
//! Variables are addressed by 0-based index. After [`Poly::homogenize`] the
//! new homogenizing variable sits at index 0 and the old variables shift up by
//! one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ParseError, PolyError};

/// Monomial exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

pub type Support = BTreeSet<Exponent>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Exponent::zero(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// `c · x^e`.
    pub fn monomial(exp: impl Into<Exponent>, c: BigRational) -> Self {
        let exp = exp.into();
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// Sum of the given monomials, all with coefficient 1.
    pub fn from_support<'a, I: IntoIterator<Item = &'a Exponent>>(nvars: usize, support: I) -> Self {
        let mut p = Self::zero(nvars);
        for e in support {
            assert_eq!(e.len(), nvars);
            p.add_term(e.clone(), BigRational::one());
        }
        p
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    fn add_term(&mut self, exp: Exponent, c: BigRational) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &Exponent) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Exponent::zero(self.nvars))
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::total).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Exponent::total);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn support(&self) -> Support {
        self.terms.keys().cloned().collect()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, x) in self.terms() {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e: Vec<u32> = ea.0.iter().zip(&eb.0).map(|(a, b)| a + b).collect();
                out.add_term(Exponent(e), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Keeps the monomials whose exponent vanishes outside `subset`; every
    /// other variable is set to zero. The variable count is unchanged.
    pub fn restrict_to_subset(&self, subset: &[usize]) -> Poly {
        let keep = |e: &Exponent| {
            e.0.iter()
                .enumerate()
                .all(|(j, &x)| x == 0 || subset.contains(&j))
        };
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets `x_j = 0` and removes the coordinate.
    pub fn set_var_zero(&self, j: usize) -> Result<Poly, PolyError> {
        self.check_index(j)?;
        let mut out = Poly::zero(self.nvars - 1);
        for (e, c) in self.terms() {
            if e.0[j] == 0 {
                out.add_term(remove_coord(e, j), c.clone());
            }
        }
        Ok(out)
    }

    /// `x_0^d · p(x_1/x_0, …, x_n/x_0)` with the new variable first.
    pub fn homogenize(&self, d: u32) -> Result<Poly, PolyError> {
        let degree = self.total_degree().unwrap_or(0);
        if d < degree {
            return Err(PolyError::DegreeTooSmall { d, degree });
        }
        let mut out = Poly::zero(self.nvars + 1);
        for (e, c) in self.terms() {
            let mut v = Vec::with_capacity(self.nvars + 1);
            v.push(d - e.total());
            v.extend_from_slice(&e.0);
            out.add_term(Exponent(v), c.clone());
        }
        Ok(out)
    }

    /// Affine chart `x_i = 1` of a homogeneous polynomial; coordinate `i` is removed.
    pub fn chart(&self, i: usize) -> Result<Poly, PolyError> {
        self.check_index(i)?;
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let mut out = Poly::zero(self.nvars - 1);
        for (e, c) in self.terms() {
            out.add_term(remove_coord(e, i), c.clone());
        }
        Ok(out)
    }

    /// `p(x + c)`, expanded exactly.
    pub fn translate(&self, point: &[BigRational]) -> Result<Poly, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength { got: point.len(), expected: self.nvars });
        }
        let shifted: Vec<Poly> = (0..self.nvars)
            .map(|i| Poly::var(self.nvars, i).add(&Poly::constant(self.nvars, point[i].clone())))
            .collect();
        let mut out = Poly::zero(self.nvars);
        for (e, c) in self.terms() {
            let mut term = Poly::constant(self.nvars, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&shifted[i].pow(k));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Inserts a new variable (with exponent 0 everywhere) at position `at`.
    pub fn insert_var(&self, at: usize) -> Poly {
        assert!(at <= self.nvars);
        let mut out = Poly::zero(self.nvars + 1);
        for (e, c) in self.terms() {
            let mut v = e.0.clone();
            v.insert(at, 0);
            out.add_term(Exponent(v), c.clone());
        }
        out
    }

    fn check_index(&self, j: usize) -> Result<(), PolyError> {
        if j >= self.nvars {
            Err(PolyError::VariableOutOfRange { index: j, nvars: self.nvars })
        } else {
            Ok(())
        }
    }
}

fn remove_coord(e: &Exponent, j: usize) -> Exponent {
    let mut v = e.0.clone();
    v.remove(j);
    Exponent(v)
}

/// An ordered pair `(f, g)` standing for the germ family `f + σ·g` at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermFamily {
    pub f: Poly,
    pub g: Poly,
}

impl GermFamily {
    pub fn new(f: Poly, g: Poly) -> Result<Self, PolyError> {
        if f.nvars() != g.nvars() {
            return Err(PolyError::NvarsMismatch(f.nvars(), g.nvars()));
        }
        Ok(Self { f, g })
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    pub fn set_var_zero(&self, j: usize) -> Result<Self, PolyError> {
        Ok(Self { f: self.f.set_var_zero(j)?, g: self.g.set_var_zero(j)? })
    }

    pub fn translate(&self, point: &[BigRational]) -> Result<Self, PolyError> {
        Ok(Self { f: self.f.translate(point)?, g: self.g.translate(point)? })
    }
}

// ---------------------------------------------------------------------------
// text form

/// Formats with the given variable names.
pub fn format_poly(p: &Poly, vars: &[&str]) -> String {
    assert_eq!(vars.len(), p.nvars());
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, (e, c)) in p.terms.iter().rev().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        match (n, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono: Vec<String> = e
            .0
            .iter()
            .zip(vars)
            .filter(|(&k, _)| k > 0)
            .map(|(&k, v)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
            .collect();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&format_poly(self, &refs))
    }
}

/// Parses `s` over the declared variables.
///
/// Terms are separated by `+`/`-`; a term is an optional rational
/// coefficient (`3`, `-2/5`), an optional `*`, and a monomial such as
/// `x^2*y` or `x^2 y`.
pub fn parse_poly(s: &str, vars: &[&str]) -> Result<Poly, PolyError> {
    PolyParser { src: s.as_bytes(), pos: 0, vars }.parse()
}

/// Variable names in order of first appearance in `s`.
pub fn scan_variables(s: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() || bytes[i] == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &s[start..i];
            if !out.iter().any(|v| v == name) {
                out.push(name.to_string());
            }
        } else {
            i += 1;
        }
    }
    out
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl PolyParser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse(ParseError::new(self.pos, msg))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse(mut self) -> Result<Poly, PolyError> {
        let n = self.vars.len();
        let mut out = Poly::zero(n);
        self.skip_ws();
        let mut negative = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negative = c == b'-';
            self.pos += 1;
        }
        loop {
            self.skip_ws();
            let (e, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(e, c);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(c @ (b'+' | b'-')) => {
                    negative = c == b'-';
                    self.pos += 1;
                }
                Some(_) => return Err(self.err("expected `+`, `-` or end of input")),
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Exponent, BigRational), PolyError> {
        let mut coeff = BigRational::one();
        let mut need_monomial = false;
        let has_coeff = matches!(self.peek(), Some(c) if c.is_ascii_digit());
        if has_coeff {
            coeff = self.rational()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                need_monomial = true;
            }
        }
        let mut exp = vec![0u32; self.vars.len()];
        let mut factors = 0;
        loop {
            if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_') {
                break;
            }
            let start = self.pos;
            let name = self.ident().to_string();
            let idx = self
                .vars
                .iter()
                .position(|v| *v == name)
                .ok_or(PolyError::UnknownVariable { name: name.clone(), pos: start })?;
            let mut k = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                k = self.positive_int()?;
            }
            exp[idx] += k;
            factors += 1;
            // optional `*` or whitespace before the next factor
            let save = self.pos;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_') {
                    return Err(self.err("expected a variable after `*`"));
                }
            } else if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_') {
                self.pos = save;
            }
        }
        if factors == 0 && (need_monomial || !has_coeff) {
            return Err(self.err("expected a coefficient or a monomial"));
        }
        Ok((Exponent(exp), coeff))
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a decimal integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn rational(&mut self) -> Result<BigRational, PolyError> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(PolyError::Parse(ParseError::new(at, "zero denominator")));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn positive_int(&mut self) -> Result<u32, PolyError> {
        let at = self.pos;
        let v = self.digits()?;
        match u32::try_from(v) {
            Ok(k) if k > 0 => Ok(k),
            _ => Err(PolyError::Parse(ParseError::new(at, "exponent must be a positive integer"))),
        }
    }
}

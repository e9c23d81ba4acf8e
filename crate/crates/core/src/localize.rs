//! Integration with respect to the Euler characteristic.
//!
//! A stratification is supplied as data: each stratum carries its Euler
//! characteristic and the common local zeta function of its points. Nothing
//! here checks that the strata really partition the space.

use std::fmt;
use std::str::FromStr;

use crate::error::StrataError;
use crate::zeta::{parse_zeta, CycloProd};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub label: String,
    pub chi: i64,
    pub zeta: CycloProd,
}

impl Stratum {
    pub fn new(label: impl Into<String>, chi: i64, zeta: CycloProd) -> Self {
        Self { label: label.into(), chi, zeta }
    }
}

/// Strata of `{P_0 = 0}` in affine space (local family zetas) and of its
/// closure on the hyperplane at infinity (boundary quotients `ζ̂`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StratifiedProblem {
    pub affine: Vec<Stratum>,
    pub infinity: Vec<Stratum>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalZeta {
    pub zeta: CycloProd,
    /// Euler characteristic of the generic fibre, `zeta.degree()`.
    pub chi: i64,
}

/// `∏_Ξ ζ_Ξ^{χ(Ξ)}`.
pub fn integrate(strata: &[Stratum]) -> CycloProd {
    strata
        .iter()
        .fold(CycloProd::one(), |acc, s| acc.mul(&s.zeta.pow(s.chi)))
}

/// Product of the affine integral and the integral over infinity.
pub fn assemble_global(problem: &StratifiedProblem) -> GlobalZeta {
    let zeta = integrate(&problem.affine).mul(&integrate(&problem.infinity));
    GlobalZeta { chi: zeta.degree(), zeta }
}

pub fn chi_projective_space(m: u32) -> i64 {
    m as i64 + 1
}

/// χ of a smooth degree-`d` hypersurface in `CP^m`: `m + 1 + ((1-d)^{m+1} - 1)/d`.
pub fn chi_smooth_hypersurface(d: u32, m: u32) -> i64 {
    assert!(d >= 1);
    let d = d as i128;
    let x = m as i128 + 1 + ((1 - d).pow(m + 1) - 1) / d;
    x as i64
}

/// χ of a smooth complete intersection of degrees `d1`, `d2` in `CP^m`,
/// as `d1·d2` times the coefficient of `h^{m-2}` in
/// `(1+h)^{m+1} / ((1+d1·h)(1+d2·h))`.
pub fn chi_complete_intersection(d1: u32, d2: u32, m: u32) -> i64 {
    if m < 2 {
        return 0;
    }
    let top = (m - 2) as usize;
    // series of (1+h)^{m+1}
    let mut series: Vec<i128> = (0..=top).map(|i| binomial(m as i128 + 1, i as i128)).collect();
    for d in [d1 as i128, d2 as i128] {
        // divide by (1 + d·h)
        for i in 1..=top {
            series[i] -= d * series[i - 1];
        }
    }
    (d1 as i128 * d2 as i128 * series[top]) as i64
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// χ of `CP^m` minus two transversal smooth hypersurfaces of degrees `d1`, `d2`,
/// by inclusion–exclusion.
pub fn chi_transversal_complement(d1: u32, d2: u32, m: u32) -> i64 {
    chi_projective_space(m) - chi_smooth_hypersurface(d1, m) - chi_smooth_hypersurface(d2, m)
        + chi_complete_intersection(d1, d2, m)
}

// ---------------------------------------------------------------------------
// strata files

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "stratum {} chi={} zeta={}", self.label, self.chi, self.zeta)
    }
}

impl fmt::Display for StratifiedProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "affine:")?;
        for s in &self.affine {
            writeln!(f, "{s}")?;
        }
        writeln!(f, "infinity:")?;
        for s in &self.infinity {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for StratifiedProblem {
    type Err = StrataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_strata(s)
    }
}

/// Parses the line-oriented strata format:
///
/// ```text
/// affine:
/// stratum origin chi=1 zeta=(1-t)
/// infinity:
/// stratum point chi=1 zeta=(1-t^4)^2(1-t^2)^-1
/// ```
///
/// Stratum lines before any section header belong to `affine`.
pub fn parse_strata(s: &str) -> Result<StratifiedProblem, StrataError> {
    let mut problem = StratifiedProblem::default();
    let mut at_infinity = false;
    for (i, raw) in s.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line {
            "affine:" => {
                at_infinity = false;
                continue;
            }
            "infinity:" => {
                at_infinity = true;
                continue;
            }
            _ => {}
        }
        let stratum = parse_stratum_line(line, line_no)?;
        let list = if at_infinity { &mut problem.infinity } else { &mut problem.affine };
        if list.iter().any(|s| s.label == stratum.label) {
            return Err(StrataError::DuplicateLabel { line: line_no, label: stratum.label });
        }
        list.push(stratum);
    }
    Ok(problem)
}

fn parse_stratum_line(line: &str, line_no: usize) -> Result<Stratum, StrataError> {
    let syntax = |msg: &str| StrataError::Syntax { line: line_no, msg: msg.to_string() };
    let rest = line
        .strip_prefix("stratum")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| syntax("expected `stratum <label> chi=<integer> zeta=<zeta>`"))?
        .trim_start();
    let (label, rest) = rest.split_once(char::is_whitespace).ok_or_else(|| syntax("missing chi="))?;
    let rest = rest.trim_start();
    let (chi, rest) = rest.split_once(char::is_whitespace).ok_or_else(|| syntax("missing zeta="))?;
    let chi = chi
        .strip_prefix("chi=")
        .ok_or_else(|| syntax("expected chi=<integer>"))?
        .parse::<i64>()
        .map_err(|_| syntax("chi must be an integer"))?;
    let zeta_text = rest
        .trim_start()
        .strip_prefix("zeta=")
        .ok_or_else(|| syntax("expected zeta=<zeta>"))?;
    let zeta = parse_zeta(zeta_text).map_err(|source| StrataError::Zeta { line: line_no, source })?;
    Ok(Stratum::new(label, chi, zeta))
}

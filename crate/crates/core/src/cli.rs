//! Text-level commands behind the `monozeta` binary.
//!
//! Every command returns the exact bytes for standard output plus any
//! diagnostics, so the binary is a thin shell around this module.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::{FixtureError, GermError, PolyError, StrataError};
use crate::fixtures;
use crate::germ::{family_zeta_at_point, fragility_warnings, hat_family_zeta, milnor_zeta};
use crate::localize::{
    assemble_global, chi_complete_intersection, chi_projective_space, chi_smooth_hypersurface,
    chi_transversal_complement, parse_strata,
};
use crate::poly::{parse_poly, scan_variables, GermFamily, Poly};
use crate::zeta::CycloProd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Malformed input: exit code 2.
    #[error("{0}")]
    Input(String),
    /// Well-formed input outside the supported domain: exit code 3.
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Parse(_) | PolyError::UnknownVariable { .. } => CliError::Input(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<GermError> for CliError {
    fn from(e: GermError) -> Self {
        match e {
            GermError::Poly(p) => p.into(),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<StrataError> for CliError {
    fn from(e: StrataError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<FixtureError> for CliError {
    fn from(e: FixtureError) -> Self {
        match e {
            FixtureError::Germ(g) => g.into(),
            FixtureError::Poly(p) => p.into(),
            FixtureError::Unsupported(_) => CliError::Precondition(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl Output {
    fn new(stdout: String) -> Self {
        Self { stdout, warnings: Vec::new() }
    }
}

/// `<zeta>  chi=<degree>`.
pub fn result_line(z: &CycloProd) -> String {
    format!("{z}  chi={}", z.degree())
}

/// Power series of `z` through `t^order`, e.g. `series: 1 - t^2 + O(t^4)`.
pub fn series_line(z: &CycloProd, order: usize) -> String {
    let mut out = String::from("series: ");
    let mut first = true;
    for (i, c) in z.expand_series(order).into_iter().enumerate() {
        if c == 0.into() {
            continue;
        }
        let negative = c < 0.into();
        let abs = if negative { -c } else { c };
        if first {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        first = false;
        let unit = abs == 1.into();
        match i {
            0 => write!(out, "{abs}").unwrap(),
            _ => {
                if !unit {
                    write!(out, "{abs}*").unwrap();
                }
                out.push('t');
                if i > 1 {
                    write!(out, "^{i}").unwrap();
                }
            }
        }
    }
    if first {
        out.push('0');
    }
    write!(out, " + O(t^{})", order + 1).unwrap();
    out
}

fn with_series(mut text: String, z: &CycloProd, series: Option<usize>) -> String {
    if let Some(n) = series {
        text.push('\n');
        text.push_str(&series_line(z, n));
    }
    text
}

/// Splits a `--vars` value on commas and whitespace.
pub fn split_vars(s: &str) -> Vec<String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|v| !v.is_empty())
        .map(str::to_string)
        .collect()
}

/// Milnor-fibre zeta of a single germ. Without explicit variables they are
/// taken from the expression in order of first appearance.
pub fn germ_command(expr: &str, vars: Option<&[String]>, series: Option<usize>) -> Result<Output, CliError> {
    let names: Vec<String> = match vars {
        Some(v) => v.to_vec(),
        None => scan_variables(expr),
    };
    if names.is_empty() {
        return Err(CliError::Precondition("germ has no variables".into()));
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let f = parse_poly(expr, &refs)?;
    let z = milnor_zeta(&f)?;
    Ok(Output::new(with_series(result_line(&z), &z, series)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFile {
    pub vars: Vec<String>,
    pub f: Poly,
    pub g: Poly,
    pub degree: Option<u32>,
}

impl FamilyFile {
    pub fn family(&self) -> Result<GermFamily, CliError> {
        Ok(GermFamily::new(self.f.clone(), self.g.clone())?)
    }
}

/// Reads `vars ...`, `f = ...`, `g = ...` and an optional `degree = d`.
/// Blank lines and `#` comments are skipped.
pub fn parse_family_file(text: &str) -> Result<FamilyFile, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, msg: &str| CliError::Input(format!("line {line}: {msg}"));

    let (ln, first) = lines.next().ok_or_else(|| bad(1, "expected `vars` line"))?;
    let vars: Vec<String> = match first.strip_prefix("vars") {
        Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => split_vars(rest),
        _ => return Err(bad(ln, "expected `vars` line")),
    };
    if vars.is_empty() {
        return Err(bad(ln, "no variables declared"));
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(bad(ln, &format!("variable `{v}` declared twice")));
        }
    }
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();

    let mut assignment = |key: &str| -> Result<(usize, String), CliError> {
        let (ln, line) = lines.next().ok_or_else(|| CliError::Input(format!("missing `{key} =` line")))?;
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| bad(ln, &format!("expected `{key} = ...`")))?;
        if lhs.trim() != key {
            return Err(bad(ln, &format!("expected `{key} = ...`")));
        }
        Ok((ln, rhs.trim().to_string()))
    };
    let (lf, fs) = assignment("f")?;
    let f = parse_poly(&fs, &refs).map_err(|e| bad(lf, &e.to_string()))?;
    let (lg, gs) = assignment("g")?;
    let g = parse_poly(&gs, &refs).map_err(|e| bad(lg, &e.to_string()))?;

    let degree = match lines.next() {
        None => None,
        Some((ln, line)) => {
            let rhs = line
                .split_once('=')
                .filter(|(lhs, _)| lhs.trim() == "degree")
                .map(|(_, rhs)| rhs.trim())
                .ok_or_else(|| bad(ln, "expected `degree = <d>`"))?;
            let d: u32 = rhs.parse().map_err(|_| bad(ln, "degree must be a nonnegative integer"))?;
            let top = f.total_degree().unwrap_or(0).max(g.total_degree().unwrap_or(0));
            if d < top {
                return Err(CliError::Precondition(format!(
                    "line {ln}: degree {d} is below the degree {top} of the family"
                )));
            }
            Some(d)
        }
    };
    if let Some((ln, _)) = lines.next() {
        return Err(bad(ln, "unexpected trailing line"));
    }
    Ok(FamilyFile { vars, f, g, degree })
}

/// Local zeta of the family at the origin, or its boundary quotient with `hat`.
pub fn family_command(text: &str, hat: Option<&str>, series: Option<usize>) -> Result<Output, CliError> {
    let file = parse_family_file(text)?;
    let fam = file.family()?;
    let res = match hat {
        None => family_zeta_at_point(&fam)?,
        Some(name) => {
            let j = file
                .vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| CliError::Input(format!("unknown variable `{name}` for --hat")))?;
            hat_family_zeta(&fam, j)?
        }
    };
    let refs: Vec<&str> = file.vars.iter().map(String::as_str).collect();
    let line = format!("{}  case={}", result_line(&res.zeta), res.case_tag);
    Ok(Output {
        stdout: with_series(line, &res.zeta, series),
        warnings: fragility_warnings(&fam, &refs),
    })
}

/// Assembles a strata file.
pub fn integrate_command(text: &str, series: Option<usize>) -> Result<Output, CliError> {
    let problem = parse_strata(text)?;
    let global = assemble_global(&problem);
    Ok(Output::new(with_series(result_line(&global.zeta), &global.zeta, series)))
}

/// Full report of one of the built-in examples.
pub fn example_command(
    id: u32,
    d0: Option<u32>,
    d: Option<u32>,
    n: Option<u32>,
    series: Option<usize>,
) -> Result<Output, CliError> {
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| CliError::Input(format!("example {id} needs --{flag}")));
    let report = match id {
        1 => fixtures::example1(need(d0, "d0")?, need(d, "d")?)?,
        2 => fixtures::example2()?,
        3 => fixtures::example3(need(n, "n")?, need(d0, "d0")?, need(d, "d")?)?,
        4 => fixtures::example4(need(n, "n")?, need(d0, "d0")?, need(d, "d")?)?,
        _ => return Err(CliError::Precondition(format!("no example {id}; choose 1 to 4"))),
    };
    let z = report.global.zeta.clone();
    Ok(Output::new(with_series(report.to_string(), &z, series)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiQuery {
    Projective { m: u32 },
    Hypersurface { d: u32, m: u32 },
    Intersection { d1: u32, d2: u32, m: u32 },
    Complement { d1: u32, d2: u32, m: u32 },
}

pub fn chi_command(q: ChiQuery) -> Result<Output, CliError> {
    let positive = |name: &str, v: u32| {
        if v == 0 {
            Err(CliError::Precondition(format!("{name} must be positive")))
        } else {
            Ok(())
        }
    };
    let chi = match q {
        ChiQuery::Projective { m } => chi_projective_space(m),
        ChiQuery::Hypersurface { d, m } => {
            positive("d", d)?;
            positive("m", m)?;
            chi_smooth_hypersurface(d, m)
        }
        ChiQuery::Intersection { d1, d2, m } => {
            positive("d1", d1)?;
            positive("d2", d2)?;
            if m < 2 {
                return Err(CliError::Precondition("a complete intersection needs m >= 2".into()));
            }
            chi_complete_intersection(d1, d2, m)
        }
        ChiQuery::Complement { d1, d2, m } => {
            positive("d1", d1)?;
            positive("d2", d2)?;
            positive("m", m)?;
            chi_transversal_complement(d1, d2, m)
        }
    };
    Ok(Output::new(format!("chi={chi}")))
}

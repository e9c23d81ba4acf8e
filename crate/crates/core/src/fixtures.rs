//! Worked stratifications for four model families.
//!
//! 1. `x^{d0} + σ(x^d + y^d)` in two variables.
//! 2. `x1^4 + x2^3 + x3^2 + σ·x2^4`.
//! 3. `f_{d0} + σ·g_d` with generic homogeneous forms.
//! 4. `f_{d0} + σ·ℓ^d` with a generic form and a generic linear function.
//!
//! Local zetas at rational points come from charts of the homogenized
//! family. Where a stratum has no rational point, or where only genericity
//! is known, the germ pair is written down directly in local coordinates
//! (`x0` is always the equation of the hyperplane at infinity). Generic forms
//! are realized by their full simplex supports with unit coefficients; the
//! formulas only see supports.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::FixtureError;
use crate::germ::{family_zeta_at_point, hat_family_zeta, LocalZetaResult};
use crate::localize::{
    assemble_global, chi_complete_intersection, chi_projective_space, chi_smooth_hypersurface,
    chi_transversal_complement, GlobalZeta, StratifiedProblem, Stratum,
};
use crate::poly::{format_poly, Exponent, GermFamily, Poly};

const MAX_VARS: u32 = 4;
const MAX_DEGREE: u32 = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumReport {
    pub stratum: Stratum,
    /// Human-readable description of the germ the local zeta came from.
    pub germ: String,
    pub local: LocalZetaResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleReport {
    pub title: String,
    pub affine: Vec<StratumReport>,
    pub infinity: Vec<StratumReport>,
    pub global: GlobalZeta,
}

impl ExampleReport {
    fn assemble(title: String, affine: Vec<StratumReport>, infinity: Vec<StratumReport>) -> Self {
        let problem = StratifiedProblem {
            affine: affine.iter().map(|r| r.stratum.clone()).collect(),
            infinity: infinity.iter().map(|r| r.stratum.clone()).collect(),
        };
        let global = assemble_global(&problem);
        Self { title, affine, infinity, global }
    }

    pub fn problem(&self) -> StratifiedProblem {
        StratifiedProblem {
            affine: self.affine.iter().map(|r| r.stratum.clone()).collect(),
            infinity: self.infinity.iter().map(|r| r.stratum.clone()).collect(),
        }
    }

    /// Looks a stratum up by label in either section.
    pub fn stratum(&self, label: &str) -> Option<&StratumReport> {
        self.affine.iter().chain(&self.infinity).find(|r| r.stratum.label == label)
    }
}

/// Strata-file text with the germs as comments; the last line is the
/// assembled zeta function.
impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for (header, section) in [("affine:", &self.affine), ("infinity:", &self.infinity)] {
            writeln!(f, "{header}")?;
            for r in section {
                writeln!(f, "# {}: {} [{}]", r.stratum.label, r.germ, r.local.case_tag)?;
                writeln!(f, "{}", r.stratum)?;
            }
        }
        write!(f, "{}  chi={}", self.global.zeta, self.global.chi)
    }
}

fn describe(fam: &GermFamily, vars: &[&str]) -> String {
    format!("f = {}; g = {}", format_poly(&fam.f, vars), format_poly(&fam.g, vars))
}

fn affine_stratum(label: &str, chi: i64, fam: GermFamily, vars: &[&str]) -> Result<StratumReport, FixtureError> {
    let local = family_zeta_at_point(&fam)?;
    Ok(StratumReport {
        stratum: Stratum::new(label, chi, local.zeta.clone()),
        germ: describe(&fam, vars),
        local,
    })
}

/// Stratum at infinity; variable 0 of the germ is the hyperplane at infinity.
fn infinity_stratum(label: &str, chi: i64, fam: GermFamily, vars: &[&str]) -> Result<StratumReport, FixtureError> {
    let local = hat_family_zeta(&fam, 0)?;
    Ok(StratumReport {
        stratum: Stratum::new(label, chi, local.zeta.clone()),
        germ: format!("{}; boundary {}", describe(&fam, vars), vars[0]),
        local,
    })
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `x^e` for the listed `(variable, exponent)` pairs.
fn mono(nvars: usize, powers: &[(usize, u32)]) -> Poly {
    let mut e = vec![0u32; nvars];
    for &(j, k) in powers {
        e[j] += k;
    }
    Poly::monomial(Exponent(e), BigRational::one())
}

/// Sum of all monomials of degree `d` in `nvars` variables.
pub fn full_simplex(nvars: usize, d: u32) -> Poly {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Poly) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            *out = out.add(&Poly::monomial(Exponent(prefix.clone()), BigRational::one()));
            prefix.pop();
            return;
        }
        for x in 0..=left {
            prefix.push(x);
            rec(nvars, left - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Poly::zero(nvars);
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

fn check_degree(name: &str, d: u32) -> Result<(), FixtureError> {
    if d == 0 || d > MAX_DEGREE {
        return Err(FixtureError::Unsupported(format!("{name} must be between 1 and {MAX_DEGREE}")));
    }
    Ok(())
}

fn check_vars(n: u32) -> Result<(), FixtureError> {
    if !(2..=MAX_VARS).contains(&n) {
        return Err(FixtureError::Unsupported(format!("n must be between 2 and {MAX_VARS}")));
    }
    Ok(())
}

/// `P_σ = x^{d0} + σ(x^d + y^d)`.
pub fn example1(d0: u32, d: u32) -> Result<ExampleReport, FixtureError> {
    check_degree("d0", d0)?;
    check_degree("d", d)?;
    let xy = ["x", "y"];
    let f = mono(2, &[(0, d0)]);
    let g = mono(2, &[(0, d)]).add(&mono(2, &[(1, d)]));
    let top = d0.max(d);

    let affine = vec![
        affine_stratum("origin", 1, GermFamily::new(f.clone(), g.clone())?, &xy)?,
        // the affine line {x = 0} minus the origin, seen at (0, 1)
        affine_stratum(
            "line-minus-origin",
            0,
            GermFamily::new(f.clone(), g.clone())?.translate(&[int(0), int(1)])?,
            &xy,
        )?,
    ];

    let (fh, gh) = (f.homogenize(top)?, g.homogenize(top)?);
    let chart = |i: usize| -> Result<GermFamily, FixtureError> {
        Ok(GermFamily::new(fh.chart(i)?, gh.chart(i)?)?)
    };
    let mut infinity = vec![infinity_stratum("point-0:0:1", 1, chart(2)?, &["x0", "x"])?];
    if d0 < d {
        let k = d - d0;
        // At the d points x^d + y^d = 0 of the line at infinity, x ≠ 0 and
        // x^d + y^d is a local coordinate u, so the pair is (x0^k, u).
        let recentred = GermFamily::new(mono(2, &[(0, k)]), mono(2, &[(1, 1)]))?;
        infinity.push(infinity_stratum("points-x^d+y^d=0", d as i64, recentred, &["x0", "u"])?);
        let generic_chi = chi_projective_space(1) - 1 - d as i64;
        infinity.push(infinity_stratum("generic", generic_chi, chart(1)?, &["x0", "y"])?);
    }
    let title = format!("family x^{d0} + s*(x^{d} + y^{d})");
    Ok(ExampleReport::assemble(title, affine, infinity))
}

/// `P_σ = x1^4 + x2^3 + x3^2 + σ·x2^4`.
pub fn example2() -> Result<ExampleReport, FixtureError> {
    let vars = ["x1", "x2", "x3"];
    let f = crate::poly::parse_poly("x1^4 + x2^3 + x3^2", &vars)?;
    let g = crate::poly::parse_poly("x2^4", &vars)?;
    let fam = GermFamily::new(f.clone(), g.clone())?;

    let affine = vec![
        affine_stratum("origin", 1, fam.clone(), &vars)?,
        // smooth points of {P_0 = 0}, seen at (0, -1, 1)
        affine_stratum("surface-minus-origin", 0, fam.translate(&[int(0), int(-1), int(1)])?, &vars)?,
    ];

    let (fh, gh) = (f.homogenize(4)?, g.homogenize(4)?);
    let distinguished = GermFamily::new(fh.chart(3)?, gh.chart(3)?)?;
    // points (0:0:1:c), c ≠ ∞, seen at c = 1
    let line = GermFamily::new(fh.chart(2)?, gh.chart(2)?)?.translate(&[int(0), int(0), int(1)])?;
    let infinity = vec![
        infinity_stratum("point-0:0:0:1", 1, distinguished, &["x0", "x1", "x2"])?,
        infinity_stratum("line-minus-point", 1, line, &["x0", "x1", "x3"])?,
    ];
    Ok(ExampleReport::assemble("family x1^4 + x2^3 + x3^2 + s*x2^4".into(), affine, infinity))
}

/// Local coordinate names `x0, u, v, w` for chart germs in `n` variables.
fn chart_vars(n: usize) -> Vec<&'static str> {
    ["x0", "u", "v", "w"][..n].to_vec()
}

/// Strata shared by examples 3 and 4: the origin and the rest of the cone `{f = 0}`.
fn affine_cone(f: &Poly, g: &Poly, n: usize) -> Result<Vec<StratumReport>, FixtureError> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    // {f = 0} minus the origin is a C*-bundle; at its points f is a coordinate.
    let smooth = GermFamily::new(mono(n, &[(0, 1)]), Poly::one(n))?;
    Ok(vec![
        affine_stratum("origin", 1, GermFamily::new(f.clone(), g.clone())?, &vars)?,
        affine_stratum("cone-minus-origin", 0, smooth, &vars)?,
    ])
}

/// `P_σ = f_{d0} + σ·g_d` with generic homogeneous forms.
pub fn example3(n: u32, d0: u32, d: u32) -> Result<ExampleReport, FixtureError> {
    check_vars(n)?;
    check_degree("d0", d0)?;
    check_degree("d", d)?;
    let nv = n as usize;
    let m = n - 1;
    let f = full_simplex(nv, d0);
    let g = full_simplex(nv, d);
    let affine = affine_cone(&f, &g, nv)?;

    let vars = chart_vars(nv);
    let x0k = |extra: &[(usize, u32)]| {
        let mut powers = vec![(0, d0.abs_diff(d))];
        powers.extend_from_slice(extra);
        mono(nv, &powers)
    };
    let u = mono(nv, &[(1, 1)]);
    let v = mono(nv, &[(2.min(nv - 1), 1)]);
    let three = nv >= 3;
    let one = Poly::one(nv);
    let ci = chi_complete_intersection(d0, d, m);
    let hf = chi_smooth_hypersurface(d0, m);
    let hg = chi_smooth_hypersurface(d, m);

    let mut infinity = Vec::new();
    let pair = |f: Poly, g: Poly| GermFamily::new(f, g);
    if d0 > d {
        infinity.push(infinity_stratum("hf-minus-hg", hf - ci, pair(u.clone(), x0k(&[]))?, &vars)?);
        if three {
            infinity.push(infinity_stratum("hf-cap-hg", ci, pair(u.clone(), x0k(&[(2, 1)]))?, &vars)?);
        }
    } else if d0 == d {
        infinity.push(infinity_stratum("hf-minus-hg", hf - ci, pair(u.clone(), one.clone())?, &vars)?);
        if three {
            infinity.push(infinity_stratum("hf-cap-hg", ci, pair(u.clone(), v.clone())?, &vars)?);
        }
    } else {
        infinity.push(infinity_stratum("hf-minus-hg", hf - ci, pair(x0k(&[(1, 1)]), one.clone())?, &vars)?);
        infinity.push(infinity_stratum("hg-minus-hf", hg - ci, pair(x0k(&[]), u.clone())?, &vars)?);
        if three {
            infinity.push(infinity_stratum("hf-cap-hg", ci, pair(x0k(&[(1, 1)]), v.clone())?, &vars)?);
        }
        let generic = chi_transversal_complement(d0, d, m);
        infinity.push(infinity_stratum("generic", generic, pair(x0k(&[]), one.clone())?, &vars)?);
    }
    let title = format!("family f_{d0} + s*g_{d} in {n} variables, generic forms");
    Ok(ExampleReport::assemble(title, affine, infinity))
}

/// `P_σ = f_{d0} + σ·ℓ^d` with a generic form and a generic linear function.
pub fn example4(n: u32, d0: u32, d: u32) -> Result<ExampleReport, FixtureError> {
    check_vars(n)?;
    check_degree("d0", d0)?;
    check_degree("d", d)?;
    let nv = n as usize;
    let m = n - 1;
    let f = full_simplex(nv, d0);
    // ℓ = x_n after a generic linear change of coordinates
    let g = mono(nv, &[(nv - 1, d)]);
    let affine = affine_cone(&f, &g, nv)?;

    let vars = chart_vars(nv);
    let k = d0.abs_diff(d);
    let x0k = |extra: &[(usize, u32)]| {
        let mut powers = vec![(0, k)];
        powers.extend_from_slice(extra);
        mono(nv, &powers)
    };
    let u = mono(nv, &[(1, 1)]);
    let three = nv >= 3;
    let one = Poly::one(nv);
    // H_f ∩ H_ℓ is a degree-d0 hypersurface inside the hyperplane H_ℓ
    let ci = chi_complete_intersection(d0, 1, m);
    let hf = chi_smooth_hypersurface(d0, m);
    let hl = chi_smooth_hypersurface(1, m);
    let pair = |f: Poly, g: Poly| GermFamily::new(f, g);

    let mut infinity = Vec::new();
    if d0 > d {
        infinity.push(infinity_stratum("hf-minus-hl", hf - ci, pair(u.clone(), x0k(&[]))?, &vars)?);
        if three {
            infinity.push(infinity_stratum("hf-cap-hl", ci, pair(u.clone(), x0k(&[(2, d)]))?, &vars)?);
        }
    } else if d0 == d {
        infinity.push(infinity_stratum("hf-minus-hl", hf - ci, pair(u.clone(), one.clone())?, &vars)?);
        if three {
            infinity.push(infinity_stratum("hf-cap-hl", ci, pair(u.clone(), mono(nv, &[(2, d)]))?, &vars)?);
        }
    } else {
        infinity.push(infinity_stratum("hf-minus-hl", hf - ci, pair(x0k(&[(1, 1)]), one.clone())?, &vars)?);
        infinity.push(infinity_stratum("hl-minus-hf", hl - ci, pair(x0k(&[]), mono(nv, &[(1, d)]))?, &vars)?);
        if three {
            infinity.push(infinity_stratum("hf-cap-hl", ci, pair(x0k(&[(1, 1)]), mono(nv, &[(2, d)]))?, &vars)?);
        }
        let generic = chi_transversal_complement(d0, 1, m);
        infinity.push(infinity_stratum("generic", generic, pair(x0k(&[]), one.clone())?, &vars)?);
    }
    let title = format!("family f_{d0} + s*l^{d} in {n} variables, generic form and line");
    Ok(ExampleReport::assemble(title, affine, infinity))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::CycloProd;

    fn z(s: &str) -> CycloProd {
        s.parse().unwrap()
    }

    #[test]
    fn full_simplex_sizes() {
        assert_eq!(full_simplex(2, 3).num_terms(), 4);
        assert_eq!(full_simplex(3, 2).num_terms(), 6);
        assert_eq!(full_simplex(4, 5).num_terms(), 56);
        assert!(full_simplex(3, 4).is_homogeneous());
    }

    #[test]
    fn example1_regimes() {
        assert_eq!(example1(5, 3).unwrap().global.zeta, z("(1-t)(1-t^2)^-2"));
        assert_eq!(example1(3, 3).unwrap().global.zeta, z("(1-t)"));
        let r = example1(2, 4).unwrap();
        assert_eq!(r.global.zeta, z("(1-t)(1-t^2)^-3"));
        assert_eq!(r.stratum("generic").unwrap().stratum.zeta, z("(1-t^2)"));
        assert_eq!(r.stratum("generic").unwrap().stratum.chi, -3);
        assert!(r.stratum("points-x^d+y^d=0").unwrap().stratum.zeta.is_one());
        assert!(r.stratum("point-0:0:1").unwrap().stratum.zeta.is_one());
        assert!(example1(0, 3).is_err());
    }

    #[test]
    fn example2_global() {
        let r = example2().unwrap();
        assert_eq!(r.global.zeta, z("(1-t^4)(1-t)^2(1-t^2)^-1"));
        assert_eq!(r.stratum("line-minus-point").unwrap().stratum.zeta, z("(1-t)(1-t^4)^-1"));
    }

    #[test]
    fn examples_3_and_4_small() {
        assert_eq!(example3(3, 3, 1).unwrap().global.zeta, z("(1-t)(1-t^2)^4"));
        assert_eq!(example4(3, 4, 2).unwrap().global.zeta, z("(1-t)(1-t^2)^9"));
        assert_eq!(example3(2, 2, 2).unwrap().global.zeta, z("(1-t)"));
        assert!(example3(5, 2, 1).is_err());
    }

    #[test]
    fn report_is_a_strata_file() {
        let text = example2().unwrap().to_string();
        let (strata, last) = text.rsplit_once('\n').unwrap();
        let parsed: StratifiedProblem = strata.parse().unwrap();
        assert_eq!(parsed, example2().unwrap().problem());
        assert_eq!(last, "(1-t)^2(1-t^2)^-1(1-t^4)  chi=4");
    }
}

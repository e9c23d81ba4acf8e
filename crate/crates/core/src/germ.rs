//! Zeta functions of local data read off Newton diagrams.
//!
//! * [`milnor_zeta`]: Varchenko's formula for the classical monodromy of a
//!   nondegenerate germ `f`.
//! * [`pair_zeta0`]: the zeta function `ζ⁰` of the meromorphic germ `f/g`,
//!   a product over covectors of `(1 - t^{m_a(f) - m_a(g)})` raised to the
//!   signed sum of normalized mixed volumes of the two faces.
//! * [`family_zeta_at_point`]: the zeta function of the pencil `f + σ·g` at
//!   the origin, by cases on which of `f`, `g` vanish there.
//! * [`hat_family_zeta`]: the same divided by the zeta function of the
//!   family restricted to a boundary hyperplane.
//!
//! Newton nondegeneracy is assumed, never checked.

use std::fmt;

use crate::error::GermError;
use crate::newton::{self, pair_faces, pair_face_normals};
use crate::poly::{Exponent, GermFamily, Poly, Support};
use crate::zeta::CycloProd;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `f(0) ≠ 0`: the local zero set is empty.
    Empty,
    /// `f ≡ 0` or `g ≡ 0`: the local zero set does not move.
    ConstantFamily,
    /// `g(0) ≠ 0`: the classical Milnor fibre of `f`.
    Milnor,
    /// `f(0) = g(0) = 0`: zero Milnor fibre of `f/g` plus the indeterminacy locus.
    PairWithIndeterminacy,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Empty => "empty",
            CaseTag::ConstantFamily => "constant_family",
            CaseTag::Milnor => "milnor",
            CaseTag::PairWithIndeterminacy => "pair_with_indeterminacy",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalZetaResult {
    pub zeta: CycloProd,
    /// Euler characteristic of the local fibre; always `zeta.degree()`.
    pub chi: i64,
    pub case_tag: CaseTag,
}

impl LocalZetaResult {
    fn new(zeta: CycloProd, case_tag: CaseTag) -> Self {
        let chi = zeta.degree();
        Self { zeta, chi, case_tag }
    }
}

/// Nonempty coordinate subsets of `0..n`, ordered by mask.
fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1usize..(1 << n)).map(move |mask| (0..n).filter(|j| mask >> j & 1 == 1).collect())
}

fn sign(k: usize) -> i64 {
    if k % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Varchenko's formula:
/// `ζ_f(t) = ∏_I ∏_a (1 - t^{m_a})^{(-1)^{|I|-1} ν(Δ_a(f_I))}` over coordinate
/// subsets with `f_I ≢ 0` and compact facet normals `a` of the diagram of `f_I`.
pub fn milnor_zeta(f: &Poly) -> Result<CycloProd, GermError> {
    if f.is_zero() {
        return Err(GermError::ZeroGerm);
    }
    if !f.vanishes_at_origin() {
        return Err(GermError::NonzeroAtOrigin);
    }
    let n = f.nvars();
    let support = f.support();
    let origin: Support = [Exponent::zero(n)].into_iter().collect();
    let mut out = CycloProd::one();
    for subset in subsets(n) {
        if f.restrict_to_subset(&subset).is_zero() {
            continue;
        }
        for a in pair_face_normals(&support, &origin, &subset)? {
            let m = newton::m_value(&support, &a)?;
            let face: Vec<Exponent> = newton::face_of(&support, &a)?.into_iter().collect();
            let nu = newton::normalized_volume(&face, &a)? as i64;
            out = out.mul(&CycloProd::factor(m as u64, sign(subset.len()) * nu));
        }
    }
    Ok(out)
}

/// The pair product over covectors with positive `m_a(f_I) - m_a(g_I)`,
/// without any precondition checks. With `g = 1` this reduces to the
/// Varchenko formula for `f`.
pub fn diagram_pair_zeta(f: &Poly, g: &Poly) -> Result<CycloProd, GermError> {
    let n = f.nvars();
    let (sf, sg) = (f.support(), g.support());
    let mut out = CycloProd::one();
    for subset in subsets(n) {
        if f.restrict_to_subset(&subset).is_zero() || g.restrict_to_subset(&subset).is_zero() {
            continue;
        }
        for face in pair_faces(&sf, &sg, &subset)? {
            let m_g = face.m_g.expect("pair faces carry both minima");
            let drop = face.m_f - m_g;
            if drop <= 0 {
                continue;
            }
            let weight = newton::mixed_volume_sum(&face.vertices_f, &face.vertices_g, &face.covector)? as i64;
            out = out.mul(&CycloProd::factor(drop as u64, sign(subset.len()) * weight));
        }
    }
    Ok(out)
}

/// `ζ⁰` of the meromorphic germ `f/g` from the Newton diagrams of `f` and `g`.
pub fn pair_zeta0(f: &Poly, g: &Poly) -> Result<CycloProd, GermError> {
    if f.nvars() != g.nvars() {
        return Err(crate::error::PolyError::NvarsMismatch(f.nvars(), g.nvars()).into());
    }
    if f.is_zero() || g.is_zero() {
        return Err(GermError::ZeroGerm);
    }
    // a unit g is allowed: its diagram is the origin and the formula
    // collapses to the one for f alone
    if !f.vanishes_at_origin() {
        return Err(GermError::NonzeroAtOrigin);
    }
    diagram_pair_zeta(f, g)
}

/// Zeta function of the local family `f + σ·g` at the origin.
pub fn family_zeta_at_point(fam: &GermFamily) -> Result<LocalZetaResult, GermError> {
    let (f, g) = (&fam.f, &fam.g);
    let through_origin = |vanishes: bool| if vanishes { CycloProd::cyclic(1) } else { CycloProd::one() };
    let result = match (f.is_zero(), g.is_zero()) {
        (true, true) => LocalZetaResult::new(CycloProd::cyclic(1), CaseTag::ConstantFamily),
        (true, false) => LocalZetaResult::new(through_origin(g.vanishes_at_origin()), CaseTag::ConstantFamily),
        (false, true) => LocalZetaResult::new(through_origin(f.vanishes_at_origin()), CaseTag::ConstantFamily),
        (false, false) if !f.vanishes_at_origin() => LocalZetaResult::new(CycloProd::one(), CaseTag::Empty),
        (false, false) if !g.vanishes_at_origin() => LocalZetaResult::new(milnor_zeta(f)?, CaseTag::Milnor),
        (false, false) => LocalZetaResult::new(
            pair_zeta0(f, g)?.mul(&CycloProd::cyclic(1)),
            CaseTag::PairWithIndeterminacy,
        ),
    };
    Ok(result)
}

/// `ζ̂ = ζ_{p} / ζ_{p̂}` where `p̂` is the family restricted to `x_j = 0`.
///
/// The case tag is the one of the unrestricted family.
pub fn hat_family_zeta(fam: &GermFamily, boundary_var: usize) -> Result<LocalZetaResult, GermError> {
    let full = family_zeta_at_point(fam)?;
    let boundary = family_zeta_at_point(&fam.set_var_zero(boundary_var)?)?;
    Ok(LocalZetaResult::new(full.zeta.div(&boundary.zeta), full.case_tag))
}

/// Diagnostics for visibly fragile inputs: a germ with at least two terms
/// that is divisible by a coordinate vanishes on that whole hyperplane,
/// where the nondegeneracy hypotheses of the diagram formulas often fail.
pub fn fragility_warnings(fam: &GermFamily, names: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for (label, p) in [("f", &fam.f), ("g", &fam.g)] {
        // a single monomial is always nondegenerate
        if p.num_terms() < 2 {
            continue;
        }
        for (j, name) in names.iter().enumerate().take(p.nvars()) {
            if p.terms().all(|(e, _)| e.0[j] > 0) {
                out.push(format!(
                    "warning: {label} is divisible by {name}; the Newton-diagram formulas assume nondegeneracy"
                ));
            }
        }
    }
    out
}

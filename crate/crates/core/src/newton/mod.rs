//! Newton polyhedra, their compact faces, and lattice volumes of those faces.
//!
//! Everything is computed per coordinate subset `I`: a support is first
//! restricted to the monomials living in the coordinates of `I` and then
//! projected to `Z^I`. Covectors are strictly positive and primitive, so
//! they select compact faces only.

mod hull;
mod lattice;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::NewtonError;
use crate::poly::{Exponent, Support};

/// A primitive covector with strictly positive entries on the coordinate subset `subset`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Covector {
    pub subset: Vec<usize>,
    pub entries: Vec<i64>,
}

impl Covector {
    pub fn new(subset: Vec<usize>, entries: Vec<i64>) -> Result<Self, NewtonError> {
        if subset.is_empty() || subset.len() != entries.len() || entries.iter().any(|&x| x <= 0) {
            return Err(NewtonError::BadCovector);
        }
        let g = entries.iter().fold(0i128, |g, &x| lattice::gcd(g, x as i128));
        if g != 1 {
            return Err(NewtonError::BadCovector);
        }
        Ok(Self { subset, entries })
    }

    /// Covector on all of `0..entries.len()`.
    pub fn full(entries: Vec<i64>) -> Result<Self, NewtonError> {
        Self::new((0..entries.len()).collect(), entries)
    }

    pub fn dim(&self) -> usize {
        self.subset.len()
    }

    pub fn eval(&self, e: &Exponent) -> i64 {
        self.subset
            .iter()
            .zip(&self.entries)
            .map(|(&j, &a)| a * e.0[j] as i64)
            .sum()
    }
}

/// One covector with the minimizing faces of one or two supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceData {
    pub covector: Covector,
    pub m_f: i64,
    pub m_g: Option<i64>,
    pub vertices_f: Vec<Exponent>,
    pub vertices_g: Vec<Exponent>,
}

/// Exponents of `support` that vanish outside `subset`.
fn restrict(support: &Support, subset: &[usize]) -> Vec<Exponent> {
    support
        .iter()
        .filter(|e| e.0.iter().enumerate().all(|(j, &x)| x == 0 || subset.contains(&j)))
        .cloned()
        .collect()
}

fn project(e: &Exponent, subset: &[usize]) -> Vec<i64> {
    subset.iter().map(|&j| e.0[j] as i64).collect()
}

fn lift(p: &[i64], subset: &[usize], nvars: usize) -> Exponent {
    let mut v = vec![0u32; nvars];
    for (&j, &x) in subset.iter().zip(p) {
        v[j] = x as u32;
    }
    Exponent(v)
}

fn nvars_of(support: &Support) -> Option<usize> {
    support.iter().next().map(Exponent::len)
}

/// Vertices of `conv(points) + R^k_{>=0}` for distinct projected points.
fn newton_vertices(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = points[0].len();
    let facets = hull::newton_facets(points);
    hull::vertex_indices(points.len(), k, &facets)
        .into_iter()
        .map(|i| points[i].clone())
        .collect()
}

fn projected(support: &Support, subset: &[usize]) -> Result<Vec<Vec<i64>>, NewtonError> {
    let mut pts: Vec<Vec<i64>> = restrict(support, subset).iter().map(|e| project(e, subset)).collect();
    if pts.is_empty() {
        return Err(NewtonError::EmptySupport);
    }
    pts.sort();
    pts.dedup();
    Ok(pts)
}

/// Vertices of the Newton polyhedron of the support restricted to `subset`,
/// returned as full-length exponents.
pub fn diagram_vertices(support: &Support, subset: &[usize]) -> Result<BTreeSet<Exponent>, NewtonError> {
    let pts = projected(support, subset)?;
    let n = nvars_of(support).ok_or(NewtonError::EmptySupport)?;
    Ok(newton_vertices(&pts).iter().map(|p| lift(p, subset, n)).collect())
}

/// `min_{v ∈ A_I} a·v`.
pub fn m_value(support: &Support, a: &Covector) -> Result<i64, NewtonError> {
    restrict(support, &a.subset)
        .iter()
        .map(|e| a.eval(e))
        .min()
        .ok_or(NewtonError::EmptySupport)
}

/// The points of `A_I` where `a` attains its minimum.
pub fn face_of(support: &Support, a: &Covector) -> Result<BTreeSet<Exponent>, NewtonError> {
    let m = m_value(support, a)?;
    Ok(restrict(support, &a.subset)
        .into_iter()
        .filter(|e| a.eval(e) == m)
        .collect())
}

/// Primitive strictly positive covectors `a` on `subset` for which
/// `Δ_a(F_I) + Δ_a(G_I)` has dimension `|I| - 1`, in lexicographic order.
///
/// These are the compact facet normals of the Minkowski sum of the two Newton
/// polyhedra. Pass `G = {0}` for a single support.
pub fn pair_face_normals(f: &Support, g: &Support, subset: &[usize]) -> Result<Vec<Covector>, NewtonError> {
    let sum = minkowski_vertices(f, g, subset)?;
    let mut out: Vec<Covector> = hull::newton_facets(&sum)
        .into_iter()
        .filter(|facet| facet.normal.iter().all(|&x| x > 0))
        .map(|facet| Covector { subset: subset.to_vec(), entries: facet.normal })
        .collect();
    out.sort();
    Ok(out)
}

fn minkowski_vertices(f: &Support, g: &Support, subset: &[usize]) -> Result<Vec<Vec<i64>>, NewtonError> {
    let vf = newton_vertices(&projected(f, subset)?);
    let vg = newton_vertices(&projected(g, subset)?);
    let mut sum: Vec<Vec<i64>> = vf
        .iter()
        .flat_map(|p| vg.iter().map(move |q| p.iter().zip(q).map(|(x, y)| x + y).collect()))
        .collect();
    sum.sort();
    sum.dedup();
    Ok(sum)
}

/// Face data for every covector returned by [`pair_face_normals`]. Faces are
/// given by their vertices.
pub fn pair_faces(f: &Support, g: &Support, subset: &[usize]) -> Result<Vec<FaceData>, NewtonError> {
    let n = nvars_of(f).ok_or(NewtonError::EmptySupport)?;
    let vf: Support = newton_vertices(&projected(f, subset)?).iter().map(|p| lift(p, subset, n)).collect();
    let vg: Support = newton_vertices(&projected(g, subset)?).iter().map(|p| lift(p, subset, n)).collect();
    pair_face_normals(f, g, subset)?
        .into_iter()
        .map(|a| {
            Ok(FaceData {
                m_f: m_value(&vf, &a)?,
                m_g: Some(m_value(&vg, &a)?),
                vertices_f: face_of(&vf, &a)?.into_iter().collect(),
                vertices_g: face_of(&vg, &a)?.into_iter().collect(),
                covector: a,
            })
        })
        .collect()
}

fn level(points: &[Vec<i64>], a: &[i64]) -> Result<i64, NewtonError> {
    let m = lattice::dot(&points[0], a);
    if points.iter().any(|p| lattice::dot(p, a) != m) {
        return Err(NewtonError::NotCoplanar);
    }
    Ok(m)
}

fn projected_face(vertices: &[Exponent], a: &Covector) -> Result<Vec<Vec<i64>>, NewtonError> {
    if vertices.is_empty() {
        return Err(NewtonError::EmptySupport);
    }
    if vertices.iter().any(|e| e.0.iter().enumerate().any(|(j, &x)| x != 0 && !a.subset.contains(&j))) {
        return Err(NewtonError::Dimension);
    }
    Ok(vertices.iter().map(|e| project(e, &a.subset)).collect())
}

fn hyperplane_volume(points: &[Vec<i64>], a: &[i64]) -> i128 {
    if a.len() == 1 {
        return 1;
    }
    lattice::lattice_volume(&lattice::hyperplane_coordinates(points, a))
}

/// Normalized `(k-1)`-dimensional volume of `conv(vertices)` in the lattice
/// induced on the level hyperplane of `a` (`k = |I|`). A point has volume 1
/// when `k = 1` and 0 otherwise.
pub fn normalized_volume(vertices: &[Exponent], a: &Covector) -> Result<u64, NewtonError> {
    let pts = projected_face(vertices, a)?;
    level(&pts, &a.entries)?;
    Ok(hyperplane_volume(&pts, &a.entries) as u64)
}

/// Normalized mixed volumes `V_0..V_d` of two faces on parallel level sets
/// of `a`, where `ν(λF + G) = Σ_j C(d, j) V_j λ^j` and `d = |I| - 1`.
pub fn mixed_volumes(f_face: &[Exponent], g_face: &[Exponent], a: &Covector) -> Result<Vec<u64>, NewtonError> {
    let pf = projected_face(f_face, a)?;
    let pg = projected_face(g_face, a)?;
    level(&pf, &a.entries)?;
    level(&pg, &a.entries)?;
    let d = a.dim() - 1;
    let samples: Vec<BigRational> = (0..=d as i64)
        .map(|lambda| {
            let mut pts: Vec<Vec<i64>> = pf
                .iter()
                .flat_map(|p| pg.iter().map(move |q| p.iter().zip(q).map(|(x, y)| lambda * x + y).collect()))
                .collect();
            pts.sort();
            pts.dedup();
            BigRational::from_integer(BigInt::from(hyperplane_volume(&pts, &a.entries)))
        })
        .collect();
    let coeffs = interpolate(&samples);
    coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let v = c / BigRational::from_integer(binomial(d, j));
            match (v.is_integer(), v.is_negative(), v.to_integer().to_u64()) {
                (true, false, Some(x)) => Ok(x),
                _ => Err(NewtonError::NonIntegralMixedVolume { j, value: v.to_string() }),
            }
        })
        .collect()
}

/// `Σ_j V_j`, the weight of a covector in the pair formula.
pub fn mixed_volume_sum(f_face: &[Exponent], g_face: &[Exponent], a: &Covector) -> Result<u64, NewtonError> {
    Ok(mixed_volumes(f_face, g_face, a)?.iter().sum())
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Monomial coefficients of the polynomial through `(λ, samples[λ])`, `λ = 0..`.
fn interpolate(samples: &[BigRational]) -> Vec<BigRational> {
    // Newton forward differences, then expand the falling-factorial basis.
    let n = samples.len();
    let mut diffs = samples.to_vec();
    let mut leading = Vec::with_capacity(n);
    for _ in 0..n {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut coeffs = vec![BigRational::zero(); n];
    // basis polynomial C(λ, j) = λ(λ-1)…(λ-j+1)/j!
    let mut basis = vec![BigRational::one()];
    for (j, delta) in leading.iter().enumerate() {
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += delta * b;
        }
        // multiply basis by (λ - j)/(j + 1)
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        let shift = BigRational::from_integer(BigInt::from(j));
        let denom = BigRational::from_integer(BigInt::from(j + 1));
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b / &denom;
            next[i] -= b * &shift / &denom;
        }
        basis = next;
    }
    coeffs
}

/// Milnor number of a convenient support by the alternating-volume formula
///
/// `μ = Σ_{∅≠I} (-1)^{n-|I|} V_I + (-1)^n`,
///
/// where `V_I` is the normalized `|I|`-volume of the region between the
/// origin and the Newton diagram of `A_I`. Each `V_I` is taken as the volume
/// of a box minus the volume of the Newton polyhedron clipped to the box, so
/// this shares no face enumeration with the zeta-function formulas.
pub fn kouchnirenko_mu(support: &Support) -> Result<u64, NewtonError> {
    let n = nvars_of(support).ok_or(NewtonError::EmptySupport)?;
    for j in 0..n {
        let pure = support
            .iter()
            .any(|e| e.0[j] > 0 && e.0.iter().enumerate().all(|(i, &x)| i == j || x == 0));
        if !pure {
            return Err(NewtonError::NotConvenient(j));
        }
    }
    let mut mu: i128 = if n % 2 == 0 { 1 } else { -1 };
    for mask in 1usize..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
        let k = subset.len();
        let pts = projected(support, &subset)?;
        let side = pts.iter().flatten().copied().max().unwrap_or(0);
        let mut clipped = Vec::with_capacity(pts.len() << k);
        for p in &pts {
            for corner in 0usize..(1 << k) {
                clipped.push(
                    p.iter()
                        .enumerate()
                        .map(|(i, &x)| if corner >> i & 1 == 1 { side } else { x })
                        .collect::<Vec<i64>>(),
                );
            }
        }
        let box_volume: i128 = (1..=k as i128).product::<i128>() * (side as i128).pow(k as u32);
        let under = box_volume - lattice::lattice_volume(&clipped);
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        mu += sign * under;
    }
    u64::try_from(mu).map_err(|_| NewtonError::NonIntegralMixedVolume { j: 0, value: mu.to_string() })
}

//! Integer linear algebra: gcds, ranks, determinants, unimodular completions
//! and normalized lattice volumes of full-dimensional polytopes.

use super::hull;

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b) >= 0`.
pub(crate) fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Divides a vector by the gcd of its entries. The zero vector is returned unchanged.
pub(crate) fn make_primitive(v: &mut [i128]) {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank over the rationals, by fraction-free elimination.
pub(crate) fn rank(rows: &[Vec<i128>]) -> usize {
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for row in rows {
        reduce_into(&mut basis, row.clone());
    }
    basis.len()
}

/// Reduces `v` against an echelon basis and appends it if independent.
/// Returns `true` when `v` was dependent.
pub(crate) fn reduce_into(basis: &mut Vec<(usize, Vec<i128>)>, mut v: Vec<i128>) -> bool {
    for (pivot, b) in basis.iter() {
        let c = v[*pivot];
        if c == 0 {
            continue;
        }
        let p = b[*pivot];
        for (x, y) in v.iter_mut().zip(b) {
            *x = p * *x - c * y;
        }
        make_primitive(&mut v);
    }
    match v.iter().position(|&x| x != 0) {
        Some(pivot) => {
            basis.push((pivot, v));
            false
        }
        None => true,
    }
}

/// Bareiss determinant.
pub(crate) fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// For a primitive `a`, returns `(u, v)` with `u` unimodular, `v = u⁻¹`,
/// `a·u = e_1` and first row of `v` equal to `a`. Columns `1..` of `u` form a
/// basis of the lattice `{x ∈ Zᵏ : a·x = 0}`, and for such `x` the entries
/// `1..` of `v·x` are its coordinates in that basis.
pub(crate) fn unimodular_completion(a: &[i64]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let k = a.len();
    let mut u: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    let mut v = u.clone();
    let mut r = a.to_vec();
    for j in 1..k {
        if r[j] == 0 {
            continue;
        }
        let (g, s, t) = egcd(r[0], r[j]);
        let (p, q) = (r[0] / g, r[j] / g);
        for row in u.iter_mut() {
            let (c0, cj) = (row[0], row[j]);
            row[0] = s * c0 + t * cj;
            row[j] = -q * c0 + p * cj;
        }
        for col in 0..k {
            let (r0, rj) = (v[0][col], v[j][col]);
            v[0][col] = p * r0 + q * rj;
            v[j][col] = -t * r0 + s * rj;
        }
        r[0] = g;
        r[j] = 0;
    }
    if r[0] < 0 {
        for row in u.iter_mut() {
            row[0] = -row[0];
        }
        for x in v[0].iter_mut() {
            *x = -*x;
        }
    }
    (u, v)
}

/// Maps points lying on a common level set of the primitive form `a` to
/// coordinates in the induced `(k-1)`-dimensional lattice, relative to the
/// first point.
pub(crate) fn hyperplane_coordinates(points: &[Vec<i64>], a: &[i64]) -> Vec<Vec<i64>> {
    let (_, v) = unimodular_completion(a);
    let origin = &points[0];
    points
        .iter()
        .map(|p| {
            let diff: Vec<i64> = p.iter().zip(origin).map(|(x, y)| x - y).collect();
            v[1..].iter().map(|row| dot(row, &diff)).collect()
        })
        .collect()
}

/// Dimension of the affine hull of a nonempty point set.
pub(crate) fn affine_dim(points: &[Vec<i64>]) -> usize {
    let o = &points[0];
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(o).map(|(x, y)| (x - y) as i128).collect())
        .collect();
    rank(&diffs)
}

/// Normalized volume (`d!` times Euclidean volume) of `conv(points)` in `Zᵈ`;
/// zero when the hull is not full-dimensional. A single point in `Z⁰` has
/// volume 1.
pub(crate) fn lattice_volume(points: &[Vec<i64>]) -> i128 {
    assert!(!points.is_empty());
    let d = points[0].len();
    if d == 0 {
        return 1;
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if affine_dim(&pts) < d {
        return 0;
    }
    if d == 1 {
        return (pts.last().unwrap()[0] - pts[0][0]) as i128;
    }
    let apex = &pts[0];
    let mut total = 0i128;
    for facet in hull::polytope_facets(&pts) {
        let height = dot(&facet.normal, apex) - facet.level;
        debug_assert!(height >= 0);
        if height == 0 {
            continue;
        }
        let face: Vec<Vec<i64>> = facet.points.iter().map(|&i| pts[i].clone()).collect();
        let coords = hyperplane_coordinates(&face, &facet.normal);
        total += height as i128 * lattice_volume(&coords);
    }
    total
}

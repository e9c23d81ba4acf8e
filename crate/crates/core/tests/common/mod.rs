//! Independent oracles shared by the integration tests and the acceptance
//! harness. Nothing here calls the hull or lattice code of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use monozeta::newton::Covector;
use monozeta::{CycloProd, Exponent, Poly, Support};
use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::Rng;

pub fn z(s: &str) -> CycloProd {
    s.parse().unwrap()
}

pub fn poly(s: &str, vars: &[&str]) -> Poly {
    monozeta::parse_poly(s, vars).unwrap()
}

pub fn poly_of(support: &Support, nvars: usize) -> Poly {
    Poly::from_support(nvars, support.iter())
}

/// Every exponent of total degree `d` in `n` variables.
pub fn simplex(n: usize, d: u32) -> Support {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Support) {
        if prefix.len() + 1 == n {
            let mut e = prefix.clone();
            e.push(left);
            out.insert(Exponent(e));
            return;
        }
        for x in 0..=left {
            prefix.push(x);
            rec(n, left - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Support::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

pub fn pure_power(n: usize, j: usize, k: u32) -> Exponent {
    let mut e = vec![0; n];
    e[j] = k;
    Exponent(e)
}

/// `1 + (-1)^{n-1} μ` for a germ whose Milnor number is `mu`.
pub fn kouchnirenko_degree(n: usize, mu: u64) -> i64 {
    let sign = if n % 2 == 1 { 1 } else { -1 };
    1 + sign * mu as i64
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for k in 0..cols {
                    m[i][k] = a * m[i][k] - b * m[r][k];
                }
                let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// Integer normal to the span of `k - 1` vectors in `Z^k` by signed minors.
fn normal_of(vectors: &[Vec<i128>]) -> Vec<i128> {
    let k = vectors.len() + 1;
    (0..k)
        .map(|j| {
            let minor: Vec<Vec<i128>> =
                vectors.iter().map(|v| v.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * det(&minor)
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn restricted_points(s: &Support, subset: &[usize]) -> Vec<Vec<i128>> {
    s.iter()
        .filter(|e| e.0.iter().enumerate().all(|(j, &x)| x == 0 || subset.contains(&j)))
        .map(|e| subset.iter().map(|&j| e.0[j] as i128).collect())
        .collect()
}

/// Positive compact facet normals of `Γ(F_I) + Γ(G_I)` by brute force: every
/// `|I|`-subset of Minkowski-sum points spans a candidate hyperplane, kept if
/// its normal is strictly positive and the points minimizing it span a face
/// of full dimension `|I| - 1`.
pub fn brute_force_normals(f: &Support, g: &Support, subset: &[usize]) -> Vec<Covector> {
    let k = subset.len();
    let pf = restricted_points(f, subset);
    let pg = restricted_points(g, subset);
    let mut sum: Vec<Vec<i128>> =
        pf.iter().flat_map(|p| pg.iter().map(move |q| p.iter().zip(q).map(|(a, b)| a + b).collect())).collect();
    sum.sort();
    sum.dedup();
    if sum.is_empty() {
        return Vec::new();
    }
    let mut found = BTreeSet::new();
    if k == 1 {
        found.insert(vec![1i64]);
    }
    for pick in combinations(sum.len(), k) {
        if k == 1 {
            break;
        }
        let base = &sum[pick[0]];
        let diffs: Vec<Vec<i128>> =
            pick[1..].iter().map(|&i| sum[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let mut a = normal_of(&diffs);
        if a.iter().all(|&x| x == 0) {
            continue;
        }
        if a.iter().all(|&x| x < 0) {
            a.iter_mut().for_each(|x| *x = -*x);
        }
        if !a.iter().all(|&x| x > 0) {
            continue;
        }
        let g = a.iter().fold(0, |g, &x| gcd(g, x));
        a.iter_mut().for_each(|x| *x /= g);
        let val = |p: &Vec<i128>| p.iter().zip(&a).map(|(x, y)| x * y).sum::<i128>();
        let min = sum.iter().map(val).min().unwrap();
        let face: Vec<&Vec<i128>> = sum.iter().filter(|p| val(p) == min).collect();
        let diffs: Vec<Vec<i128>> =
            face[1..].iter().map(|p| p.iter().zip(face[0]).map(|(x, y)| x - y).collect()).collect();
        if rank(&diffs) == k - 1 {
            found.insert(a.iter().map(|&x| x as i64).collect());
        }
    }
    found.into_iter().map(|entries| Covector::new(subset.to_vec(), entries).unwrap()).collect()
}

/// Twice the area of the convex hull of planar points (monotone chain).
pub fn doubled_area(points: &[Vec<i128>]) -> i128 {
    let mut p: Vec<(i128, i128)> = points.iter().map(|v| (v[0], v[1])).collect();
    p.sort();
    p.dedup();
    if p.len() < 3 {
        return 0;
    }
    let cross = |o: (i128, i128), a: (i128, i128), b: (i128, i128)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(i128, i128)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i128, i128)>> = if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    let n = hull.len();
    (0..n).map(|i| hull[i].0 * hull[(i + 1) % n].1 - hull[(i + 1) % n].0 * hull[i].1).sum::<i128>().abs()
}

/// Normalized volume of a face on a level set of `a` with `|I| ≤ 3`, from
/// the projection dropping one coordinate: the induced lattice maps onto
/// `Z^{k-1}` with index `a_j`.
pub fn projected_volume(vertices: &[Exponent], a: &Covector) -> i128 {
    let k = a.dim();
    let pts: Vec<Vec<i128>> = vertices.iter().map(|e| a.subset.iter().map(|&j| e.0[j] as i128).collect()).collect();
    let drop = k - 1;
    let proj: Vec<Vec<i128>> = pts.iter().map(|p| p[..drop].to_vec()).collect();
    let raw = match k {
        1 => return 1,
        2 => proj.iter().map(|p| p[0]).max().unwrap() - proj.iter().map(|p| p[0]).min().unwrap(),
        3 => doubled_area(&proj),
        _ => panic!("projection oracle covers |I| <= 3"),
    };
    let index = a.entries[drop] as i128;
    assert_eq!(raw % index, 0, "projected volume must be divisible by the index");
    raw / index
}

/// `Σ V_j` from pure volumes: `V_0 + V_1` for `|I| = 2` and
/// `V_0 + (ν(F+G) - ν(F) - ν(G))/2 + V_2` for `|I| = 3`.
pub fn mixed_sum_oracle(f_face: &[Exponent], g_face: &[Exponent], a: &Covector) -> i128 {
    let vf = projected_volume(f_face, a);
    let vg = projected_volume(g_face, a);
    match a.dim() {
        1 => 1,
        2 => vf + vg,
        3 => {
            let sum: Vec<Exponent> = f_face
                .iter()
                .flat_map(|p| g_face.iter().map(move |q| Exponent(p.0.iter().zip(&q.0).map(|(x, y)| x + y).collect())))
                .collect();
            let vs = projected_volume(&sum, a);
            let twice_v1 = vs - vf - vg;
            assert_eq!(twice_v1 % 2, 0);
            vf + twice_v1 / 2 + vg
        }
        _ => panic!("mixed-volume oracle covers |I| <= 3"),
    }
}

/// Random support of at most `max_points` nonzero exponents with entries ≤ `max_entry`.
pub fn random_support(rng: &mut StdRng, n: usize, max_points: usize, max_entry: u32) -> Support {
    let available = (max_entry as usize + 1).pow(n as u32) - 1;
    let count = rng.gen_range(1..=max_points.min(available));
    let mut out = Support::new();
    while out.len() < count {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_entry)).collect();
        if e.iter().any(|&x| x > 0) {
            out.insert(Exponent(e));
        }
    }
    out
}

/// Random CycloProd with up to four factors.
pub fn random_cyclo(rng: &mut StdRng) -> CycloProd {
    let mut z = CycloProd::one();
    for _ in 0..rng.gen_range(0..=4) {
        z = z.mul(&CycloProd::factor(rng.gen_range(1..=12), rng.gen_range(-5..=5)));
    }
    z
}

/// Random polynomial with small rational coefficients.
pub fn random_poly(rng: &mut StdRng, n: usize) -> Poly {
    let support = random_support(rng, n, 5, 4);
    let mut p = Poly::zero(n);
    for e in support {
        let num: i64 = loop {
            let c = rng.gen_range(-9..=9);
            if c != 0 {
                break c;
            }
        };
        let den: i64 = rng.gen_range(1..=4);
        p = p.add(&Poly::monomial(e, BigRational::new(num.into(), den.into())));
    }
    if rng.gen_bool(0.3) {
        p = p.add(&Poly::constant(n, BigRational::one()));
    }
    p
}

/// `(1 - t^k)^e` written out from the Lefschetz count for a generic
/// homogeneous germ of degree `d` in `n` variables.
pub fn lefschetz_zeta(n: usize, d: u32) -> CycloProd {
    let sign: i64 = if n % 2 == 1 { 1 } else { -1 };
    let num = 1 + sign * (d as i64 - 1).pow(n as u32);
    assert_eq!(num % d as i64, 0);
    CycloProd::factor(d as u64, num / d as i64)
}

/// `(-1)^{n-1}((a-1)^n - (b-1)^n)/(a - b)`.
pub fn simplex_count(n: u32, a: u32, b: u32) -> i64 {
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let num = (a as i64 - 1).pow(n) - (b as i64 - 1).pow(n);
    let den = a as i64 - b as i64;
    assert_eq!(num % den, 0);
    sign * num / den
}

/// Nondegenerate supports in one to three variables.
pub fn reduction_corpus() -> Vec<(usize, Support)> {
    let mut out = Vec::new();
    for a in 2..=6 {
        out.push((1, [Exponent(vec![a])].into_iter().collect()));
    }
    for (a, b) in [(2, 3), (2, 5), (3, 4), (4, 6), (3, 3), (5, 2)] {
        out.push((2, [Exponent(vec![a, 0]), Exponent(vec![0, b])].into_iter().collect()));
    }
    for (a, b, c) in [(2, 2, 2), (2, 3, 4), (3, 3, 4), (4, 2, 3)] {
        out.push((3, [Exponent(vec![a, 0, 0]), Exponent(vec![0, b, 0]), Exponent(vec![0, 0, c])].into_iter().collect()));
    }
    for (n, d) in [(2, 3), (2, 4), (3, 2), (3, 3)] {
        out.push((n, simplex(n, d)));
    }
    // non-convenient and mixed-face cases
    out.push((2, [Exponent(vec![2, 1]), Exponent(vec![0, 3])].into_iter().collect()));
    out.push((2, [Exponent(vec![1, 1]), Exponent(vec![4, 0]), Exponent(vec![0, 5])].into_iter().collect()));
    out.push((3, [Exponent(vec![2, 0, 0]), Exponent(vec![0, 4, 0]), Exponent(vec![1, 0, 3])].into_iter().collect()));
    out
}

/// Convenient nondegenerate germs with known Milnor numbers.
pub fn kouchnirenko_corpus() -> Vec<(usize, Support)> {
    let mut out = Vec::new();
    for a in 2..=6 {
        for b in 2..=6 {
            out.push((2, [Exponent(vec![a, 0]), Exponent(vec![0, b])].into_iter().collect()));
        }
    }
    for a in 2..=4 {
        for b in 2..=4 {
            for c in 2..=4 {
                out.push((3, [Exponent(vec![a, 0, 0]), Exponent(vec![0, b, 0]), Exponent(vec![0, 0, c])].into_iter().collect()));
            }
        }
    }
    for n in 1..=3 {
        for d in 2..=4 {
            out.push((n, simplex(n, d)));
        }
    }
    out
}

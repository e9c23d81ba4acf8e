//! Exact facet enumeration by the double description method.
//!
//! A facet `normal·x >= level` of a polyhedron `P` corresponds to an extreme
//! ray `(normal, level)` of the cone `{(a, c) : a·p - c >= 0 for every
//! generator p}` (plus `a >= 0` when `P` carries the recession cone `R^k_{>=0}`).
//! The cone is built one constraint at a time with the combinatorial adjacency
//! test, so degenerate (many-points-per-facet) inputs need no perturbation.

use super::lattice::{det, make_primitive, rank, reduce_into};

#[derive(Debug, Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &Self) -> Self {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Debug, Clone)]
struct Ray {
    v: Vec<i128>,
    zero: BitSet,
}

fn eval(row: &[i128], v: &[i128]) -> i128 {
    row.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Extreme rays of the pointed cone `{y : row·y >= 0 for all rows}`, each with
/// the indices of the rows it makes tight. Returns `None` when the rows do
/// not have full rank (the cone is not pointed).
fn extreme_rays(rows: &[Vec<i128>]) -> Option<Vec<(Vec<i128>, Vec<usize>)>> {
    let dim = rows.first()?.len();
    let mut echelon = Vec::new();
    let mut basis = Vec::with_capacity(dim);
    for (i, row) in rows.iter().enumerate() {
        if !reduce_into(&mut echelon, row.clone()) {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return None;
    }

    // Initial cone: columns of the adjugate of the basis block.
    let b: Vec<Vec<i128>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let sign = det(&b).signum();
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut v = vec![0i128; dim];
        for (i, vi) in v.iter_mut().enumerate() {
            // adj[i][j] = (-1)^{i+j} det(b without row j and column i)
            let minor: Vec<Vec<i128>> = (0..dim)
                .filter(|&r| r != j)
                .map(|r| (0..dim).filter(|&c| c != i).map(|c| b[r][c]).collect())
                .collect();
            let cof = det(&minor);
            *vi = if (i + j) % 2 == 0 { cof } else { -cof } * sign;
        }
        make_primitive(&mut v);
        let mut zero = BitSet::new(rows.len());
        for (jj, &r) in basis.iter().enumerate() {
            if jj != j {
                zero.insert(r);
            }
        }
        rays.push(Ray { v, zero });
    }

    for (h, row) in rows.iter().enumerate() {
        if basis.contains(&h) {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| eval(row, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for (r, &val) in rays.iter().zip(&vals) {
            if val > 0 {
                next.push(r.clone());
            } else if val == 0 {
                let mut r = r.clone();
                r.zero.insert(h);
                next.push(r);
            }
        }
        for (p, &vp) in rays.iter().zip(&vals) {
            if vp <= 0 {
                continue;
            }
            for (n, &vn) in rays.iter().zip(&vals) {
                if vn >= 0 {
                    continue;
                }
                let common = p.zero.and(&n.zero);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = rays.iter().all(|r| {
                    std::ptr::eq(r, p) || std::ptr::eq(r, n) || !common.is_subset(&r.zero)
                });
                if !adjacent {
                    continue;
                }
                let mut v: Vec<i128> = p.v.iter().zip(&n.v).map(|(a, b)| vp * b - vn * a).collect();
                make_primitive(&mut v);
                let mut zero = common;
                zero.insert(h);
                next.push(Ray { v, zero });
            }
        }
        rays = next;
    }

    Some(
        rays.into_iter()
            .map(|r| {
                let tight = (0..rows.len()).filter(|&i| r.zero.contains(i)).collect();
                (r.v, tight)
            })
            .collect(),
    )
}

/// A facet `normal·x >= level` together with the indices of the input points
/// lying on it. `normal` is primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Facet {
    pub normal: Vec<i64>,
    pub level: i64,
    pub points: Vec<usize>,
}

fn point_row(p: &[i64]) -> Vec<i128> {
    let mut row: Vec<i128> = p.iter().map(|&x| x as i128).collect();
    row.push(-1);
    row
}

fn collect_facets(rays: Vec<(Vec<i128>, Vec<usize>)>, offset: usize) -> Vec<Facet> {
    let mut out: Vec<Facet> = rays
        .into_iter()
        .filter(|(v, _)| v[..v.len() - 1].iter().any(|&x| x != 0))
        .map(|(v, tight)| {
            let k = v.len() - 1;
            Facet {
                normal: v[..k].iter().map(|&x| x as i64).collect(),
                level: v[k] as i64,
                points: tight.into_iter().filter(|&i| i >= offset).map(|i| i - offset).collect(),
            }
        })
        .collect();
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    out
}

/// All facets of `conv(points) + R^k_{>=0}`. Points must be distinct and nonempty.
pub(crate) fn newton_facets(points: &[Vec<i64>]) -> Vec<Facet> {
    let k = points[0].len();
    let mut rows: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..=k).map(|j| i128::from(i == j)).collect())
        .collect();
    rows.extend(points.iter().map(|p| point_row(p)));
    let rays = extreme_rays(&rows).expect("Newton polyhedron is full-dimensional");
    collect_facets(rays, k)
}

/// Facets of a full-dimensional polytope `conv(points)`. Points must be distinct.
pub(crate) fn polytope_facets(points: &[Vec<i64>]) -> Vec<Facet> {
    let rows: Vec<Vec<i128>> = points.iter().map(|p| point_row(p)).collect();
    let rays = extreme_rays(&rows).expect("polytope must be full-dimensional");
    collect_facets(rays, 0)
}

/// Indices of the points that are vertices, given all facets of a
/// full-dimensional polyhedron in `R^dim` built from those points.
pub(crate) fn vertex_indices(npoints: usize, dim: usize, facets: &[Facet]) -> Vec<usize> {
    (0..npoints)
        .filter(|&i| {
            let normals: Vec<Vec<i128>> = facets
                .iter()
                .filter(|f| f.points.contains(&i))
                .map(|f| f.normal.iter().map(|&x| x as i128).collect())
                .collect();
            rank(&normals) == dim
        })
        .collect()
}

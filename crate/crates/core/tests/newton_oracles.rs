mod common;

use common::*;
use monozeta::newton::{
    diagram_vertices, face_of, kouchnirenko_mu, m_value, mixed_volume_sum, mixed_volumes, normalized_volume,
    pair_face_normals, pair_faces, Covector,
};
use monozeta::{Exponent, NewtonError, Support};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn support(points: &[&[u32]]) -> Support {
    points.iter().map(|p| Exponent(p.to_vec())).collect()
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (1usize..(1 << n)).map(|mask| (0..n).filter(|j| mask >> j & 1 == 1).collect()).collect()
}

fn nonempty_on(s: &Support, subset: &[usize]) -> bool {
    s.iter().any(|e| e.0.iter().enumerate().all(|(j, &x)| x == 0 || subset.contains(&j)))
}

#[test]
fn fig1_triangle() {
    let f = support(&[&[2, 0, 0], &[0, 4, 0], &[1, 0, 3]]);
    let g = support(&[&[0, 0, 4]]);
    let a = Covector::full(vec![6, 3, 2]).unwrap();
    assert_eq!(pair_face_normals(&f, &g, &[0, 1, 2]).unwrap(), vec![a.clone()]);
    assert_eq!(m_value(&f, &a).unwrap(), 12);
    assert_eq!(face_of(&f, &a).unwrap(), f);
    let tri: Vec<Exponent> = f.iter().cloned().collect();
    assert_eq!(normalized_volume(&tri, &a).unwrap(), 2);
    assert_eq!(mixed_volume_sum(&tri, &[Exponent(vec![0, 0, 4])], &a).unwrap(), 2);
    assert_eq!(diagram_vertices(&f, &[0, 1, 2]).unwrap(), f);
}

#[test]
fn normals_match_brute_force() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    for _ in 0..400 {
        let n = rng.gen_range(1..=3);
        let f = random_support(&mut rng, n, 6, 4);
        let g = if rng.gen_bool(0.3) {
            support(&[&vec![0; n]])
        } else {
            random_support(&mut rng, n, 6, 4)
        };
        for subset in subsets(n) {
            if !nonempty_on(&f, &subset) || !nonempty_on(&g, &subset) {
                assert!(pair_face_normals(&f, &g, &subset).is_err());
                continue;
            }
            assert_eq!(
                pair_face_normals(&f, &g, &subset).unwrap(),
                brute_force_normals(&f, &g, &subset),
                "f = {f:?}, g = {g:?}, I = {subset:?}"
            );
            checked += 1;
        }
    }
    assert!(checked > 500);
}

#[test]
fn volumes_match_projection_oracle() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut faces = 0;
    while faces < 300 {
        let n = rng.gen_range(2..=3);
        let f = random_support(&mut rng, n, 6, 5);
        let g = random_support(&mut rng, n, 6, 5);
        let all: Vec<usize> = (0..n).collect();
        for face in pair_faces(&f, &g, &all).unwrap() {
            let a = &face.covector;
            let vf = &face.vertices_f;
            let vg = &face.vertices_g;
            assert_eq!(normalized_volume(vf, a).unwrap() as i128, projected_volume(vf, a));
            assert_eq!(normalized_volume(vg, a).unwrap() as i128, projected_volume(vg, a));
            let vs = mixed_volumes(vf, vg, a).expect("mixed volumes are nonnegative integers");
            assert_eq!(vs.len(), n);
            assert_eq!(vs.iter().sum::<u64>() as i128, mixed_sum_oracle(vf, vg, a));
            assert_eq!(mixed_volume_sum(vf, vg, a).unwrap(), mixed_volume_sum(vg, vf, a).unwrap());
            faces += 1;
        }
    }
}

#[test]
fn dilated_simplices() {
    for k in 1..=4usize {
        let a = Covector::full(vec![1; k]).unwrap();
        for d in 1..=6u32 {
            let vertices: Vec<Exponent> = (0..k).map(|j| pure_power(k, j, d)).collect();
            assert_eq!(normalized_volume(&vertices, &a).unwrap(), (d as u64).pow(k as u32 - 1));
            let all: Vec<Exponent> = simplex(k, d).into_iter().collect();
            assert_eq!(normalized_volume(&all, &a).unwrap(), (d as u64).pow(k as u32 - 1));
        }
    }
}

#[test]
fn parallel_simplices_mixed_sum() {
    for k in 1..=4usize {
        let a = Covector::full(vec![1; k]).unwrap();
        for d0 in 1..=5u32 {
            for d in 1..=5u32 {
                let f: Vec<Exponent> = (0..k).map(|j| pure_power(k, j, d0)).collect();
                let g: Vec<Exponent> = (0..k).map(|j| pure_power(k, j, d)).collect();
                let expected: u64 = (0..k as u32).map(|j| (d0 as u64).pow(j) * (d as u64).pow(k as u32 - 1 - j)).sum();
                assert_eq!(mixed_volume_sum(&f, &g, &a).unwrap(), expected, "k={k} d0={d0} d={d}");
            }
        }
    }
}

#[test]
fn point_absorption() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.gen_range(2..=3);
        let f = random_support(&mut rng, n, 6, 5);
        let all: Vec<usize> = (0..n).collect();
        for face in pair_faces(&f, &support(&[&vec![0; n]]), &all).unwrap() {
            let a = &face.covector;
            let point = [pure_power(n, rng.gen_range(0..n), rng.gen_range(0..4))];
            let nu = normalized_volume(&face.vertices_f, a).unwrap();
            assert_eq!(mixed_volume_sum(&face.vertices_f, &point, a).unwrap(), nu);
            assert_eq!(mixed_volume_sum(&point, &face.vertices_f, a).unwrap(), nu);
        }
    }
}

#[test]
fn translation_and_permutation_invariance() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..100 {
        let f = random_support(&mut rng, 3, 6, 4);
        for face in pair_faces(&f, &support(&[&[0, 0, 0]]), &[0, 1, 2]).unwrap() {
            let a = &face.covector;
            let nu = normalized_volume(&face.vertices_f, a).unwrap();
            let shift: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
            let moved: Vec<Exponent> =
                face.vertices_f.iter().map(|e| Exponent(e.0.iter().zip(&shift).map(|(x, s)| x + s).collect())).collect();
            assert_eq!(normalized_volume(&moved, a).unwrap(), nu);
            let swapped: Vec<Exponent> = face.vertices_f.iter().map(|e| Exponent(vec![e.0[2], e.0[0], e.0[1]])).collect();
            let b = Covector::full(vec![a.entries[2], a.entries[0], a.entries[1]]).unwrap();
            assert_eq!(normalized_volume(&swapped, &b).unwrap(), nu);
        }
    }
}

#[test]
fn kouchnirenko_examples() {
    assert_eq!(kouchnirenko_mu(&support(&[&[2, 0], &[0, 3]])).unwrap(), 2);
    assert_eq!(kouchnirenko_mu(&support(&[&[7]])).unwrap(), 6);
    for n in 1..=3 {
        for d in 2..=4 {
            assert_eq!(kouchnirenko_mu(&simplex(n, d)).unwrap(), (d as u64 - 1).pow(n as u32));
        }
    }
    assert_eq!(kouchnirenko_mu(&support(&[&[2, 1], &[0, 3]])), Err(NewtonError::NotConvenient(0)));
}

#[test]
fn small_named_supports() {
    let a11 = Covector::full(vec![1, 1]).unwrap();
    assert_eq!(pair_face_normals(&support(&[&[5, 0]]), &support(&[&[3, 0], &[0, 3]]), &[0, 1]).unwrap(), vec![a11.clone()]);
    assert!(pair_face_normals(&support(&[&[4, 0]]), &support(&[&[0, 4]]), &[0, 1]).unwrap().is_empty());
    assert_eq!(mixed_volume_sum(&[Exponent(vec![5, 0])], &[Exponent(vec![3, 0]), Exponent(vec![0, 3])], &a11).unwrap(), 3);
    assert_eq!(diagram_vertices(&support(&[&[0, 1], &[0, 2], &[0, 3]]), &[0, 1]).unwrap(), support(&[&[0, 1]]));
}

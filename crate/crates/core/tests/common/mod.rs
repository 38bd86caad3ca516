//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use arrcalc::arrangement::{build_intersection_lattice, Arrangement, Hyperplane, IntersectionLattice};
use arrcalc::numeric::{Field, FieldElem, Matrix, Rat};
use arrcalc::singularity::{Order, WeightedArrangement};
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub fn q(n: i64) -> FieldElem {
    FieldElem::from_int(Field::Rational, n)
}

fn proportional(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] * b[j] == a[j] * b[i]))
}

/// Random integer normals in `[-2, 2]^n`, nonzero and pairwise non-proportional.
pub fn random_normals(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 200 {
        attempts += 1;
        // Sparse coordinates give many non-generic intersections.
        let v: Vec<i64> = (0..n)
            .map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-2..=2) })
            .collect();
        if v.iter().all(|&x| x == 0) || out.iter().any(|w| proportional(w, &v)) {
            continue;
        }
        out.push(v);
    }
    out
}

pub fn arrangement(n: usize, normals: &[Vec<i64>]) -> Arrangement {
    let hs = normals
        .iter()
        .enumerate()
        .map(|(i, v)| Hyperplane::new(format!("H{}", i + 1), v.iter().map(|&x| q(x)).collect()))
        .collect();
    Arrangement::new(Field::Rational, n, hs).expect("valid arrangement")
}

pub fn random_lattice(rng: &mut ChaCha8Rng, max_n: usize, max_h: usize) -> (Vec<Vec<i64>>, IntersectionLattice) {
    let n = rng.gen_range(1..=max_n);
    let count = rng.gen_range(0..=max_h);
    let normals = random_normals(rng, n, count);
    let l = build_intersection_lattice(&arrangement(n, &normals));
    (normals, l)
}

pub fn random_weighted(rng: &mut ChaCha8Rng, max_n: usize, max_h: usize) -> WeightedArrangement {
    let (normals, l) = random_lattice(rng, max_n, max_h);
    let orders = normals
        .iter()
        .map(|_| Some(Order::Finite(rng.gen_range(2..=12))))
        .collect();
    WeightedArrangement::new(l, orders, Vec::new()).expect("weights for every hyperplane")
}

/// Rank of an integer matrix by plain fraction Gaussian elimination.
pub fn rank(rows: &[&Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Every flat as `(members, codim)`, found by intersecting every subset of
/// hyperplanes and closing up: `H` contains `⋂S` iff adding it keeps the rank.
pub fn brute_force_flats(normals: &[Vec<i64>]) -> BTreeSet<(Vec<usize>, usize)> {
    let k = normals.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << k) {
        let subset: Vec<&Vec<i64>> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &normals[i]).collect();
        let r = rank(&subset);
        let members: Vec<usize> = (0..k)
            .filter(|&i| {
                let mut with = subset.clone();
                with.push(&normals[i]);
                rank(&with) == r
            })
            .collect();
        out.insert((members, r));
    }
    out
}

pub fn lattice_flats(l: &IntersectionLattice) -> BTreeSet<(Vec<usize>, usize)> {
    l.flats().iter().map(|f| (f.members.clone(), f.codim)).collect()
}

/// Every strict chain of proper flats, by checking all subsets for total order.
pub fn brute_force_chains(l: &IntersectionLattice) -> BTreeSet<Vec<usize>> {
    let proper: Vec<usize> = l.proper_flats().map(|f| f.index).collect();
    assert!(proper.len() <= 20, "too many flats for the subset oracle");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << proper.len()) {
        let mut chosen: Vec<usize> = (0..proper.len()).filter(|i| mask >> i & 1 == 1).map(|i| proper[i]).collect();
        // Smaller flats have larger codimension.
        chosen.sort_by_key(|&i| std::cmp::Reverse(l.flat(i).unwrap().codim));
        if chosen.windows(2).all(|w| l.is_subflat(w[0], w[1]).unwrap() && w[0] != w[1]) {
            out.insert(chosen);
        }
    }
    out
}

/// Inertia of a Hermitian matrix from the characteristic polynomial of its
/// real doubling. All roots are real, so Descartes' rule of signs is exact.
pub fn charpoly_signature(g: &Matrix) -> (usize, usize, usize) {
    let n = g.rows();
    let d = Rat::from_integer(g.field().d().into());
    // G = P + i sqrt(d) Q realifies to [[P, -sqrt(d) Q], [sqrt(d) Q, P]] with
    // doubled inertia. Congruence by diag(I, sqrt(d) I) makes it rational:
    // [[P, -dQ], [dQ, dP]].
    let m = 2 * n;
    let mut a = vec![vec![Rat::zero(); m]; m];
    for i in 0..n {
        for j in 0..n {
            let p = g.get(i, j).re().clone();
            let s = g.get(i, j).im().clone();
            a[i][j] = p.clone();
            a[i][n + j] = -(&s * &d);
            a[n + i][j] = &s * &d;
            a[n + i][n + j] = &p * &d;
        }
    }
    let size = if d.is_zero() { n } else { m };
    let a: Vec<Vec<Rat>> = a.into_iter().take(size).map(|r| r.into_iter().take(size).collect()).collect();
    let c = faddeev_leverrier(&a);
    let (pos, neg, zero) = descartes(&c);
    if d.is_zero() {
        (pos, neg, zero)
    } else {
        (pos / 2, neg / 2, zero / 2)
    }
}

/// Coefficients `c[k]` of `det(xI - A) = sum c[k] x^k`.
fn faddeev_leverrier(a: &[Vec<Rat>]) -> Vec<Rat> {
    let n = a.len();
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::from_integer(1.into());
    let mut mk = vec![vec![Rat::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rat::zero();
                for l in 0..n {
                    s += &a[i][l] * &mk[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &c[n - k + 1];
        }
        mk = next;
        let mut tr = Rat::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        c[n - k] = -tr / Rat::from_integer((k as i64).into());
    }
    c
}

/// Positive, negative and zero root counts of a real-rooted polynomial.
fn descartes(c: &[Rat]) -> (usize, usize, usize) {
    let zero = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
    let trimmed = &c[zero..];
    let changes = |coeffs: Vec<Rat>| {
        let signs: Vec<bool> = coeffs.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let pos = changes(trimmed.to_vec());
    let neg = changes(
        trimmed
            .iter()
            .enumerate()
            .map(|(k, x)| if k % 2 == 1 { -x.clone() } else { x.clone() })
            .collect(),
    );
    (pos, neg, zero)
}

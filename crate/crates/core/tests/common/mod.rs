//! Oracles and generators shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use multibranched::graphs::Multigraph;
use multibranched::homology::IntegerMatrix;

/// Fraction-free Gaussian elimination (Bareiss) on a copy of `m`; returns
/// the rank and, for square input, the determinant.
pub fn bareiss(m: &IntegerMatrix) -> (usize, Option<i128>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<i128>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    let mut prev = 1i128;
    let mut sign = 1i128;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    let det = (rows == cols).then(|| {
        if rank == rows {
            sign * a[rows - 1][cols - 1]
        } else {
            0
        }
    });
    (rank, det)
}

/// All connected multigraphs (loops and parallel edges allowed, no
/// isolated vertices) with at most `max_vertices` vertices and
/// `max_edges` edges, one per isomorphism class.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for e in 1..=max_edges {
            multisets(pairs.len(), e, &mut |choice| {
                let edges: Vec<(usize, usize)> = choice.iter().map(|&k| pairs[k]).collect();
                if !connected(n, &edges) {
                    return;
                }
                let canon = perms
                    .iter()
                    .map(|p| {
                        let mut relabeled: Vec<(usize, usize)> = edges
                            .iter()
                            .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                            .collect();
                        relabeled.sort_unstable();
                        relabeled
                    })
                    .min()
                    .expect("at least the identity");
                if seen.insert(canon) {
                    out.push(Multigraph::from_pairs(n, &edges));
                }
            });
        }
    }
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Calls `visit` with every nondecreasing sequence of `len` values below `k`.
fn multisets(k: usize, len: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(
        k: usize,
        len: usize,
        start: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == len {
            visit(cur);
            return;
        }
        for x in start..k {
            cur.push(x);
            go(k, len, x, cur, visit);
            cur.pop();
        }
    }
    go(k, len, 0, &mut Vec::new(), visit);
}

pub fn is_tree(g: &Multigraph) -> bool {
    g.is_connected() && g.edges.len() + 1 == g.vertices.len()
}

/// Entries of `m` reduced into `0..p`.
pub fn reduce(m: &IntegerMatrix, p: i128) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.rem_euclid(p)).collect())
        .collect()
}

/// Product of matrices already reduced mod `p`; `p` must be below `2^62`.
pub fn mul_mod(a: &[Vec<i128>], b: &[Vec<i128>], p: i128) -> Vec<Vec<i128>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(0, |acc, (x, r)| (acc + x * r[j]) % p)
                })
                .collect()
        })
        .collect()
}

/// Determinant of a square matrix mod a prime `p` below `2^62`.
pub fn det_mod(m: &[Vec<i128>], p: i128) -> i128 {
    let mut a = m.to_vec();
    let n = a.len();
    let mut det = 1;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if r != c {
            a.swap(r, c);
            det = p - det;
        }
        det = det * a[c][c] % p;
        let inv = pow_mod(a[c][c], p - 2, p);
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            let f = row[c] * inv % p;
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                *x = (*x - f * y % p).rem_euclid(p);
            }
        }
    }
    det % p
}

fn pow_mod(mut b: i128, mut e: i128, p: i128) -> i128 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

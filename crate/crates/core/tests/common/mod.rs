//! Independent oracles and random generators shared by the integration tests.
//!
//! The oracles avoid the library's linear algebra: ranks and kernels are
//! computed modulo the prime 2^61 - 1. For ±1/0 matrices of order n ≤ 25 the
//! Hadamard bound keeps every minor below that prime, so rank and zero
//! patterns of kernel vectors agree with exact rational arithmetic.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use signed_nut::io::parse_graph6;
use signed_nut::{Sign, SignedGraph};

pub const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn residue(v: i64) -> u64 {
    v.rem_euclid(P as i64) as u64
}

/// Dense signed adjacency matrix built straight from the edge list.
pub fn dense(g: &SignedGraph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut a = vec![vec![0i64; n]; n];
    for ((u, v), s) in g.signed_edges() {
        let w = if s.is_negative() { -1 } else { 1 };
        a[u][v] = w;
        a[v][u] = w;
    }
    a
}

/// Reduced row echelon form modulo `P`; returns the pivot columns.
fn rref(m: &mut [Vec<u64>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let f = inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = mul(*x, f);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + P - mul(f, y)) % P;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn nullity(g: &SignedGraph) -> usize {
    let mut m: Vec<Vec<u64>> = dense(g).into_iter().map(|r| r.into_iter().map(residue).collect()).collect();
    g.order() - rref(&mut m).len()
}

/// Kernel basis modulo `P`, one vector per free column.
pub fn kernel_mod_p(g: &SignedGraph) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut m: Vec<Vec<u64>> = dense(g).into_iter().map(|r| r.into_iter().map(residue).collect()).collect();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (P - m[r][f]) % P;
            }
            v
        })
        .collect()
}

pub fn connected(g: &SignedGraph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let a = dense(g);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if a[u][v] != 0 && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Nut test: connected, nullity one, kernel vector nowhere zero.
pub fn is_nut(g: &SignedGraph) -> bool {
    if g.order() < 2 || !connected(g) {
        return false;
    }
    let k = kernel_mod_p(g);
    k.len() == 1 && k[0].iter().all(|&x| x != 0)
}

/// Whether every vertex lies in the support of some kernel vector.
pub fn is_core(g: &SignedGraph) -> bool {
    let k = kernel_mod_p(g);
    !k.is_empty() && (0..g.order()).all(|i| k.iter().any(|v| v[i] != 0))
}

/// Balance via union-find with parity: each edge asks its endpoints to be on
/// the same side (positive) or opposite sides (negative) of a bipartition.
pub fn balanced(g: &SignedGraph) -> bool {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut parity = vec![0u8; n];
    fn find(parent: &mut [usize], parity: &mut [u8], v: usize) -> (usize, u8) {
        if parent[v] == v {
            return (v, 0);
        }
        let (root, p) = find(parent, parity, parent[v]);
        parity[v] ^= p;
        parent[v] = root;
        (root, parity[v])
    }
    for ((a, b), s) in g.signed_edges() {
        let want = u8::from(s.is_negative());
        let (ra, pa) = find(&mut parent, &mut parity, a);
        let (rb, pb) = find(&mut parent, &mut parity, b);
        if ra == rb {
            if pa ^ pb != want {
                return false;
            }
        } else {
            parent[ra] = rb;
            parity[ra] = pa ^ pb ^ want;
        }
    }
    true
}

/// Balance by trying every switching set; exponential, for cross-checks only.
pub fn balanced_brute(g: &SignedGraph) -> bool {
    let n = g.order();
    assert!(n <= 20);
    let edges: Vec<((usize, usize), bool)> = g.signed_edges().map(|(e, s)| (e, s.is_negative())).collect();
    (0u32..1 << n).any(|u| {
        edges
            .iter()
            .all(|&((a, b), neg)| neg == ((u >> a & 1) != (u >> b & 1)))
    })
}

/// Random graph on `n` vertices with edge probability `p`, random signs.
pub fn random_signed(rng: &mut impl Rng, n: usize, p: f64, negative: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push(((u, v), Sign::from_negative(rng.gen_bool(negative))));
            }
        }
    }
    SignedGraph::with_signs(n, edges).expect("valid random graph")
}

/// Random connected signed graph: a random spanning tree plus extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> SignedGraph {
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let signed: Vec<_> = edges
        .into_iter()
        .map(|e| (e, Sign::from_negative(rng.gen_bool(0.5))))
        .collect();
    SignedGraph::with_signs(n, signed).expect("valid random graph")
}

pub fn complete(n: usize) -> SignedGraph {
    SignedGraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn catalogue(rel: &str) -> Vec<SignedGraph> {
    let path = fixtures().join(rel);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim()).expect("catalogue line"))
        .collect()
}

//! Explicit constructions: the signed Fowler vertex expansion and the signed
//! nut graphs on complete graphs of order `4k + 1`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::classify::satisfies_local_condition;
use crate::error::{GraphError, LinalgError};
use crate::graph::{Sign, SignedGraph};

/// `F(Γ, v)`: the star at `v` replaced by a gadget on `2ρ` new vertices.
///
/// With `u_1 < … < u_ρ` the neighbors of `v`, vertex `q_i` is numbered
/// `n + i - 1` and `p_i` is `n + ρ + i - 1`. The edges `v u_i` are removed and
/// `v q_i`, `q_i p_j` (`i ≠ j`) added with sign `+1`, and `p_i u_i` added with
/// the sign `v u_i` had. Every other edge keeps its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FowlerExpansion {
    pub source: SignedGraph,
    pub pivot: usize,
    pub neighbors: Vec<usize>,
    pub q: Vec<usize>,
    pub p: Vec<usize>,
    pub result: SignedGraph,
}

impl FowlerExpansion {
    pub fn degree(&self) -> usize {
        self.neighbors.len()
    }
}

pub fn fowler(g: &SignedGraph, pivot: usize) -> Result<FowlerExpansion, GraphError> {
    let n = g.order();
    if pivot >= n {
        return Err(GraphError::VertexOutOfRange { vertex: pivot, order: n });
    }
    let neighbors = g.neighbors(pivot).to_vec();
    let rho = neighbors.len();
    if rho < 2 {
        return Err(GraphError::Domain(format!(
            "pivot {pivot} has degree {rho}; the expansion needs degree at least 2"
        )));
    }
    let q: Vec<usize> = (n..n + rho).collect();
    let p: Vec<usize> = (n + rho..n + 2 * rho).collect();
    let mut edges: Vec<((usize, usize), Sign)> = g
        .signed_edges()
        .filter(|&((a, b), _)| a != pivot && b != pivot)
        .collect();
    for i in 0..rho {
        let s = g.sign(pivot, neighbors[i]).expect("pivot edge");
        edges.push(((pivot, q[i]), Sign::Positive));
        edges.push(((p[i], neighbors[i]), s));
        for (j, &pj) in p.iter().enumerate() {
            if i != j {
                edges.push(((q[i], pj), Sign::Positive));
            }
        }
    }
    let result = SignedGraph::with_signs(n + 2 * rho, edges)?;
    Ok(FowlerExpansion {
        source: g.clone(),
        pivot,
        neighbors,
        q,
        p,
        result,
    })
}

/// Carries a kernel vector of the source to a kernel vector of the expansion:
/// `x'(v) = -(ρ-1)·x(v)`, `x'(q_i) = σ(v u_i)·x(u_i)`, `x'(p_i) = x(v)`, and
/// `x'(w) = x(w)` elsewhere.
pub fn transport_eigenvector(e: &FowlerExpansion, x: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
    let n = e.source.order();
    if x.len() != n {
        return Err(LinalgError::Dimension { expected: n, got: x.len() });
    }
    let image = e.source.adjacency_matrix().mul_vec(x)?;
    if let Some(row) = image.iter().position(|y| !y.is_zero()) {
        return Err(LinalgError::NotInKernel(row));
    }
    let rho = e.degree();
    let xv = &x[e.pivot];
    let mut out = Vec::with_capacity(n + 2 * rho);
    out.extend_from_slice(x);
    out[e.pivot] = -(xv * BigInt::from(rho - 1));
    for &u in &e.neighbors {
        let s = e.source.sign(e.pivot, u).expect("pivot edge");
        out.push(if s.is_negative() { -&x[u] } else { x[u].clone() });
    }
    out.extend(std::iter::repeat_n(xv.clone(), rho));
    let check = e.result.adjacency_matrix().mul_vec(&out)?;
    if let Some(row) = check.iter().position(|y| !y.is_zero()) {
        return Err(LinalgError::NotInKernel(row));
    }
    Ok(out)
}

/// Signed nut graph on `K_{4k+1}` with its kernel vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteNut {
    pub k: usize,
    pub graph: SignedGraph,
    pub eigenvector: Vec<BigInt>,
}

/// Vertex 0 is the apex; block `j` occupies `4j+1..=4j+4` and its three path
/// edges are the only negative edges.
pub fn complete_nut(k: usize) -> Result<CompleteNut, GraphError> {
    if k < 1 {
        return Err(GraphError::Domain("complete_nut needs k >= 1".into()));
    }
    let n = 4 * k + 1;
    let negative = (0..k).flat_map(|j| {
        let b = 4 * j + 1;
        [(b, b + 1), (b + 1, b + 2), (b + 2, b + 3)]
    });
    let graph = SignedGraph::with_negative_edges(
        n,
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))),
        negative,
    )?;
    let mut eigenvector = vec![BigInt::from(1)];
    for _ in 0..k {
        eigenvector.extend([-1, 1, 1, -1].map(BigInt::from));
    }
    Ok(CompleteNut { k, graph, eigenvector })
}

/// A real number `rational + coeff·√radicand` with square-free `radicand`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    pub rational: i64,
    pub coeff: i64,
    pub radicand: u64,
}

impl QuadraticSurd {
    /// `rational + coeff·√r`, normalized so the radicand is square-free.
    pub fn new(rational: i64, coeff: i64, r: u64) -> Self {
        let mut radicand = r;
        let mut scale = 1i64;
        let mut f = 2u64;
        while f * f <= radicand {
            while radicand.is_multiple_of(f * f) {
                radicand /= f * f;
                scale *= f as i64;
            }
            f += 1;
        }
        let (rational, coeff, radicand) = match (coeff * scale, radicand) {
            (0, _) => (rational, 0, 1),
            (c, 1) => (rational + c, 0, 1),
            (c, r) => (rational, c, r),
        };
        QuadraticSurd { rational, coeff, radicand }
    }

    pub fn value(&self) -> f64 {
        self.rational as f64 + self.coeff as f64 * (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = |c: i64| match c.abs() {
            1 => format!("√{}", self.radicand),
            a => format!("{a}√{}", self.radicand),
        };
        match (self.rational, self.coeff) {
            (r, 0) => write!(f, "{r}"),
            (0, c) if c < 0 => write!(f, "-{}", root(c)),
            (0, c) => f.write_str(&root(c)),
            (r, c) => write!(f, "{r}{}{}", if c < 0 { "-" } else { "+" }, root(c)),
        }
    }
}

/// Closed-form adjacency spectrum of [`complete_nut`]`(k)`:
/// `2(k-1) ± √(4k(k-1)+5)` once each, `±√5` with multiplicity `k`,
/// `±√5 - 2` with multiplicity `k-1`, and `0` once. Coincident values are
/// merged; entries are sorted by value.
pub fn complete_nut_spectrum(k: usize) -> Result<Vec<(QuadraticSurd, usize)>, GraphError> {
    if k < 1 {
        return Err(GraphError::Domain("complete_nut_spectrum needs k >= 1".into()));
    }
    let ki = k as i64;
    let disc = 4 * k as u64 * (k as u64 - 1) + 5;
    let branches = [
        (QuadraticSurd::new(2 * (ki - 1), 1, disc), 1),
        (QuadraticSurd::new(2 * (ki - 1), -1, disc), 1),
        (QuadraticSurd::new(0, 1, 5), k),
        (QuadraticSurd::new(0, -1, 5), k),
        (QuadraticSurd::new(-2, 1, 5), k - 1),
        (QuadraticSurd::new(-2, -1, 5), k - 1),
        (QuadraticSurd::new(0, 0, 1), 1),
    ];
    let mut merged: Vec<(QuadraticSurd, usize)> = Vec::new();
    for (value, mult) in branches {
        if mult == 0 {
            continue;
        }
        match merged.iter_mut().find(|(v, _)| *v == value) {
            Some((_, m)) => *m += mult,
            None => merged.push((value, mult)),
        }
    }
    merged.sort_by(|a, b| a.0.value().partial_cmp(&b.0.value()).unwrap_or(Ordering::Equal));
    Ok(merged)
}

/// Outcome of checking the equal-labeling relation on a vertex pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelingCheck {
    pub x_u_private: BigInt,
    pub x_v_private: BigInt,
    pub private_signs_agree: bool,
    pub abs_equal: bool,
    pub values_equal: bool,
    pub sign_law_holds: bool,
}

impl LabelingCheck {
    pub fn passed(&self) -> bool {
        self.abs_equal && self.sign_law_holds
    }
}

/// For non-adjacent `u`, `v` of equal degree `ρ` sharing `ρ - 1` neighbors,
/// with private neighbors `u_private`, `v_private` and `σ(uw) = σ(wv)` on the
/// shared ones: checks `|x(u')| = |x(v')|` and that `x(u') = x(v')` exactly
/// when `σ(uu') = σ(vv')`. The sign law is vacuous when both entries are zero.
pub fn check_equiv_labeling(
    g: &SignedGraph,
    x: &[BigInt],
    u: usize,
    v: usize,
    u_private: usize,
    v_private: usize,
) -> Result<LabelingCheck, GraphError> {
    let n = g.order();
    for w in [u, v, u_private, v_private] {
        if w >= n {
            return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
        }
    }
    let fail = |clause: &str| Err(GraphError::Precondition(clause.to_string()));
    if x.len() != n || !satisfies_local_condition(g, x) {
        return fail("x is not a kernel vector");
    }
    if u == v || g.edge_index(u, v).is_some() {
        return fail("u and v must be distinct and non-adjacent");
    }
    if g.degree(u) != g.degree(v) {
        return fail("u and v must have the same degree");
    }
    let nu = g.neighbors(u);
    let nv = g.neighbors(v);
    if !nu.contains(&u_private) || nv.contains(&u_private) {
        return fail("u' must be a neighbor of u and not of v");
    }
    if !nv.contains(&v_private) || nu.contains(&v_private) {
        return fail("v' must be a neighbor of v and not of u");
    }
    let shared: Vec<usize> = nu.iter().copied().filter(|&w| w != u_private).collect();
    let shared_v: Vec<usize> = nv.iter().copied().filter(|&w| w != v_private).collect();
    if shared != shared_v {
        return fail("u and v must share exactly deg - 1 neighbors");
    }
    if shared.iter().any(|&w| g.sign(u, w) != g.sign(w, v)) {
        return fail("sigma(uw) must equal sigma(wv) on every shared neighbor");
    }
    let a = x[u_private].clone();
    let b = x[v_private].clone();
    let private_signs_agree = g.sign(u, u_private) == g.sign(v, v_private);
    let values_equal = a == b;
    let abs_equal = a.abs() == b.abs();
    let sign_law_holds = (a.is_zero() && b.is_zero()) || values_equal == private_signs_agree;
    Ok(LabelingCheck {
        x_u_private: a,
        x_v_private: b,
        private_signs_agree,
        abs_equal,
        values_equal,
        sign_law_holds,
    })
}

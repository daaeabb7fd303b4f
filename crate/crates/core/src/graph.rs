//! Signed graphs, switching, and switching-class bookkeeping.
//!
//! A [`SignedGraph`] is a simple undirected graph on vertices `0..n` together
//! with a sign on every edge. Edges are stored as `(min, max)` pairs in
//! lexicographic order, and that order is shared by every module that
//! addresses edges by index (sign masks, class enumeration, serialization).
//!
//! Switching at a vertex set `U` flips the sign of every edge with exactly one
//! endpoint in `U`. For a connected graph every switching class contains
//! exactly one signing whose spanning tree is all-positive; the breadth-first
//! tree from vertex 0 used here makes that representative deterministic.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::GraphError;
use crate::linalg::IntMatrix;

/// Sign of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_negative(negative: bool) -> Self {
        if negative {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// Product of two signs.
    pub fn times(self, other: Sign) -> Sign {
        Sign::from_negative(self.is_negative() != other.is_negative())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// A simple graph with a sign on every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
    signs: Vec<Sign>,
    neighbors: Vec<Vec<usize>>,
}

impl SignedGraph {
    /// Builds an all-positive graph. Edge endpoints may be given in either order.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_signs(order, edges.into_iter().map(|e| (e, Sign::Positive)))
    }

    /// Builds a signed graph from `(edge, sign)` pairs.
    pub fn with_signs<I>(order: usize, signed_edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = ((usize, usize), Sign)>,
    {
        let mut pairs = Vec::new();
        for ((a, b), sign) in signed_edges {
            for v in [a, b] {
                if v >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: v, order });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            pairs.push(((a.min(b), a.max(b)), sign));
        }
        pairs.sort_unstable_by_key(|&(e, _)| e);
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(GraphError::DuplicateEdge(w[0].0 .0, w[0].0 .1));
            }
        }
        let (edges, signs) = pairs.into_iter().unzip();
        Ok(Self::from_sorted(order, edges, signs))
    }

    /// Builds a signed graph where the listed edges are negative and all other
    /// edges positive.
    pub fn with_negative_edges<I, J>(order: usize, edges: I, negative: J) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
        J: IntoIterator<Item = (usize, usize)>,
    {
        let g = Self::new(order, edges)?;
        let mut signs = vec![Sign::Positive; g.edge_count()];
        for (a, b) in negative {
            let idx = g
                .edge_index(a, b)
                .ok_or_else(|| GraphError::Domain(format!("{{{a}, {b}}} is not an edge")))?;
            signs[idx] = Sign::Negative;
        }
        g.with_edge_signs(signs)
    }

    // `edges` must already be sorted, deduplicated and normalized.
    pub(crate) fn from_sorted(order: usize, edges: Vec<(usize, usize)>, signs: Vec<Sign>) -> Self {
        debug_assert_eq!(edges.len(), signs.len());
        let mut neighbors = vec![Vec::new(); order];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        SignedGraph {
            order,
            edges,
            signs,
            neighbors,
        }
    }

    /// The same underlying graph with a new sign vector (indexed like [`edges`](Self::edges)).
    pub fn with_edge_signs(&self, signs: Vec<Sign>) -> Result<Self, GraphError> {
        if signs.len() != self.edges.len() {
            return Err(GraphError::SignCount {
                expected: self.edges.len(),
                got: signs.len(),
            });
        }
        Ok(SignedGraph {
            order: self.order,
            edges: self.edges.clone(),
            signs,
            neighbors: self.neighbors.clone(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic `(min, max)` order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Signs, indexed like [`edges`](Self::edges).
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn signed_edges(&self) -> impl Iterator<Item = ((usize, usize), Sign)> + '_ {
        self.edges.iter().copied().zip(self.signs.iter().copied())
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.signed_edges()
            .filter(|(_, s)| s.is_negative())
            .map(|(e, _)| e)
            .collect()
    }

    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().all(|s| !s.is_negative())
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Sorted degree multiset.
    pub fn degree_profile(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// `Some(ρ)` if every vertex has degree ρ.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.neighbors.first()?.len();
        self.neighbors
            .iter()
            .all(|n| n.len() == first)
            .then_some(first)
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn sign(&self, a: usize, b: usize) -> Option<Sign> {
        self.edge_index(a, b).map(|i| self.signs[i])
    }

    /// The underlying graph with all signs erased (all positive).
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph {
            order: self.order,
            edges: self.edges.clone(),
            signs: vec![Sign::Positive; self.edges.len()],
            neighbors: self.neighbors.clone(),
        }
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.order == other.order && self.edges == other.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order
    }

    /// Symmetric `{-1, 0, +1}` adjacency matrix with zero diagonal.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.order, self.order);
        for ((u, v), s) in self.signed_edges() {
            m.set(u, v, s.value());
            m.set(v, u, s.value());
        }
        m
    }

    /// Switching at `set`: flips every edge with exactly one endpoint in the set.
    pub fn switch(&self, set: &SwitchingSet) -> Result<SignedGraph, GraphError> {
        if set.order() != self.order {
            return Err(GraphError::Domain(format!(
                "switching set is over {} vertices, graph has {}",
                set.order(),
                self.order
            )));
        }
        let side = set.indicator();
        let signs = self
            .signed_edges()
            .map(|((u, v), s)| if side[u] != side[v] { s.flip() } else { s })
            .collect();
        self.with_edge_signs(signs)
    }

    /// Breadth-first spanning tree rooted at 0, neighbors visited in ascending order.
    pub fn spanning_tree(&self) -> Result<SpanningTree, GraphError> {
        let forest = SpanningTree::forest(self);
        if forest.roots > 1 {
            return Err(GraphError::Disconnected);
        }
        Ok(forest)
    }

    /// The unique member of the switching class whose spanning-tree edges are
    /// all positive, with the switching that produces it.
    pub fn tree_positive_representative(&self) -> Result<(SignedGraph, SwitchingSet), GraphError> {
        let tree = self.spanning_tree()?;
        Ok(self.tree_positive_with(&tree))
    }

    // Works on forests too, in which case each component is normalized independently.
    fn tree_positive_with(&self, tree: &SpanningTree) -> (SignedGraph, SwitchingSet) {
        // odd[v]: odd number of negative tree edges on the root path of v
        let mut odd = vec![false; self.order];
        for &v in &tree.bfs_order {
            if let Some(p) = tree.parent[v] {
                let s = self.sign(p, v).expect("tree edge is a graph edge");
                odd[v] = odd[p] != s.is_negative();
            }
        }
        let set = SwitchingSet::from_indicator(&odd);
        let rep = self.switch(&set).expect("set built for this graph");
        (rep, set)
    }

    /// Whether the graph is switching equivalent to its all-positive signing.
    pub fn is_traditional(&self) -> Result<bool, GraphError> {
        let (rep, _) = self.tree_positive_representative()?;
        Ok(rep.is_all_positive())
    }

    /// Balance test that also accepts disconnected graphs (component-wise).
    pub fn is_balanced(&self) -> bool {
        let forest = SpanningTree::forest(self);
        self.tree_positive_with(&forest).0.is_all_positive()
    }

    /// Iterates one tree-positive representative per switching class of the
    /// underlying graph; see [`ClassRepresentatives`].
    pub fn class_representatives(&self) -> Result<ClassRepresentatives, GraphError> {
        ClassRepresentatives::new(self)
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.order)?;
        for (i, ((u, v), s)) in self.signed_edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}{s}{v}")?;
        }
        f.write_str("]")
    }
}

/// Decides whether `b` is obtained from `a` by a switching, by testing the
/// edgewise sign product for balance. Both graphs must be connected.
pub fn switching_equivalent(a: &SignedGraph, b: &SignedGraph) -> Result<bool, GraphError> {
    if !a.same_underlying(b) {
        return Err(GraphError::UnderlyingMismatch);
    }
    let product = a
        .signs
        .iter()
        .zip(&b.signs)
        .map(|(&x, &y)| x.times(y))
        .collect();
    a.with_edge_signs(product)?.is_traditional()
}

/// A vertex subset defining a switching, stored in canonical form: the side
/// of the cut that does not contain vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SwitchingSet {
    order: usize,
    members: Vec<usize>,
}

impl SwitchingSet {
    pub fn new<I>(order: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut side = vec![false; order];
        for v in members {
            if v >= order {
                return Err(GraphError::VertexOutOfRange { vertex: v, order });
            }
            side[v] = true;
        }
        Ok(Self::from_indicator(&side))
    }

    /// The identity switching.
    pub fn empty(order: usize) -> Self {
        SwitchingSet {
            order,
            members: Vec::new(),
        }
    }

    pub(crate) fn from_indicator(side: &[bool]) -> Self {
        let flip = side.first().copied().unwrap_or(false);
        let members = side
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s != flip)
            .map(|(v, _)| v)
            .collect();
        SwitchingSet {
            order: side.len(),
            members,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonical members, ascending, never containing vertex 0.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn is_identity(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn indicator(&self) -> Vec<bool> {
        let mut side = vec![false; self.order];
        for &v in &self.members {
            side[v] = true;
        }
        side
    }

    /// Diagonal of the `±1` signature matrix `S`.
    pub fn signature(&self) -> Vec<i64> {
        self.indicator()
            .into_iter()
            .map(|s| if s { -1 } else { 1 })
            .collect()
    }
}

/// Spanning tree (or forest, internally) built by breadth-first search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    parent: Vec<Option<usize>>,
    in_tree: Vec<bool>,
    bfs_order: Vec<usize>,
    roots: usize,
}

impl SpanningTree {
    fn forest(g: &SignedGraph) -> Self {
        let n = g.order();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut in_tree = vec![false; g.edge_count()];
        let mut bfs_order = Vec::with_capacity(n);
        let mut roots = 0;
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            roots += 1;
            seen[root] = true;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                bfs_order.push(v);
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        in_tree[g.edge_index(v, w).expect("neighbor edge")] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningTree {
            parent,
            in_tree,
            bfs_order,
            roots,
        }
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Whether graph edge `idx` (lexicographic index) belongs to the tree.
    pub fn contains_edge_index(&self, idx: usize) -> bool {
        self.in_tree[idx]
    }

    /// Tree edges in lexicographic order.
    pub fn edges<'a>(&'a self, g: &'a SignedGraph) -> impl Iterator<Item = (usize, usize)> + 'a {
        g.edges()
            .iter()
            .zip(&self.in_tree)
            .filter(|(_, &t)| t)
            .map(|(&e, _)| e)
    }

    /// Lexicographic indices of the graph edges outside the tree.
    pub fn non_tree_edge_indices(&self) -> Vec<usize> {
        self.in_tree
            .iter()
            .enumerate()
            .filter(|(_, &t)| !t)
            .map(|(i, _)| i)
            .collect()
    }
}

/// One tree-positive signing per switching class.
///
/// Representative `mask` makes the `i`-th non-tree edge (lexicographic order)
/// negative iff bit `i` of `mask` is set; masks run `0..2^(m-n+1)` as a binary
/// counter, so mask 0 is the all-positive signing.
#[derive(Clone, Debug)]
pub struct ClassRepresentatives {
    base: SignedGraph,
    non_tree: Vec<usize>,
    next: u64,
    end: u64,
}

impl ClassRepresentatives {
    pub fn new(g: &SignedGraph) -> Result<Self, GraphError> {
        let base = g.underlying();
        let tree = base.spanning_tree()?;
        let non_tree = tree.non_tree_edge_indices();
        if non_tree.len() >= 64 {
            return Err(GraphError::Domain(format!(
                "{} non-tree edges: class space too large to enumerate",
                non_tree.len()
            )));
        }
        Ok(ClassRepresentatives {
            base,
            end: 1u64 << non_tree.len(),
            non_tree,
            next: 0,
        })
    }

    /// Number of classes, `2^(m-n+1)`.
    pub fn class_count(&self) -> u64 {
        self.end
    }

    /// Lexicographic edge indices of the non-tree edges, in mask bit order.
    pub fn non_tree_edges(&self) -> &[usize] {
        &self.non_tree
    }

    pub fn representative(&self, mask: u64) -> SignedGraph {
        let mut signs = vec![Sign::Positive; self.base.edge_count()];
        for (bit, &idx) in self.non_tree.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                signs[idx] = Sign::Negative;
            }
        }
        self.base.with_edge_signs(signs).expect("sign count matches")
    }

    /// Mask of the representative of `g`'s switching class.
    pub fn mask_of(&self, g: &SignedGraph) -> Result<u64, GraphError> {
        if !g.same_underlying(&self.base) {
            return Err(GraphError::UnderlyingMismatch);
        }
        let (rep, _) = g.tree_positive_representative()?;
        Ok(self
            .non_tree
            .iter()
            .enumerate()
            .filter(|&(_, &idx)| rep.signs()[idx].is_negative())
            .fold(0u64, |acc, (bit, _)| acc | 1 << bit))
    }
}

impl Iterator for ClassRepresentatives {
    type Item = SignedGraph;

    fn next(&mut self) -> Option<SignedGraph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.representative(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// `(2^m, 2^(m-n+1), 2^(n-1))`: signings, switching classes, and class size
/// for a connected graph.
pub fn count_signings(g: &SignedGraph) -> Result<(u128, u128, u128), GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let m = g.edge_count() as u32;
    let n = g.order() as u32;
    let pow = |e: u32| {
        1u128
            .checked_shl(e)
            .filter(|_| e < 128)
            .ok_or_else(|| GraphError::Domain(format!("2^{e} does not fit in 128 bits")))
    };
    Ok((pow(m)?, pow(m + 1 - n)?, pow(n.saturating_sub(1))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> SignedGraph {
        SignedGraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn brute_force_traditional(g: &SignedGraph) -> bool {
        let n = g.order();
        (0u32..1 << n).any(|bits| {
            let set = SwitchingSet::new(n, (0..n).filter(|v| bits >> v & 1 == 1)).unwrap();
            g.switch(&set).unwrap().is_all_positive()
        })
    }

    #[test]
    fn adjacency_of_triangles() {
        let c3 = cycle(3);
        let a = c3.adjacency_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.get(i, j), i64::from(i != j));
            }
        }
        let neg = SignedGraph::with_negative_edges(3, [(0, 1), (1, 2), (0, 2)], [(1, 0)]).unwrap();
        let a = neg.adjacency_matrix();
        assert_eq!(a.get(0, 1), -1);
        assert_eq!(a.get(1, 0), -1);
        assert_eq!(a.get(1, 2), 1);
        assert_eq!(a.get(0, 2), 1);

        let empty = SignedGraph::new(3, []).unwrap();
        assert!(empty.adjacency_matrix().data().iter().all(|&x| x == 0));
    }

    #[test]
    fn construction_rejects_non_simple_input() {
        assert_eq!(SignedGraph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            SignedGraph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            SignedGraph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        ));
    }

    #[test]
    fn switching_identities() {
        let g = SignedGraph::with_negative_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], [(0, 2)])
            .unwrap();
        assert_eq!(g.switch(&SwitchingSet::empty(4)).unwrap(), g);
        assert_eq!(g.switch(&SwitchingSet::new(4, 0..4).unwrap()).unwrap(), g);
        let u = SwitchingSet::new(4, [1, 2]).unwrap();
        assert_eq!(g.switch(&u).unwrap().switch(&u).unwrap(), g);
        assert!(matches!(
            SwitchingSet::new(4, [4]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn switching_set_canonical_form_drops_vertex_zero() {
        let a = SwitchingSet::new(5, [0, 2]).unwrap();
        let b = SwitchingSet::new(5, [1, 3, 4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.members(), &[1, 3, 4]);
        assert_eq!(a.signature(), vec![1, -1, 1, -1, -1]);
    }

    #[test]
    fn bfs_spanning_trees() {
        let path = SignedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let t = path.spanning_tree().unwrap();
        assert_eq!(t.edges(&path).collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let c4 = cycle(4);
        let t = c4.spanning_tree().unwrap();
        assert_eq!(t.edges(&c4).collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(t.parent(2), Some(1));
        assert_eq!(t.parent(0), None);

        let two_k2 = SignedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.spanning_tree(), Err(GraphError::Disconnected));
    }

    #[test]
    fn tree_positive_representative_of_triangle() {
        let g = SignedGraph::with_negative_edges(3, [(0, 1), (1, 2), (0, 2)], [(0, 1)]).unwrap();
        let (rep, set) = g.tree_positive_representative().unwrap();
        assert_eq!(rep.negative_edges(), vec![(1, 2)]);
        assert_eq!(set.members(), &[1]);

        // brute force: of the 4 switchings, exactly the one above is tree-positive
        let tree_positive: Vec<_> = (0u32..4)
            .map(|bits| {
                let set = SwitchingSet::new(3, (1..3).filter(|v| bits >> (v - 1) & 1 == 1)).unwrap();
                g.switch(&set).unwrap()
            })
            .filter(|h| h.sign(0, 1) == Some(Sign::Positive) && h.sign(0, 2) == Some(Sign::Positive))
            .collect();
        assert_eq!(tree_positive, vec![rep.clone()]);
        assert_eq!(rep.tree_positive_representative().unwrap(), (rep.clone(), SwitchingSet::empty(3)));

        let pos = cycle(5);
        assert_eq!(
            pos.tree_positive_representative().unwrap(),
            (pos.clone(), SwitchingSet::empty(5))
        );
    }

    #[test]
    fn every_c4_class_has_one_tree_positive_member() {
        let c4 = cycle(4);
        let tree = c4.spanning_tree().unwrap();
        let reps: Vec<SignedGraph> = c4.class_representatives().unwrap().collect();
        for bits in 0u32..16 {
            let signs = (0..4).map(|i| Sign::from_negative(bits >> i & 1 == 1)).collect();
            let g = c4.with_edge_signs(signs).unwrap();
            let hits = reps
                .iter()
                .filter(|r| switching_equivalent(&g, r).unwrap())
                .count();
            assert_eq!(hits, 1);
            let class_tree_positive = (0u32..8)
                .map(|b| SwitchingSet::new(4, (1..4).filter(|v| b >> (v - 1) & 1 == 1)).unwrap())
                .map(|u| g.switch(&u).unwrap())
                .filter(|h| tree.edges(h).all(|(x, y)| h.sign(x, y) == Some(Sign::Positive)))
                .count();
            assert_eq!(class_tree_positive, 1);
        }
    }

    #[test]
    fn traditional_examples() {
        assert!(complete(4).is_traditional().unwrap());
        let tri = SignedGraph::with_negative_edges(3, [(0, 1), (1, 2), (0, 2)], [(0, 2)]).unwrap();
        assert!(!tri.is_traditional().unwrap());
        let c4 = SignedGraph::with_negative_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [(0, 1), (2, 3)])
            .unwrap();
        assert!(c4.is_traditional().unwrap());
        assert!(c4.switch(&SwitchingSet::new(4, [1, 2]).unwrap()).unwrap().is_all_positive());
        let two_k2 = SignedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.is_traditional(), Err(GraphError::Disconnected));
        assert!(two_k2.is_balanced());
    }

    #[test]
    fn traditional_matches_brute_force_on_k4_signings() {
        let k4 = complete(4);
        for bits in 0u32..64 {
            let signs = (0..6).map(|i| Sign::from_negative(bits >> i & 1 == 1)).collect();
            let g = k4.with_edge_signs(signs).unwrap();
            assert_eq!(g.is_traditional().unwrap(), brute_force_traditional(&g));
        }
    }

    #[test]
    fn equivalence_examples() {
        let c3 = cycle(3);
        assert!(switching_equivalent(&c3, &c3).unwrap());
        let unbalanced = SignedGraph::with_negative_edges(3, [(0, 1), (1, 2), (0, 2)], [(1, 2)]).unwrap();
        assert!(!switching_equivalent(&c3, &unbalanced).unwrap());
        let u = SwitchingSet::new(3, [2]).unwrap();
        assert!(switching_equivalent(&unbalanced, &unbalanced.switch(&u).unwrap()).unwrap());
        assert_eq!(
            switching_equivalent(&c3, &cycle(4)),
            Err(GraphError::UnderlyingMismatch)
        );
    }

    #[test]
    fn representative_counts() {
        let tree = SignedGraph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let reps: Vec<_> = tree.class_representatives().unwrap().collect();
        assert_eq!(reps, vec![tree.clone()]);
        assert_eq!(cycle(3).class_representatives().unwrap().count(), 2);

        let k4 = complete(4);
        let reps: Vec<_> = k4.class_representatives().unwrap().collect();
        assert_eq!(reps.len(), 8);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!switching_equivalent(a, b).unwrap());
            }
        }
        let classes = k4.class_representatives().unwrap();
        let mut sizes = [0usize; 8];
        for bits in 0u32..64 {
            let signs = (0..6).map(|i| Sign::from_negative(bits >> i & 1 == 1)).collect();
            let g = k4.with_edge_signs(signs).unwrap();
            sizes[classes.mask_of(&g).unwrap() as usize] += 1;
        }
        assert_eq!(sizes, [8; 8]);

        let disconnected = SignedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(disconnected.class_representatives().is_err());
    }

    #[test]
    fn signing_counts() {
        assert_eq!(count_signings(&cycle(3)).unwrap(), (8, 2, 4));
        assert_eq!(count_signings(&complete(4)).unwrap(), (64, 8, 8));
        let star = SignedGraph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(count_signings(&star).unwrap(), (16, 1, 16));
    }
}

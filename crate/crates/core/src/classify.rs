//! Singular, core and nut predicates for signed graphs.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{SignedGraph, SwitchingSet};
use crate::linalg::{canonical_eigenvector, kernel_basis};

/// Where a signed graph sits relative to its all-positive signing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignedClass {
    /// Every edge is positive.
    AllPositiveInput,
    /// Switching equivalent to the all-positive signing (balanced).
    Traditional,
    /// Not switching equivalent to the all-positive signing.
    Proper,
}

impl SignedClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SignedClass::AllPositiveInput => "all-positive-input",
            SignedClass::Traditional => "traditional",
            SignedClass::Proper => "proper",
        }
    }

    pub fn is_proper(self) -> bool {
        self == SignedClass::Proper
    }
}

/// Classification verdict for one signed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NutReport {
    pub order: usize,
    pub edge_count: usize,
    pub degree_profile: Vec<usize>,
    pub connected: bool,
    pub nullity: usize,
    pub is_singular: bool,
    pub is_core: bool,
    pub is_nut: bool,
    pub signed_class: SignedClass,
    /// Coprime integer kernel vector, first entry positive; present iff nullity is 1.
    pub kernel_vector: Option<Vec<BigInt>>,
}

/// Classifies `g` with exact arithmetic. Graphs with fewer than two vertices
/// are rejected, and a disconnected graph is never reported as a nut.
pub fn classify(g: &SignedGraph) -> Result<NutReport, GraphError> {
    if g.order() < 2 {
        return Err(GraphError::OrderTooSmall(g.order(), 2));
    }
    let a = g.adjacency_matrix();
    let nullity = g.order() - a.rank();
    let connected = g.is_connected();
    let (is_core, kernel_vector) = if nullity == 0 {
        (false, None)
    } else {
        let basis = kernel_basis(&a.to_rational());
        debug_assert_eq!(basis.nullity(), nullity);
        let core = basis.support().iter().all(|&s| s);
        (core, canonical_eigenvector(&basis).ok())
    };
    let full = kernel_vector
        .as_ref()
        .is_some_and(|x| x.iter().all(|v| !v.is_zero()));
    let signed_class = if g.is_all_positive() {
        SignedClass::AllPositiveInput
    } else if g.is_balanced() {
        SignedClass::Traditional
    } else {
        SignedClass::Proper
    };
    Ok(NutReport {
        order: g.order(),
        edge_count: g.edge_count(),
        degree_profile: g.degree_profile(),
        connected,
        nullity,
        is_singular: nullity > 0,
        is_core,
        is_nut: nullity == 1 && full && connected,
        signed_class,
        kernel_vector,
    })
}

/// Whether the all-positive signing of `g`'s underlying graph is a nut graph.
pub fn is_unsigned_nut(g: &SignedGraph) -> Result<bool, GraphError> {
    Ok(classify(&g.underlying())?.is_nut)
}

/// Switches a signed nut graph at the negative entries of its kernel vector,
/// giving the unique class member whose kernel vector is entrywise positive.
pub fn positive_representative(g: &SignedGraph) -> Result<(SignedGraph, SwitchingSet), GraphError> {
    let report = classify(g)?;
    if !report.is_nut {
        return Err(GraphError::NotNut);
    }
    let x = report.kernel_vector.expect("nut has a kernel vector");
    let set = SwitchingSet::new(
        g.order(),
        x.iter()
            .enumerate()
            .filter(|(_, v)| v.is_negative())
            .map(|(i, _)| i),
    )?;
    Ok((g.switch(&set)?, set))
}

/// Checks `Σ_{u~v} σ(uv)·x(u) = 0` at every vertex `v`, walking neighbor lists.
pub fn satisfies_local_condition(g: &SignedGraph, x: &[BigInt]) -> bool {
    x.len() == g.order()
        && (0..g.order()).all(|v| {
            g.neighbors(v)
                .iter()
                .map(|&u| {
                    let s = g.sign(u, v).expect("neighbor edge");
                    if s.is_negative() {
                        -&x[u]
                    } else {
                        x[u].clone()
                    }
                })
                .sum::<BigInt>()
                .is_zero()
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::complete_nut;
    use crate::graph::switching_equivalent;

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> SignedGraph {
        SignedGraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn c4_is_core_but_not_nut() {
        let r = classify(&cycle(4)).unwrap();
        assert_eq!(r.nullity, 2);
        assert!(r.is_singular && r.is_core && !r.is_nut);
        assert_eq!(r.kernel_vector, None);
        assert_eq!(r.signed_class, SignedClass::AllPositiveInput);
    }

    #[test]
    fn c3_is_nonsingular() {
        let r = classify(&cycle(3)).unwrap();
        assert_eq!(r.nullity, 0);
        assert!(!r.is_singular && !r.is_core && !r.is_nut);
    }

    #[test]
    fn complete_nut_k1_report() {
        let g = complete_nut(1).unwrap().graph;
        let r = classify(&g).unwrap();
        assert!(r.is_nut);
        assert_eq!(r.signed_class, SignedClass::Proper);
        assert_eq!(r.kernel_vector, Some(ints(&[1, -1, 1, 1, -1])));
        assert_eq!(r.degree_profile, vec![4; 5]);
    }

    #[test]
    fn tiny_orders_are_rejected() {
        let k1 = SignedGraph::new(1, []).unwrap();
        assert_eq!(classify(&k1), Err(GraphError::OrderTooSmall(1, 2)));
    }

    #[test]
    fn disconnected_union_is_not_a_nut() {
        // two copies of the K5 nut: nullity 2
        let k = complete_nut(1).unwrap().graph;
        let shifted = k.signed_edges().map(|((u, v), s)| ((u + 5, v + 5), s));
        let g = SignedGraph::with_signs(10, k.signed_edges().chain(shifted)).unwrap();
        let r = classify(&g).unwrap();
        assert_eq!(r.nullity, 2);
        assert!(!r.is_nut && !r.connected);
    }

    #[test]
    fn positive_representative_of_k5_nut() {
        let g = complete_nut(1).unwrap().graph;
        let (rep, set) = positive_representative(&g).unwrap();
        assert_eq!(set.members(), &[1, 4]);
        assert_eq!(classify(&rep).unwrap().kernel_vector, Some(ints(&[1; 5])));
        assert!(switching_equivalent(&g, &rep).unwrap());

        let (again, id) = positive_representative(&rep).unwrap();
        assert!(id.is_identity());
        assert_eq!(again, rep);

        let hits = (0u32..16)
            .map(|b| SwitchingSet::new(5, (1..5).filter(|v| b >> (v - 1) & 1 == 1)).unwrap())
            .map(|u| g.switch(&u).unwrap())
            .filter(|h| {
                let r = classify(h).unwrap();
                r.kernel_vector.unwrap().iter().all(|x| x.is_positive())
            })
            .count();
        assert_eq!(hits, 1);

        assert_eq!(positive_representative(&cycle(4)), Err(GraphError::NotNut));
    }

    #[test]
    fn unsigned_nut_examples() {
        assert!(!is_unsigned_nut(&cycle(4)).unwrap());
        assert!(!is_unsigned_nut(&complete(5)).unwrap());
        // signs are ignored
        assert!(!is_unsigned_nut(&complete_nut(1).unwrap().graph).unwrap());
    }

    #[test]
    fn local_condition_check() {
        let g = complete_nut(1).unwrap().graph;
        assert!(satisfies_local_condition(&g, &ints(&[1, -1, 1, 1, -1])));
        assert!(!satisfies_local_condition(&g, &ints(&[1, 1, 1, 1, 1])));
        assert!(!satisfies_local_condition(&g, &ints(&[1, 1])));
    }
}

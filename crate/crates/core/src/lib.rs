//! Signed nut graphs: construction, classification and exhaustive search.
//!
//! A signed graph is a nut graph when its adjacency matrix has nullity one and
//! the kernel is spanned by a nowhere-zero vector. Everything that decides
//! nullity runs in exact arithmetic.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | [`SignedGraph`], switching, balance, class representatives |
//! | [`linalg`] | exact rank, kernel bases, the full-vector basis transform |
//! | [`classify`] | singular / core / nut predicates and [`NutReport`] |
//! | [`construct`] | the signed Fowler expansion and the complete-graph nut family |
//! | [`search`] | exhaustive search over switching classes of regular-graph catalogues |
//! | [`io`] | graph6, signed records and JSON reports |

pub mod classify;
pub mod construct;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod search;

pub use classify::{classify, is_unsigned_nut, positive_representative, NutReport, SignedClass};
pub use error::{GraphError, LinalgError, ParseError};
pub use graph::{count_signings, switching_equivalent, Sign, SignedGraph, SpanningTree, SwitchingSet};
pub use linalg::{canonical_eigenvector, fullify_basis, kernel_basis, rank_nullity, KernelBasis};
pub use search::{search_class, SearchConfig, SearchMode, SearchOutcome, Verdict};

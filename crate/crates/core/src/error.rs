use thiserror::Error;

/// Errors raised by graph construction, switching, and the linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graphs have different underlying graphs")]
    UnderlyingMismatch,
    #[error("order {0} is too small (need at least {1} vertices)")]
    OrderTooSmall(usize, usize),
    #[error("sign vector has {got} entries for {expected} edges")]
    SignCount { expected: usize, got: usize },
    #[error("not a signed nut graph")]
    NotNut,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0}")]
    Domain(String),
}

/// Errors raised by the exact linear algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("not a core kernel: coordinate {0} is zero in every basis vector")]
    NotCoreKernel(usize),
    #[error("expected nullity 1, found {0}")]
    NullityNotOne(usize),
    #[error("vector is not in the kernel (row {0} evaluates to nonzero)")]
    NotInKernel(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

/// Errors raised while parsing graph6 strings and signed records.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("bad length: expected {expected} bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("nonzero padding bits at offset {0}")]
    NonzeroPadding(usize),
    #[error("graphs with zero vertices are not supported")]
    EmptyGraph,
    #[error("missing sign mask")]
    MissingMask,
    #[error("invalid hex digit {ch:?} at offset {offset}")]
    InvalidHex { offset: usize, ch: char },
    #[error("sign mask has {bits} bits but the graph has {edges} edges")]
    MaskTooShort { bits: usize, edges: usize },
    #[error("sign mask sets bit {0}, beyond the edge count")]
    StrayMaskBit(usize),
    #[error("unexpected trailing field {0:?}")]
    Trailing(String),
}

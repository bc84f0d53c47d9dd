//! Edge-coloring sparse graphs with the optimal number of colors.
//!
//! Every simple graph with maximum degree Δ can be properly edge-colored with
//! Δ + 1 colors (Vizing). This crate colors with Δ colors whenever
//! Δ ≥ 2·mad(G), where mad(G) is the maximum average degree over all
//! subgraphs, and falls back to Δ + 1 colors otherwise. Two schedulers are
//! provided: a seeded randomized one and a fully deterministic one, both
//! quasilinear on uniformly sparse inputs.
//!
//! The main entry point is [`scheduler::color_graph`]. Lower layers are
//! exposed for testing and experimentation: exact sparsity parameters
//! ([`sparsity`]), the mutable coloring state with Kempe-chain operations
//! ([`coloring`]), weak-edge classification ([`weak`]), fan rotation
//! ([`fan`]), the degree-splitting edge partition ([`partition`]), and
//! brute-force reference oracles ([`oracle`]).

pub mod coloring;
pub mod fan;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod scheduler;
pub mod sparsity;
pub mod weak;

mod flow;

use rational::Ratio;

/// Crate-wide error type. Variants carry enough context to report the exact
/// offending entity (vertex, edge, color, or threshold).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("self-loop ({u}, {v}) is not allowed in a simple graph")]
    SelfLoop { u: usize, v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("unknown edge id {id}")]
    UnknownEdgeId { id: usize },
    #[error("graph has no edges; density is undefined")]
    EdgelessGraph,
    #[error("palette size must be at least 1, got {d}")]
    InvalidPalette { d: usize },
    #[error("edge {edge} is already colored")]
    EdgeAlreadyColored { edge: usize },
    #[error("edge {edge} is not colored")]
    EdgeNotColored { edge: usize },
    #[error("color {color} outside palette 1..={d}")]
    ColorOutOfRange { color: u32, d: usize },
    #[error("color {color} already used at vertex {vertex}")]
    ColorConflict { vertex: usize, color: u32 },
    #[error("colors {a} and {b} must differ")]
    EqualColors { a: u32, b: u32 },
    #[error("both colors {a} and {b} present at vertex {vertex}: walk direction ambiguous")]
    AmbiguousWalk { vertex: usize, a: u32, b: u32 },
    #[error("alternating path is stale: the coloring changed since it was walked")]
    StalePath,
    #[error("color {color} is not free at vertex {vertex}")]
    ColorNotFree { vertex: usize, color: u32 },
    #[error("edge {edge} is not weak at vertex {vertex} for the current palette")]
    NotWeak { edge: usize, vertex: usize },
    #[error("fan at vertex {vertex} cannot be extended: weakness precondition was violated")]
    FanExhausted { vertex: usize },
    #[error("partition width {c} is below the degeneracy {degeneracy}")]
    WidthTooSmall { c: usize, degeneracy: usize },
    #[error("no weak edges in a nonempty graph: scheduler precondition violated")]
    NoWeakEdges,
    #[error("palette Δ = {delta} requested but Δ < 2·mad = 2·{mad} (= {twice_mad})")]
    PaletteTooSmall {
        delta: usize,
        mad: Ratio,
        twice_mad: Ratio,
    },
    #[error("internal invariant breach: recomputed path type differs for edge {edge}")]
    TypeMismatch { edge: usize },
    #[error("internal invariant breach: alternating paths in a batch overlap on edge {edge}")]
    PathOverlap { edge: usize },
    #[error("internal invariant breach: computed coloring failed validation at edge {edge}")]
    ImproperOutput { edge: usize },
    #[error("{what} exceeds the oracle limit {limit}")]
    OracleLimit { what: &'static str, limit: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code taxonomy used by the CLI: 2 parse, 3 precondition,
    /// 4 internal invariant breach, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io(_) => 2,
            Error::PaletteTooSmall { .. } => 3,
            Error::TypeMismatch { .. }
            | Error::PathOverlap { .. }
            | Error::ImproperOutput { .. }
            | Error::NoWeakEdges => 4,
            _ => 1,
        }
    }
}

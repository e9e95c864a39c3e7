//! Exact and extremal counts of properly (r,p)-colored hyperedges in
//! k-uniform hypergraphs.
//!
//! An edge of an `n`-vertex `k`-uniform hypergraph is *properly
//! (r,p)-colored* by an assignment of `r` colors to the vertices when it
//! contains vertices of at least `p` distinct colors. This crate computes,
//! with exact arbitrary-precision arithmetic:
//!
//! * [`exact`] — closed-form counts on complete hypergraphs: the number of
//!   edges with exactly / fewer than `p` colors under a balanced coloring,
//!   the maximum properly colored edge count over all colorings (exact when
//!   `r | n`, exact-on-balanced-sizes plus padded bounds otherwise), the
//!   rainbow special case `r = p = k`, and the adversary-game threshold.
//! * [`oracle`] — independent brute force: full enumeration of all `r^n`
//!   colorings, a symmetry-reduced search over class-size compositions, and
//!   the gain/loss bookkeeping of single-vertex exchange moves. These exist
//!   to verify the closed forms, so they never share code paths with them.
//! * [`solver`] — best-improvement exchange local search with seeded random
//!   restarts for maximizing properly colored edges on *arbitrary*
//!   hypergraphs.
//! * [`hypergraph`] — the data model: hypergraphs, colorings, distinct-color
//!   profiles, deterministic instance generation, and the JSON interchange
//!   format.
//!
//! Everything is deterministic: randomness is ChaCha8 keyed by explicit
//! seeds, and parallel reductions (enabled by the default `parallel`
//! feature) are order-independent, so results are bit-identical regardless
//! of worker count.

pub mod error;
pub mod exact;
mod exec;
pub mod hypergraph;
pub mod oracle;
pub mod params;
mod rng;
pub mod solver;

pub use error::{Error, Result};
pub use hypergraph::{ColorProfile, Coloring, Hypergraph};
pub use params::{BoundsResult, CountKind, CountResult, ParamSet};

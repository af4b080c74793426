//! Sweep-line geometric analysis toolkit.
//!
//! The crate bundles four families of analyses that share the same two
//! building blocks: sorting geometric events along one axis and answering
//! range questions with tree structures.
//!
//! - [`empty_circle`] — largest empty circle inside a container circle, and
//!   the area of a union of circles or polygons, via vertical-slab sweeps.
//! - [`hyperrect`] — volume of a union of axis-aligned boxes in any
//!   dimension, and the largest empty hyper-rectangle with a fixed aspect
//!   ratio, via binary search over a coverage test.
//! - [`containment`] — which circles (or boxes) are nested inside which,
//!   via a half-circle interval sweep and range-tree sweeps.
//! - [`nfa`] — maximum-weight subsequences accepted by an interval-labeled
//!   NFA, with longest-increasing and longest-alternating presets.
//!
//! Every fast algorithm is paired with a deliberately simple brute-force
//! counterpart in [`oracle`]; the test suite and the CLI's `--verify` flag
//! cross-check the two.
//!
//! The `examples/` directory has one runnable program per capability:
//!
//! ```bash
//! cargo run --example empty_circle
//! cargo run --example union_volume
//! cargo run --example contain_circles
//! cargo run --example nfa_subseq
//! ```
//!
//! A thin command-line front end over the same library lives in the
//! `geomsweep` binary; see [`cli`] and the README for the document formats.

pub mod cli;
pub mod containment;
pub mod empty_circle;
mod error;
pub mod gen;
pub mod geom;
pub mod hyperrect;
pub mod io;
pub mod nfa;
pub mod oracle;
pub mod trees;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Absolute tolerance for geometric coincidence tests (identical circles,
/// tangency, degenerate chords, coordinate dedup).
pub const EPS_GEOM: f64 = 1e-9;

/// Absolute slack for 1-D coverage decisions. Gaps no longer than this are
/// treated as covered, which makes shared closed endpoints deterministic
/// under floating-point noise.
pub const EPS_COV: f64 = 1e-9;

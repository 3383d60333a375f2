//! Modeling of the contrast-agent-induced deterministic component of CT
//! density in vessel cross-sections.
//!
//! The crate fits an edged-plateau double-sigmoid to per-line image profiles
//! with a bounded Levenberg-Marquardt solver, composes per-slice fields by a
//! bidirectional pointwise merge, derives hemodynamic metrics (edge slopes,
//! transition zones, plateau width, estimated diameter), validates the result
//! with rank-based statistics, and eliminates the contrast component to
//! synthesize non-contrast volumes.
//!
//! Start with the runnable programs in `examples/`; each one demonstrates a
//! major capability end to end. The `caidc` binary exposes the same pipeline
//! as subcommands for batch use.

pub mod fit;
pub mod grid;
pub mod hemo;
pub mod model;
pub mod slice;
pub mod stats;

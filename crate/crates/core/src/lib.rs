//! Strong integer-additive set-indexers (strong IASIs) on finite simple graphs.
//!
//! A vertex labeling `f: V -> finite subsets of N0` is an IASI when `f` and the
//! induced edge map `uv -> f(u) + f(v)` (sumset) are both injective, and a
//! strong IASI when additionally `|f(u) + f(v)| = |f(u)| * |f(v)|` on every
//! edge, which holds exactly when the difference sets of the two labels are
//! disjoint.
//!
//! - [`setalg`]: sumsets, scaling, difference sets.
//! - [`graph`]: graphs, cliques, union/join/complement/product/corona.
//! - [`labeling`]: verification, chains of difference sets, nourishing number.
//! - [`construct`]: strong IASI constructions, including for products and coronas.
//! - [`oracle`]: exhaustive searches on tiny instances.
//! - [`cli`]: the `iasi` command line.

pub mod cli;
pub mod construct;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod setalg;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexId};
pub use labeling::Labeling;
pub use setalg::{DiffSet, IntSet};

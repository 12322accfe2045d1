//! Two-step nilpotent Lie algebras built from graphs.
//!
//! A graph `(S, E)` determines a Lie algebra `n(S, E)` with basis the
//! vertices and one central vector per edge; the bracket of two adjacent
//! vertices is their edge and every other bracket vanishes. Two graphs give
//! isomorphic algebras exactly when the graphs are isomorphic. This crate
//! computes with these algebras over `ℚ` and prime fields of odd
//! characteristic, with exact arithmetic throughout.
//!
//! ```
//! use nilgraph::{Field, Graph, GraphLieAlgebra};
//!
//! let alg = GraphLieAlgebra::new(Graph::complete(2), Field::rationals());
//! let x = alg.vertex(0);
//! let y = alg.vertex(1);
//! assert_eq!(alg.bracket(&x, &y).unwrap(), alg.edge(0, 1).unwrap());
//! ```
//!
//! Modules:
//!
//! * [`field`] and [`linalg`]: exact scalars and Gauss-Jordan elimination.
//! * [`graph`]: graphs, canonical forms, isomorphism and enumeration.
//! * [`liealg`]: the algebra, structure constants and invariants.
//! * [`morphism`]: graded maps, functorial pushforwards, shears.
//! * [`group`]: the nilpotent group in exponential coordinates.
//! * [`iso`]: deciding Lie isomorphism by graded search.
//! * [`pcl`]: the same algebras as free Lie algebras with relations.
//! * [`proofreplay`]: mechanical checks on a given isomorphism.

pub mod error;
pub mod field;
pub mod graph;
pub mod group;
pub mod iso;
pub mod liealg;
pub mod linalg;
pub mod morphism;
pub mod pcl;
pub mod proofreplay;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Scalar};
pub use graph::{parse_graph, Graph, VertexPermutation};
pub use group::{GroupElement, NilpotentGroup};
pub use iso::{
    classify_by_total, fingerprint, graded_iso_search, lie_iso_equivalent, theorem_check,
    Fingerprint, IsoReport,
};
pub use liealg::{GraphLieAlgebra, LieElement, StructureConstants, StructureTable};
pub use linalg::Matrix;
pub use morphism::{functor_pushforward, GradedMap, LinearMap};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/morphisms.md")]
    mod morphisms {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    mod isomorphism {}
    #[doc = include_str!("../../../book/src/free-algebras.md")]
    mod free_algebras {}
    #[doc = include_str!("../../../book/src/replay.md")]
    mod replay {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

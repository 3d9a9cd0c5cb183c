//! Quivers, admissible relations, bound quiver algebras with computed path bases, and algebras
//! given by structure constants.

mod bound;
mod quiver;
mod structure;

pub use bound::{build_algebra, BoundQuiverAlgebra, DEFAULT_CAP};
pub use quiver::{Arrow, ArrowSpec, Path, Quiver, QuiverSpec, Relation, RelationTerm};
pub use structure::{dense_to_sparse, sparse_to_dense, verify_relations, Sparse, StructureAlgebra};

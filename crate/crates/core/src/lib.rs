//! Executable machinery for Bergman presentations, Bergman graphs and the
//! algebras attached to them.
//!
//! The crate is organised bottom-up:
//!
//! - [`monoid`]: free abelian monoid arithmetic, the bounded congruence
//!   search with replayable certificates, and Tietze transformations.
//! - [`structures`]: Bergman presentations and Bergman graphs, their
//!   validation, the mutual conversion between them, homomorphisms,
//!   V-monoid extraction and the embedding of ordinary digraphs.
//! - [`moves`]: the seven moves (and extension), each certifying its
//!   preconditions, plus the collapse/insplit factorisations.
//! - [`algebra`]: the explicit scalar presentation of a Bergman algebra
//!   built from idempotent and isomorphism matrices.
//! - [`lpa`]: exact arithmetic and normal forms in the Leavitt path
//!   algebra of a hypergraph.
//! - [`format`]: the text formats (`.bp`, `.bg`, `.dg`, `.mv`, `.tz`,
//!   `.alg`), DOT export and the element syntaxes.

pub mod algebra;
pub mod format;
pub mod lpa;
pub mod monoid;
pub mod moves;
mod name;
pub mod structures;

pub use name::{fresh_name, GeneratorId, Label, Name, NameError, VertexId};

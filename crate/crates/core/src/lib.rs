//! Finite oriented disingquandles and the coloring invariants they induce on
//! oriented dichromatic singular links.
//!
//! Structures are Cayley tables over `{0, .., n-1}`. Every axiom is checked
//! exhaustively, and coloring counts come from a backtracking solver that is
//! cross-checked against brute-force enumeration.
//!
//! ```
//! use disingquandle::{builtin, catalog_entry, count_colorings};
//!
//! let z10 = builtin("z10_canonical").unwrap();
//! let trefoil = catalog_entry("3_1^2").unwrap();
//! assert_eq!(count_colorings(&trefoil.system, &z10).count, 50);
//! ```

pub mod disingquandle;
pub mod error;
pub mod families;
mod format;
pub mod invariants;
pub mod link;
pub mod morphism;
pub mod quandle;
pub mod report;
pub mod singquandle;
pub mod table;

pub use disingquandle::{
    validate_oriented_disingquandle, validate_presentation_matrix, Color, OrientedDisingquandle, PresentationMatrix,
};
pub use error::{Error, Result};
pub use families::{affine_quadratic_disingquandle, builtin, AffineQuadraticParams, Builtin, ParamViolation};
pub use invariants::{
    audit_tables, count_colorings, count_colorings_exhaustive, enumerate_colorings, psi, AuditReport, ColoringOptions,
    ColoringResult, PsiTuple, ReferenceTable,
};
pub use link::{catalog, catalog_entry, parse_relation_dsl, LinkDiagram, RelationSystem};
pub use morphism::{find_isomorphism, is_homomorphism, Morphism};
pub use quandle::validate_quandle;
pub use report::{Axiom, AxiomId, AxiomReport, AxiomResult, Scope};
pub use singquandle::{validate_oriented_singquandle, OrientedSingquandle};
pub use table::{right_inverse_table, Element, MapTable, OpTable, Table};

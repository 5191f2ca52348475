//! Link diagrams, relation systems and the catalog of two-component links.

pub mod catalog;
pub mod diagram;
pub mod dsl;
pub mod system;

pub use catalog::{catalog, catalog_entry, catalog_names, CatalogEntry};
pub use diagram::{
    relations_from_diagram, validate_diagram, Component, Crossing, CrossingKind, DiagramReport, LinkDiagram, Violation,
};
pub use dsl::parse_relation_dsl;
pub use system::{Equation, Op, RelationSystem, Term};

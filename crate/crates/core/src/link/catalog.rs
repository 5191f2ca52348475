//! Relation systems of the eighteen two-component singular links.
//!
//! Each entry is stored as DSL text exactly as the equations were written
//! for the order-10 structure; a bare `*` reads as `*1`.

use crate::disingquandle::Color;
use crate::error::{Error, Result};
use crate::link::dsl::parse_relation_dsl;
use crate::link::system::RelationSystem;

const ENTRIES: [(&str, &str); 18] = [
    ("1_1^2", "R1(x,y)*R2(x,y)=y\nR2(x,y)=x"),
    ("3_1^2", "z*R1(x,y)=R2(x,y)\ny*z=R1(x,y)\nx*y=z"),
    ("4_1^2", "y*R1(x,y)=z\nR2(x,y)*z=w\nx*y=w\nR1(x,y)*w=z"),
    ("5_1^2", "x*y=v\ny*v=z\nv*z=u\nz*u=R1(x,y)\nu*R1(x,y)=R2(x,y)"),
    ("5_2^2", "u*y=z\ny*u=v\nx*v=u\nv*z=R1(x,y)\nz*R1(x,y)=R2(x,y)"),
    ("5_3^2", "x*y=z\nz*u=R2(x,y)\nv*z=u\nu*v=R1(x,y)\ny*R1(x,y)=v"),
    ("6_1^2", "R1(x,y)*v=w\nz*R1(x,y)=R2(x,y)\nx*z=v\nu*w=v\nw*u=y\nz*y=u"),
    ("6_2^2", "v*u=R1(x,y)\nx*v=u\nu*x=z\nv*z=w\nR2(x,y)*w=z\nw*R2(x,y)=y"),
    ("6_3^2", "w*R1(x,y)=R2(x,y)\nu*y=R1(x,y)\nu*z=v\nv*w=y\nw*u=z\nz*v=x"),
    ("6_4^2", "u*z=R2(x,y)\ny*u=z\nv*R2(x,y)=u\nR1(x,y)*v=w\nv*w=x\nw*x=z"),
    ("6_5^2", "w*R2(x,y)=u\nz*w=R2(x,y)\nv*u=w\nR1(x,y)*z=u\nz*v=x\nv*x=y"),
    ("6_6^2", "R2(x,y)*v=z\nu*z=v\nw*u=v\nu*w=R1(x,y)\ny*R1(x,y)=w\nx*y=z"),
    ("6_7^2", "R1(x,y)*R2(x,y)=z\nv*z=w\nz*w=u\nw*u=y\nx*v=R2(x,y)\nv*x=u"),
    ("6_8^2", "w*u=R1(x,y)\nv*w=u\nu*v=z\nw*R2(x,y)=z\nR2(x,y)*z=x\nv*x=y"),
    ("6_9^2", "u*R1(x,y)=v\nw*u=x\nw*v=R2(x,y)\nz*w=R1(x,y)\ny*z=v\nu*y=z"),
    ("6_10^2", "u*R1(x,y)=v\nR1(x,y)*v=w\nv*w=y\nu*x=w\nx*u=z\nz*R1(x,y)=R2(x,y)"),
    ("6_11^2", "w*x=y\nu*x=z\nv*w=u\nx*z=R2(x,y)\nw*z=v\nv*z=R1(x,y)"),
    ("6_12^2", "z*w=R2(x,y)\ny*z=w\nu*R2(x,y)=z\nv*R1(x,y)=u\nw*v=R1(x,y)\nx*w=v"),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub system: RelationSystem,
    /// Component labels by component, when known.
    pub component_labels: Option<Vec<Color>>,
}

/// All eighteen entries in table order.
pub fn catalog() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|(name, text)| CatalogEntry {
            name,
            system: parse_relation_dsl(text).expect("catalog text is well formed"),
            component_labels: None,
        })
        .collect()
}

pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|(name, _)| *name)
}

/// Looks up an entry by name; the `^2` suffix may be omitted.
pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    let full = if name.ends_with("^2") { name.to_string() } else { format!("{name}^2") };
    ENTRIES
        .iter()
        .find(|(n, _)| *n == full)
        .map(|(name, text)| CatalogEntry {
            name,
            system: parse_relation_dsl(text).expect("catalog text is well formed"),
            component_labels: None,
        })
        .ok_or_else(|| Error::UnknownLink(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::system::Op;

    #[test]
    fn eighteen_unique_entries() {
        let c = catalog();
        assert_eq!(c.len(), 18);
        let mut names: Vec<_> = c.iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 18);
    }

    #[test]
    fn equation_counts() {
        let e = catalog_entry("4_1^2").unwrap();
        assert_eq!(e.system.equations.len(), 4);
        let mut vars = e.system.variables.clone();
        vars.sort();
        assert_eq!(vars, ["w", "x", "y", "z"]);
        assert_eq!(catalog_entry("6_12").unwrap().system.equations.len(), 6);
        assert!(catalog_entry("7_1^2").is_err());
    }

    #[test]
    fn every_entry_is_singular_and_uses_star1_only() {
        for e in catalog() {
            let ops = e.system.ops();
            assert!(ops.contains(&Op::R1) && ops.contains(&Op::R2), "{}", e.name);
            assert!(!ops.contains(&Op::Star(Color::Two)), "{}", e.name);
        }
    }

    #[test]
    fn printed_systems_reparse_identically() {
        for e in catalog() {
            assert_eq!(parse_relation_dsl(&e.system.to_string()).unwrap(), e.system, "{}", e.name);
        }
    }
}

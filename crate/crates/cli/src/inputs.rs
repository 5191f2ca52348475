//! Resolution of command-line operands to structures and relation systems.

use std::path::Path;

use disingquandle::{
    catalog_entry, parse_relation_dsl, Builtin, Error, LinkDiagram, OrientedDisingquandle, PresentationMatrix,
    RelationSystem,
};

use crate::Failure;

pub struct NamedStructure {
    pub name: String,
    pub structure: OrientedDisingquandle,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Structural(format!("cannot read {}: {e}", path.display())))
}

/// A builtin name, or else a presentation-matrix file, without validation.
pub fn load_matrix(arg: &str) -> Result<(String, PresentationMatrix), Failure> {
    if let Ok(b) = arg.parse::<Builtin>() {
        return Ok((b.name().to_string(), b.structure().to_presentation_matrix()));
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Failure::Structural(format!("`{arg}` is neither a builtin nor an existing file")));
    }
    let matrix = read(path)?.parse::<PresentationMatrix>().map_err(|e| located(path, e))?;
    Ok((arg.to_string(), matrix))
}

/// Like [`load_matrix`] but the blocks must pass every axiom. With
/// `builtin_only`, file paths are refused.
pub fn load_structure(arg: &str, builtin_only: bool) -> Result<NamedStructure, Failure> {
    if builtin_only {
        let b: Builtin = arg.parse()?;
        return Ok(NamedStructure { name: b.name().to_string(), structure: b.structure() });
    }
    let (name, matrix) = load_matrix(arg)?;
    let structure = OrientedDisingquandle::from_presentation_matrix(matrix)?;
    Ok(NamedStructure { name, structure })
}

fn located(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { .. } | Error::NotSquare { .. } | Error::OutOfRange { .. } | Error::SizeMismatch { .. } => {
            Failure::Structural(format!("{}: {e}", path.display()))
        }
        other => other.into(),
    }
}

fn looks_like_diagram(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .any(|l| ["pos(", "neg(", "sing(", "component "].iter().any(|prefix| l.starts_with(prefix)))
}

/// An existing file (diagram or relation DSL), or else a catalog name.
pub fn load_link(arg: &str) -> Result<(String, RelationSystem), Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read(path)?;
        let system = if looks_like_diagram(&text) {
            let diagram: LinkDiagram = text.parse().map_err(|e| located(path, e))?;
            diagram.relations()?
        } else {
            parse_relation_dsl(&text).map_err(|e| located(path, e))?
        };
        return Ok((arg.to_string(), system));
    }
    let entry = catalog_entry(arg)?;
    Ok((entry.name.to_string(), entry.system))
}

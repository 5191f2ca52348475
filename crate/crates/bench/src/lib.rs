//! Shared inputs for the benchmarks.

use disingquandle::{catalog, Builtin, OrientedDisingquandle, RelationSystem};

/// Every builtin structure paired with its name.
pub fn structures() -> Vec<(&'static str, OrientedDisingquandle)> {
    Builtin::ALL.into_iter().map(|b| (b.name(), b.structure())).collect()
}

/// Catalog systems with the most variables, which dominate counting time.
pub fn widest_systems() -> Vec<(&'static str, RelationSystem)> {
    let entries = catalog();
    let widest = entries.iter().map(|e| e.system.var_count()).max().unwrap_or(0);
    entries.into_iter().filter(|e| e.system.var_count() == widest).map(|e| (e.name, e.system)).collect()
}

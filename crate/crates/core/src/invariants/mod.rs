//! Coloring counts of relation systems by finite oriented disingquandles.
//!
//! [`count_colorings_exhaustive`] walks every assignment and is the
//! reference; [`count_colorings`] is the backtracking solver used
//! everywhere else.

mod audit;
mod program;
mod solver;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::disingquandle::OrientedDisingquandle;
use crate::error::{Error, Result};
use crate::link::system::RelationSystem;
use crate::table::Element;

pub use audit::{audit_tables, AuditReport, AuditRow, ReferenceTable};

use program::Program;
use solver::{run_in_pool, Solver};

pub const DEFAULT_ORACLE_CEILING: u128 = 1_000_000_000;
pub const DEFAULT_MATERIALIZATION_CEILING: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoringOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub threads: usize,
    /// Largest `n^vars` the exhaustive count will walk.
    pub oracle_ceiling: u128,
    /// Largest number of colorings that will be materialized.
    pub materialization_ceiling: u128,
}

impl Default for ColoringOptions {
    fn default() -> Self {
        ColoringOptions {
            threads: 1,
            oracle_ceiling: DEFAULT_ORACLE_CEILING,
            materialization_ceiling: DEFAULT_MATERIALIZATION_CEILING,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringResult {
    pub count: u128,
    /// Satisfying assignments in variable declaration order, sorted.
    pub colorings: Option<Vec<Vec<Element>>>,
    pub structure_id: Option<String>,
    pub system_id: Option<String>,
}

impl ColoringResult {
    fn counted(count: u128) -> Self {
        ColoringResult { count, colorings: None, structure_id: None, system_id: None }
    }

    pub fn with_ids(mut self, system: impl Into<String>, structure: impl Into<String>) -> Self {
        self.system_id = Some(system.into());
        self.structure_id = Some(structure.into());
        self
    }
}

fn assignment_space(s: &RelationSystem, d: &OrientedDisingquandle) -> u128 {
    u32::try_from(s.var_count()).ok().and_then(|k| (d.size() as u128).checked_pow(k)).unwrap_or(u128::MAX)
}

pub fn count_colorings_exhaustive(s: &RelationSystem, d: &OrientedDisingquandle) -> Result<ColoringResult> {
    count_colorings_exhaustive_with(s, d, &ColoringOptions::default())
}

/// Counts by evaluating every equation on all `n^vars` assignments.
pub fn count_colorings_exhaustive_with(
    s: &RelationSystem,
    d: &OrientedDisingquandle,
    options: &ColoringOptions,
) -> Result<ColoringResult> {
    let required = assignment_space(s, d);
    if required > options.oracle_ceiling {
        return Err(Error::CeilingExceeded { required, ceiling: options.oracle_ceiling });
    }
    let program = Program::compile(s, d);
    let n = d.size();
    let k = s.var_count();
    if k == 0 {
        return Ok(ColoringResult::counted(u128::from(program.holds(&[], &mut program.scratch()))));
    }
    let count_with_first = |first: Element| {
        let mut a = vec![0; k];
        a[0] = first;
        let mut scratch = program.scratch();
        let mut count = 0u128;
        loop {
            count += u128::from(program.holds(&a, &mut scratch));
            // odometer over positions 1..k, last position fastest
            let mut i = k;
            loop {
                i -= 1;
                if i == 0 {
                    return count;
                }
                a[i] += 1;
                if a[i] < n {
                    break;
                }
                a[i] = 0;
            }
        }
    };
    let count = if options.threads > 1 {
        run_in_pool(options.threads, || (0..n).into_par_iter().map(count_with_first).sum())
    } else {
        (0..n).map(count_with_first).sum()
    };
    Ok(ColoringResult::counted(count))
}

pub fn count_colorings(s: &RelationSystem, d: &OrientedDisingquandle) -> ColoringResult {
    count_colorings_with(s, d, &ColoringOptions::default())
}

pub fn count_colorings_with(
    s: &RelationSystem,
    d: &OrientedDisingquandle,
    options: &ColoringOptions,
) -> ColoringResult {
    ColoringResult::counted(Solver::new(s, d).count(options.threads))
}

pub fn enumerate_colorings(s: &RelationSystem, d: &OrientedDisingquandle) -> Result<ColoringResult> {
    enumerate_colorings_with(s, d, &ColoringOptions::default())
}

/// All colorings in lexicographic order, refused above the
/// materialization ceiling.
pub fn enumerate_colorings_with(
    s: &RelationSystem,
    d: &OrientedDisingquandle,
    options: &ColoringOptions,
) -> Result<ColoringResult> {
    let solver = Solver::new(s, d);
    let count = solver.count(options.threads);
    if count > options.materialization_ceiling {
        return Err(Error::CeilingExceeded { required: count, ceiling: options.materialization_ceiling });
    }
    let colorings = solver.solutions(options.threads);
    Ok(ColoringResult { count, colorings: Some(colorings), structure_id: None, system_id: None })
}

/// One count per structure, in the order given.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PsiTuple {
    pub values: Vec<u128>,
}

impl fmt::Display for PsiTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u128::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// # Panics
/// If `ds` is empty.
pub fn psi(s: &RelationSystem, ds: &[&OrientedDisingquandle]) -> PsiTuple {
    psi_with(s, ds, &ColoringOptions::default())
}

pub fn psi_with(s: &RelationSystem, ds: &[&OrientedDisingquandle], options: &ColoringOptions) -> PsiTuple {
    assert!(!ds.is_empty(), "psi needs at least one structure");
    PsiTuple { values: ds.iter().map(|d| count_colorings_with(s, d, options).count).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin::Builtin;
    use crate::link::catalog::catalog_entry;
    use crate::link::dsl::parse_relation_dsl;
    use crate::table::Table;

    fn trivial(n: usize) -> OrientedDisingquandle {
        let star = Table::from_fn(n, |x, _| x).unwrap();
        let r1 = Table::from_fn(n, |x, _| x).unwrap();
        let r2 = Table::from_fn(n, |_, y| y).unwrap();
        OrientedDisingquandle::validated(star.clone(), star, r1, r2).unwrap()
    }

    #[test]
    fn empty_system_counts_every_assignment() {
        let d = Builtin::Z10Canonical.structure();
        let s = parse_relation_dsl("vars x").unwrap();
        assert_eq!(count_colorings_exhaustive(&s, &d).unwrap().count, 10);
        assert_eq!(count_colorings(&s, &d).count, 10);
        let s = parse_relation_dsl("vars x y").unwrap();
        assert_eq!(count_colorings(&s, &d).count, 100);
    }

    #[test]
    fn enumeration_of_a_free_variable() {
        let s = parse_relation_dsl("vars x").unwrap();
        let r = enumerate_colorings(&s, &trivial(3)).unwrap();
        assert_eq!(r.colorings.unwrap(), [[0], [1], [2]]);
    }

    #[test]
    fn trefoil_counts() {
        let d = Builtin::Z10Canonical.structure();
        let s = catalog_entry("3_1^2").unwrap().system;
        assert_eq!(count_colorings_exhaustive(&s, &d).unwrap().count, 50);
        assert_eq!(count_colorings(&s, &d).count, 50);
    }

    #[test]
    fn ceilings_refuse() {
        let d = Builtin::Z10Canonical.structure();
        let s = catalog_entry("6_12").unwrap().system;
        let tight = ColoringOptions { oracle_ceiling: 999_999, materialization_ceiling: 5, ..Default::default() };
        assert_eq!(
            count_colorings_exhaustive_with(&s, &d, &tight),
            Err(Error::CeilingExceeded { required: 1_000_000, ceiling: 999_999 })
        );
        assert!(matches!(enumerate_colorings_with(&s, &d, &tight), Err(Error::CeilingExceeded { .. })));
    }

    #[test]
    fn threads_do_not_change_results() {
        let d = Builtin::Z10Canonical.structure();
        let s = catalog_entry("6_4").unwrap().system;
        let par = ColoringOptions { threads: 3, ..Default::default() };
        assert_eq!(count_colorings_with(&s, &d, &par), count_colorings(&s, &d));
        assert_eq!(enumerate_colorings_with(&s, &d, &par), enumerate_colorings(&s, &d));
        assert_eq!(count_colorings_exhaustive_with(&s, &d, &par).unwrap(), count_colorings_exhaustive(&s, &d).unwrap());
    }

    #[test]
    fn psi_displays_as_tuple() {
        let d = Builtin::Z10Canonical.structure();
        let s = catalog_entry("3_1").unwrap().system;
        let p = psi(&s, &[&d, &d]);
        assert_eq!(p.to_string(), "(50, 50)");
    }
}

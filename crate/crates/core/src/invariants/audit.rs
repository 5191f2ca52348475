//! Comparison of computed counts with the three reference tables.

use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::disingquandle::OrientedDisingquandle;
use crate::error::{Error, Result};
use crate::families::builtin::Builtin;
use crate::invariants::{count_colorings_with, ColoringOptions};
use crate::link::catalog::CatalogEntry;

/// Counts under the order-10 structure.
const TABLE_ONE: [(&str, u128); 18] = [
    ("1_1^2", 75),
    ("3_1^2", 50),
    ("4_1^2", 10),
    ("5_1^2", 10),
    ("5_2^2", 10),
    ("5_3^2", 14),
    ("6_1^2", 10),
    ("6_2^2", 10),
    ("6_3^2", 10),
    ("6_4^2", 50),
    ("6_5^2", 10),
    ("6_6^2", 10),
    ("6_7^2", 10),
    ("6_8^2", 10),
    ("6_9^2", 10),
    ("6_10^2", 50),
    ("6_11^2", 10),
    ("6_12^2", 10),
];

/// Counts under the order-30 structure.
const TABLE_TWO: [(&str, u128); 18] = [
    ("1_1^2", 50),
    ("3_1^2", 30),
    ("4_1^2", 30),
    ("5_1^2", 30),
    ("5_2^2", 30),
    ("5_3^2", 49),
    ("6_1^2", 150),
    ("6_2^2", 30),
    ("6_3^2", 30),
    ("6_4^2", 30),
    ("6_5^2", 30),
    ("6_6^2", 30),
    ("6_7^2", 30),
    ("6_8^2", 30),
    ("6_9^2", 30),
    ("6_10^2", 30),
    ("6_11^2", 30),
    ("6_12^2", 0),
];

/// Pairs of counts under both structures.
const TABLE_THREE: [(&str, [u128; 2]); 18] = [
    ("1_1^2", [75, 50]),
    ("3_1^2", [50, 30]),
    ("4_1^2", [10, 30]),
    ("5_1^2", [10, 30]),
    ("5_2^2", [10, 30]),
    ("5_3^2", [14, 49]),
    ("6_1^2", [10, 150]),
    ("6_2^2", [10, 30]),
    ("6_3^2", [10, 30]),
    ("6_4^2", [50, 30]),
    ("6_5^2", [10, 30]),
    ("6_6^2", [10, 30]),
    ("6_7^2", [10, 30]),
    ("6_8^2", [10, 30]),
    ("6_9^2", [10, 30]),
    ("6_10^2", [50, 30]),
    ("6_11^2", [10, 30]),
    ("6_12^2", [10, 0]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReferenceTable {
    One,
    Two,
    Three,
}

impl ReferenceTable {
    pub const ALL: [ReferenceTable; 3] = [ReferenceTable::One, ReferenceTable::Two, ReferenceTable::Three];

    pub fn id(self) -> u8 {
        match self {
            ReferenceTable::One => 1,
            ReferenceTable::Two => 2,
            ReferenceTable::Three => 3,
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        ReferenceTable::ALL.into_iter().find(|t| t.id() == id)
    }

    /// The structures the table was computed with.
    pub fn default_structures(self) -> Vec<Builtin> {
        match self {
            ReferenceTable::One => vec![Builtin::Z10Canonical],
            ReferenceTable::Two => vec![Builtin::Z30],
            ReferenceTable::Three => vec![Builtin::Z10Canonical, Builtin::Z30],
        }
    }

    pub fn structure_count(self) -> usize {
        self.default_structures().len()
    }

    /// Printed value(s) for a link, if the table lists it.
    pub fn printed(self, link: &str) -> Option<Vec<u128>> {
        match self {
            ReferenceTable::One => TABLE_ONE.iter().find(|(l, _)| *l == link).map(|(_, v)| vec![*v]),
            ReferenceTable::Two => TABLE_TWO.iter().find(|(l, _)| *l == link).map(|(_, v)| vec![*v]),
            ReferenceTable::Three => TABLE_THREE.iter().find(|(l, _)| *l == link).map(|(_, v)| v.to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub link: String,
    pub computed: Vec<u128>,
    /// Empty when the table does not list the link.
    pub printed: Vec<u128>,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub table: ReferenceTable,
    pub structures: Vec<String>,
    pub rows: Vec<AuditRow>,
}

/// Counts every entry under `structures` and compares with `table`.
/// Mismatches are recorded, never raised.
pub fn audit_tables(
    table: ReferenceTable,
    entries: &[CatalogEntry],
    structures: &[(&str, &OrientedDisingquandle)],
    options: &ColoringOptions,
) -> Result<AuditReport> {
    if structures.len() != table.structure_count() {
        return Err(Error::StructureCount {
            table: table.id(),
            expected: table.structure_count(),
            found: structures.len(),
        });
    }
    let rows = entries
        .iter()
        .map(|entry| {
            let computed: Vec<u128> =
                structures.iter().map(|(_, d)| count_colorings_with(&entry.system, d, options).count).collect();
            let printed = table.printed(entry.name).unwrap_or_default();
            AuditRow { link: entry.name.to_string(), matches: computed == printed, computed, printed }
        })
        .collect();
    Ok(AuditReport { table, structures: structures.iter().map(|(name, _)| name.to_string()).collect(), rows })
}

fn tuple(values: &[u128]) -> String {
    match values {
        [v] => v.to_string(),
        _ => format!("({})", values.iter().map(u128::to_string).collect::<Vec<_>>().join(", ")),
    }
}

impl AuditReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &AuditRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    /// `link,structure,count`, one line per link and structure.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("link,structure,count\n");
        for row in &self.rows {
            for (structure, count) in self.structures.iter().zip(&row.computed) {
                out.push_str(&format!("{},{},{}\n", row.link, structure, count));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mismatches: Vec<_> = self
            .mismatches()
            .map(|r| json!({ "link": r.link, "computed": r.computed, "printed": r.printed, "table": self.table.id() }))
            .collect();
        json!({
            "table": self.table.id(),
            "structures": self.structures,
            "rows": self.rows,
            "mismatches": mismatches,
        })
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table {} under {}", self.table.id(), self.structures.join(", "))?;
        writeln!(f, "{:<8} {:>14} {:>14}  status", "link", "computed", "printed")?;
        for r in &self.rows {
            let status = if r.matches { "match" } else { "MISMATCH" };
            writeln!(f, "{:<8} {:>14} {:>14}  {}", r.link, tuple(&r.computed), tuple(&r.printed), status)?;
        }
        write!(f, "{} of {} rows match", self.rows.len() - self.mismatches().count(), self.rows.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::catalog::{catalog, catalog_names};

    #[test]
    fn every_table_lists_every_catalog_link_once() {
        for table in ReferenceTable::ALL {
            for name in catalog_names() {
                let printed = table.printed(name).unwrap();
                assert_eq!(printed.len(), table.structure_count(), "{name}");
            }
        }
    }

    #[test]
    fn pairs_combine_the_single_tables() {
        for name in catalog_names() {
            let mut joined = ReferenceTable::One.printed(name).unwrap();
            joined.extend(ReferenceTable::Two.printed(name).unwrap());
            assert_eq!(ReferenceTable::Three.printed(name).unwrap(), joined, "{name}");
        }
    }

    #[test]
    fn wrong_structure_count_is_rejected() {
        let d = Builtin::Z10Canonical.structure();
        let err = audit_tables(ReferenceTable::Three, &catalog(), &[("z10_canonical", &d)], &Default::default());
        assert_eq!(err, Err(Error::StructureCount { table: 3, expected: 2, found: 1 }));
    }

    #[test]
    fn csv_and_json_carry_the_same_counts() {
        let d = Builtin::Z10Canonical.structure();
        let entries: Vec<_> = catalog().into_iter().take(3).collect();
        let report =
            audit_tables(ReferenceTable::One, &entries, &[("z10_canonical", &d)], &Default::default()).unwrap();
        let csv = report.to_csv();
        let json = report.to_json();
        for (i, line) in csv.lines().skip(1).enumerate() {
            let count: u128 = line.rsplit(',').next().unwrap().parse().unwrap();
            assert_eq!(json["rows"][i]["computed"][0].as_u64().map(u128::from), Some(count));
        }
        assert_eq!(json["mismatches"].as_array().unwrap().len(), report.mismatches().count());
    }
}

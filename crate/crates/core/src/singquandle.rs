use crate::error::{Error, Result};
use crate::quandle::{check_inverse_into, check_quandle_into};
use crate::report::{first_pair, first_triple, Axiom, AxiomReport, Scope};
use crate::table::{right_inverse_table, MapTable, OpTable};

/// A quandle `*` with two maps `R1, R2` modelling an oriented singular crossing.
///
/// The right inverse `/` is always derived from `*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedSingquandle {
    star: OpTable,
    star_bar: OpTable,
    r1: MapTable,
    r2: MapTable,
}

impl OrientedSingquandle {
    /// Assembles the structure without checking the singquandle axioms.
    /// Fails only if the sizes disagree or `*` has a non-bijective column.
    pub fn new(star: OpTable, r1: MapTable, r2: MapTable) -> Result<Self> {
        same_size(&[&star, &r1, &r2])?;
        let star_bar = right_inverse_table(&star)?;
        Ok(OrientedSingquandle { star, star_bar, r1, r2 })
    }

    /// Like [`new`](Self::new) but rejects structures failing any axiom.
    pub fn validated(star: OpTable, r1: MapTable, r2: MapTable) -> Result<Self> {
        let s = Self::new(star, r1, r2)?;
        let report = validate_oriented_singquandle(&s);
        if report.passed() {
            Ok(s)
        } else {
            Err(Error::Axioms(Box::new(report)))
        }
    }

    pub fn size(&self) -> usize {
        self.star.size()
    }
    pub fn star(&self) -> &OpTable {
        &self.star
    }
    pub fn star_bar(&self) -> &OpTable {
        &self.star_bar
    }
    pub fn r1(&self) -> &MapTable {
        &self.r1
    }
    pub fn r2(&self) -> &MapTable {
        &self.r2
    }
}

pub(crate) fn same_size(tables: &[&OpTable]) -> Result<()> {
    let n = tables[0].size();
    match tables.iter().find(|t| t.size() != n) {
        Some(t) => Err(Error::SizeMismatch { left: n, right: t.size() }),
        None => Ok(()),
    }
}

/// Quandle axioms, inverse coherence, then the five singular axioms.
pub fn validate_oriented_singquandle(s: &OrientedSingquandle) -> AxiomReport {
    let mut report = AxiomReport::default();
    check_quandle_into(&s.star, Scope::Singquandle, &mut report);
    check_singquandle_into(&s.star, &s.star_bar, &s.r1, &s.r2, Scope::Singquandle, &mut report);
    report
}

pub(crate) fn check_singquandle_into(
    star: &OpTable,
    bar: &OpTable,
    r1: &MapTable,
    r2: &MapTable,
    scope: Scope,
    report: &mut AxiomReport,
) {
    let n = star.size();
    let op = |a, b| star.get(a, b);
    let inv = |a, b| bar.get(a, b);
    let r1 = |a, b| r1.get(a, b);
    let r2 = |a, b| r2.get(a, b);

    check_inverse_into(star, bar, scope, report);
    report.record(scope, Axiom::R1Transport, first_triple(n, |x, y, z| op(r1(inv(x, y), z), y) == r1(x, op(z, y))));
    report.record(scope, Axiom::R2Transport, first_triple(n, |x, y, z| r2(inv(x, y), z) == inv(r2(x, op(z, y)), y)));
    report.record(
        scope,
        Axiom::PassThrough,
        first_triple(n, |x, y, z| op(inv(y, r1(x, z)), x) == inv(op(y, r2(x, z)), z)),
    );
    report.record(scope, Axiom::R2FromR1, first_pair(n, |x, y| r2(x, y) == r1(y, op(x, y))));
    report.record(scope, Axiom::Twist, first_pair(n, |x, y| op(r1(x, y), r2(x, y)) == r2(y, op(x, y))));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Table;

    fn z10_canonical() -> OrientedSingquandle {
        let star = Table::from_fn(10, |x, y| (3 * x + 8 * y) % 10).unwrap();
        let r1 = Table::from_fn(10, |x, y| (4 * x + 2 * y + 5 * x * y) % 10).unwrap();
        let r2 = Table::from_fn(10, |x, y| (6 * x + 5 * x * y) % 10).unwrap();
        OrientedSingquandle::new(star, r1, r2).unwrap()
    }

    #[test]
    fn trivial_with_projections_passes() {
        let star = Table::from_fn(4, |x, _| x).unwrap();
        let r1 = Table::from_fn(4, |x, _| x).unwrap();
        let r2 = Table::from_fn(4, |_, y| y).unwrap();
        let s = OrientedSingquandle::new(star, r1, r2).unwrap();
        assert!(validate_oriented_singquandle(&s).passed());
    }

    #[test]
    fn z10_affine_example_passes() {
        let report = validate_oriented_singquandle(&z10_canonical());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn patched_r2_breaks_r2_from_r1_at_0_1() {
        let s = z10_canonical();
        let r2 = s.r2().with_entry(0, 1, 1).unwrap();
        let s = OrientedSingquandle::new(s.star().clone(), s.r1().clone(), r2).unwrap();
        let report = validate_oriented_singquandle(&s);
        let r = report.get(Scope::Singquandle, Axiom::R2FromR1).unwrap();
        assert_eq!(r.counterexample, Some(vec![0, 1]));
    }

    #[test]
    fn size_mismatch_is_structural() {
        let a = Table::from_fn(2, |x, _| x).unwrap();
        let b = Table::from_fn(3, |x, _| x).unwrap();
        assert_eq!(OrientedSingquandle::new(a.clone(), b, a).unwrap_err(), Error::SizeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn report_is_deterministic() {
        let s = z10_canonical();
        let r2 = s.r2().with_entry(3, 7, 0).unwrap();
        let s = OrientedSingquandle::new(s.star().clone(), s.r1().clone(), r2).unwrap();
        assert_eq!(validate_oriented_singquandle(&s), validate_oriented_singquandle(&s));
    }
}

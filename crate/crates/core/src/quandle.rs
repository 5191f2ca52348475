use crate::report::{first_pair, first_triple, Axiom, AxiomReport, Scope};
use crate::table::OpTable;

/// Checks idempotency, column bijectivity and right self-distributivity.
pub fn validate_quandle(t: &OpTable) -> AxiomReport {
    let mut report = AxiomReport::default();
    check_quandle_into(t, Scope::Quandle, &mut report);
    report
}

pub(crate) fn check_quandle_into(t: &OpTable, scope: Scope, report: &mut AxiomReport) {
    let n = t.size();
    let idem = (0..n).find(|&x| t.get(x, x) != x).map(|x| vec![x]);
    report.record(scope, Axiom::Idempotency, idem);
    report.record(scope, Axiom::ColumnBijectivity, t.first_non_bijective_column().map(|y| vec![y]));
    let distributive = first_triple(n, |x, y, z| t.get(t.get(x, y), z) == t.get(t.get(x, z), t.get(y, z)));
    report.record(scope, Axiom::RightDistributivity, distributive);
}

pub(crate) fn check_inverse_into(t: &OpTable, bar: &OpTable, scope: Scope, report: &mut AxiomReport) {
    let c = first_pair(t.size(), |x, y| bar.get(t.get(x, y), y) == x && t.get(bar.get(x, y), y) == x);
    report.record(scope, Axiom::InverseCoherence, c);
}

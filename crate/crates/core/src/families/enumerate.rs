//! Backtracking enumeration of every oriented disingquandle on `{0, .., n-1}`.
//!
//! Quandle tables are generated first (row-major, smallest entry first),
//! then `R1` is filled entry by entry for every ordered pair of quandles.
//! `R2` is never branched on: it is read off `R2(x, y) = R1(y, x *1 y)`.
//! After every assignment all axiom instances whose operands are already
//! known are checked, so dead branches are cut as early as possible.

use crate::disingquandle::{validate_oriented_disingquandle, OrientedDisingquandle};
use crate::table::{right_inverse_table, Element, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub emitted: usize,
    pub nodes: u64,
    pub truncated: bool,
}

struct Budget {
    nodes: u64,
    limit: u64,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.limit
    }
}

/// Every quandle of order `n` in lexicographic (row-major) table order.
pub fn enumerate_quandles(n: usize) -> Vec<Table> {
    let mut budget = Budget { nodes: 0, limit: u64::MAX };
    let mut out = Vec::new();
    quandles_into(n, &mut budget, &mut out);
    out
}

fn quandles_into(n: usize, budget: &mut Budget, out: &mut Vec<Table>) -> bool {
    let mut entries: Vec<Option<Element>> = vec![None; n * n];
    for i in 0..n {
        entries[i * n + i] = Some(i);
    }
    fill_quandle(n, 0, &mut entries, budget, out)
}

fn quandle_consistent(n: usize, e: &[Option<Element>]) -> bool {
    let get = |i: Element, j: Element| e[i * n + j];
    for j in 0..n {
        let mut seen = vec![false; n];
        for i in 0..n {
            if let Some(v) = get(i, j) {
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = get(x, y) else { continue };
            for z in 0..n {
                let lhs = get(xy, z);
                let rhs = match (get(x, z), get(y, z)) {
                    (Some(a), Some(b)) => get(a, b),
                    _ => None,
                };
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn fill_quandle(
    n: usize,
    pos: usize,
    entries: &mut Vec<Option<Element>>,
    budget: &mut Budget,
    out: &mut Vec<Table>,
) -> bool {
    if pos == n * n {
        out.push(Table::from_entries(n, entries.iter().map(|v| v.unwrap()).collect()).unwrap());
        return true;
    }
    if entries[pos].is_some() {
        return fill_quandle(n, pos + 1, entries, budget, out);
    }
    for v in 0..n {
        if !budget.tick() {
            return false;
        }
        entries[pos] = Some(v);
        if quandle_consistent(n, entries) && !fill_quandle(n, pos + 1, entries, budget, out) {
            entries[pos] = None;
            return false;
        }
    }
    entries[pos] = None;
    true
}

struct PairContext<'a> {
    n: usize,
    op1: &'a Table,
    op2: &'a Table,
    inv1: Table,
    inv2: Table,
}

impl PairContext<'_> {
    fn r2(&self, r1: &[Option<Element>], x: Element, y: Element) -> Option<Element> {
        r1[y * self.n + self.op1.get(x, y)]
    }

    /// False iff some fully determined axiom instance is violated.
    fn consistent(&self, r1: &[Option<Element>]) -> bool {
        let n = self.n;
        let r1f = |x: Element, y: Element| r1[x * n + y];
        let r2f = |x: Element, y: Element| self.r2(r1, x, y);
        let differ = |a: Option<Element>, b: Option<Element>| matches!((a, b), (Some(a), Some(b)) if a != b);
        let stars = [(self.op1, &self.inv1), (self.op2, &self.inv2)];

        for x in 0..n {
            for y in 0..n {
                let xy1 = self.op1.get(x, y);
                let xy2 = self.op2.get(x, y);
                let (a, b) = (r1f(x, y), r2f(x, y));
                // R2 must equal R1(y, x *2 y) as well as R1(y, x *1 y)
                if differ(b, r1f(y, xy2)) {
                    return false;
                }
                for (k, (op, _)) in stars.iter().enumerate() {
                    let xy = if k == 0 { xy1 } else { xy2 };
                    // twist within one quandle
                    if differ(a.zip(b).map(|(a, b)| op.get(a, b)), r2f(y, xy)) {
                        return false;
                    }
                }
                // mixed twists
                if differ(a.zip(b).map(|(a, b)| self.op1.get(a, b)), r2f(y, xy2))
                    || differ(a.zip(b).map(|(a, b)| self.op2.get(a, b)), r2f(y, xy1))
                {
                    return false;
                }
            }
        }

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for (op, inv) in stars {
                        let zy = op.get(z, y);
                        // R1 transport
                        let lhs = r1f(inv.get(x, y), z).map(|v| op.get(v, y));
                        if differ(lhs, r1f(x, zy)) {
                            return false;
                        }
                        // R2 transport
                        let rhs = r2f(x, zy).map(|v| inv.get(v, y));
                        if differ(r2f(inv.get(x, y), z), rhs) {
                            return false;
                        }
                    }
                    // pass-through, plain and mixed: (y /i R1(x,z)) *j x = (y *j R2(x,z)) /i z
                    let (a, b) = (r1f(x, z), r2f(x, z));
                    for (_, inv_i) in stars {
                        for (op_j, _) in stars {
                            let lhs = a.map(|a| op_j.get(inv_i.get(y, a), x));
                            let rhs = b.map(|b| inv_i.get(op_j.get(y, b), z));
                            if differ(lhs, rhs) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

fn fill_r1<F: FnMut(OrientedDisingquandle)>(
    ctx: &PairContext<'_>,
    pos: usize,
    r1: &mut Vec<Option<Element>>,
    budget: &mut Budget,
    emit: &mut F,
    emitted: &mut usize,
) -> bool {
    let n = ctx.n;
    if pos == n * n {
        let r1t = Table::from_entries(n, r1.iter().map(|v| v.unwrap()).collect()).unwrap();
        let r2t = Table::from_fn(n, |x, y| r1t.get(y, ctx.op1.get(x, y))).unwrap();
        let d = OrientedDisingquandle::new(ctx.op1.clone(), ctx.op2.clone(), r1t, r2t).unwrap();
        if validate_oriented_disingquandle(&d).passed() {
            *emitted += 1;
            emit(d);
        }
        return true;
    }
    for v in 0..n {
        if !budget.tick() {
            r1[pos] = None;
            return false;
        }
        r1[pos] = Some(v);
        if ctx.consistent(r1) && !fill_r1(ctx, pos + 1, r1, budget, emit, emitted) {
            r1[pos] = None;
            return false;
        }
    }
    r1[pos] = None;
    true
}

/// Streams every oriented disingquandle of order `n` to `emit`, in
/// lexicographic order of `(*1, *2, R1)`, stopping after `budget` search
/// nodes.
pub fn enumerate_disingquandles<F: FnMut(OrientedDisingquandle)>(
    n: usize,
    budget: u64,
    mut emit: F,
) -> EnumerationSummary {
    let mut budget = Budget { nodes: 0, limit: budget };
    let mut emitted = 0;
    let mut quandles = Vec::new();
    if n == 0 || !quandles_into(n, &mut budget, &mut quandles) {
        return EnumerationSummary { emitted, nodes: budget.nodes.min(budget.limit), truncated: n != 0 };
    }
    for op1 in &quandles {
        for op2 in &quandles {
            let ctx = PairContext {
                n,
                op1,
                op2,
                inv1: right_inverse_table(op1).unwrap(),
                inv2: right_inverse_table(op2).unwrap(),
            };
            let mut r1 = vec![None; n * n];
            if !fill_r1(&ctx, 0, &mut r1, &mut budget, &mut emit, &mut emitted) {
                return EnumerationSummary { emitted, nodes: budget.limit, truncated: true };
            }
        }
    }
    EnumerationSummary { emitted, nodes: budget.nodes, truncated: false }
}

/// Collects the full enumeration.
pub fn collect_disingquandles(n: usize, budget: u64) -> (Vec<OrientedDisingquandle>, EnumerationSummary) {
    let mut out = Vec::new();
    let summary = enumerate_disingquandles(n, budget, |d| out.push(d));
    (out, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::validate_quandle;

    #[test]
    fn order_one_has_exactly_one() {
        let (all, summary) = collect_disingquandles(1, 1_000);
        assert_eq!(all.len(), 1);
        assert!(!summary.truncated);
        assert_eq!(all[0].r1().entries(), &[0]);
    }

    #[test]
    fn quandles_of_order_three() {
        let naive: Vec<Table> = (0..3usize.pow(9))
            .map(|mut code| {
                let mut e = vec![0; 9];
                for slot in e.iter_mut().rev() {
                    *slot = code % 3;
                    code /= 3;
                }
                Table::from_entries(3, e).unwrap()
            })
            .filter(|t| validate_quandle(t).passed())
            .collect();
        assert_eq!(enumerate_quandles(3), naive);
    }

    #[test]
    fn budget_truncates() {
        let (_, summary) = collect_disingquandles(3, 10);
        assert!(summary.truncated);
    }

    #[test]
    fn order_two_matches_naive_filter() {
        let tables: Vec<Table> = (0..16usize)
            .map(|code| Table::from_entries(2, (0..4).map(|b| (code >> (3 - b)) & 1).collect()).unwrap())
            .collect();
        let mut naive = Vec::new();
        for s1 in &tables {
            for s2 in &tables {
                for r1 in &tables {
                    let r2 = Table::from_fn(2, |x, y| r1.get(y, s1.get(x, y))).unwrap();
                    if let Ok(d) = OrientedDisingquandle::validated(s1.clone(), s2.clone(), r1.clone(), r2) {
                        naive.push(d.to_presentation_matrix());
                    }
                }
            }
        }
        let (all, _) = collect_disingquandles(2, u64::MAX);
        let got: Vec<_> = all.iter().map(|d| d.to_presentation_matrix()).collect();
        assert_eq!(got, naive);
    }
}

//! Relation systems flattened into straight-line table lookups.

use crate::disingquandle::{Color, OrientedDisingquandle};
use crate::link::system::{Op, RelationSystem, Term};
use crate::table::Element;

#[derive(Debug, Clone, Copy)]
enum Slot {
    Var(usize),
    Tmp(usize),
}

#[derive(Debug, Clone, Copy)]
struct Instr {
    table: usize,
    left: Slot,
    right: Slot,
    out: usize,
}

#[derive(Debug, Clone)]
struct FlatEquation {
    code: Vec<Instr>,
    lhs: Slot,
    rhs: Slot,
}

#[derive(Debug, Clone)]
pub(crate) struct Program<'a> {
    n: usize,
    tables: [&'a [Element]; 6],
    equations: Vec<FlatEquation>,
    temps: usize,
}

fn table_index(op: Op) -> usize {
    match op {
        Op::Star(Color::One) => 0,
        Op::Star(Color::Two) => 1,
        Op::Bar(Color::One) => 2,
        Op::Bar(Color::Two) => 3,
        Op::R1 => 4,
        Op::R2 => 5,
    }
}

fn flatten(term: &Term, code: &mut Vec<Instr>, temps: &mut usize) -> Slot {
    match term {
        Term::Var(v) => Slot::Var(*v),
        Term::Apply(op, l, r) => {
            let left = flatten(l, code, temps);
            let right = flatten(r, code, temps);
            let out = *temps;
            *temps += 1;
            code.push(Instr { table: table_index(*op), left, right, out });
            Slot::Tmp(out)
        }
    }
}

impl<'a> Program<'a> {
    pub(crate) fn compile(s: &RelationSystem, d: &'a OrientedDisingquandle) -> Self {
        let tables = [
            d.star(Color::One).entries(),
            d.star(Color::Two).entries(),
            d.star_bar(Color::One).entries(),
            d.star_bar(Color::Two).entries(),
            d.r1().entries(),
            d.r2().entries(),
        ];
        let mut temps = 0;
        let equations = s
            .equations
            .iter()
            .map(|e| {
                let mut code = Vec::new();
                let lhs = flatten(&e.lhs, &mut code, &mut temps);
                let rhs = flatten(&e.rhs, &mut code, &mut temps);
                FlatEquation { code, lhs, rhs }
            })
            .collect();
        Program { n: d.size(), tables, equations, temps }
    }

    pub(crate) fn scratch(&self) -> Vec<Element> {
        vec![0; self.temps]
    }

    #[inline]
    fn read(slot: Slot, assignment: &[Element], scratch: &[Element]) -> Element {
        match slot {
            Slot::Var(v) => assignment[v],
            Slot::Tmp(t) => scratch[t],
        }
    }

    /// Whether every equation holds; stops at the first that fails.
    #[inline]
    pub(crate) fn holds(&self, assignment: &[Element], scratch: &mut [Element]) -> bool {
        for e in &self.equations {
            for i in &e.code {
                let l = Self::read(i.left, assignment, scratch);
                let r = Self::read(i.right, assignment, scratch);
                scratch[i.out] = self.tables[i.table][l * self.n + r];
            }
            if Self::read(e.lhs, assignment, scratch) != Self::read(e.rhs, assignment, scratch) {
                return false;
            }
        }
        true
    }
}

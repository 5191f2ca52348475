//! Relation systems: equations between terms over arc variables.

use std::collections::HashMap;
use std::fmt;

use crate::disingquandle::{Color, OrientedDisingquandle};
use crate::table::{Element, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Star(Color),
    Bar(Color),
    R1,
    R2,
}

impl Op {
    pub fn is_infix(self) -> bool {
        matches!(self, Op::Star(_) | Op::Bar(_))
    }

    pub fn table(self, d: &OrientedDisingquandle) -> &Table {
        match self {
            Op::Star(c) => d.star(c),
            Op::Bar(c) => d.star_bar(c),
            Op::R1 => d.r1(),
            Op::R2 => d.r2(),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Op::Star(Color::One) => "*1",
            Op::Star(Color::Two) => "*2",
            Op::Bar(Color::One) => "/1",
            Op::Bar(Color::Two) => "/2",
            Op::R1 => "R1",
            Op::R2 => "R2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Apply(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn apply(op: Op, left: Term, right: Term) -> Term {
        Term::Apply(op, Box::new(left), Box::new(right))
    }

    pub fn eval(&self, d: &OrientedDisingquandle, assignment: &[Element]) -> Element {
        match self {
            Term::Var(v) => assignment[*v],
            Term::Apply(op, l, r) => op.table(d).get(l.eval(d, assignment), r.eval(d, assignment)),
        }
    }

    pub fn for_each_var(&self, f: &mut impl FnMut(usize)) {
        match self {
            Term::Var(v) => f(*v),
            Term::Apply(_, l, r) => {
                l.for_each_var(f);
                r.for_each_var(f);
            }
        }
    }

    pub fn contains_var(&self, var: usize) -> bool {
        let mut found = false;
        self.for_each_var(&mut |v| found |= v == var);
        found
    }

    pub fn for_each_op(&self, f: &mut impl FnMut(Op)) {
        if let Term::Apply(op, l, r) = self {
            f(*op);
            l.for_each_op(f);
            r.for_each_op(f);
        }
    }

    pub fn map_vars(&self, f: &impl Fn(usize) -> Term) -> Term {
        match self {
            Term::Var(v) => f(*v),
            Term::Apply(op, l, r) => Term::apply(*op, l.map_vars(f), r.map_vars(f)),
        }
    }

    fn write(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(&names[*v]),
            Term::Apply(op, l, r) if op.is_infix() => {
                l.write(names, f)?;
                f.write_str(op.symbol())?;
                if matches!(**r, Term::Apply(o, ..) if o.is_infix()) {
                    f.write_str("(")?;
                    r.write(names, f)?;
                    f.write_str(")")
                } else {
                    r.write(names, f)
                }
            }
            Term::Apply(op, l, r) => {
                write!(f, "{}(", op.symbol())?;
                l.write(names, f)?;
                f.write_str(",")?;
                r.write(names, f)?;
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn holds(&self, d: &OrientedDisingquandle, assignment: &[Element]) -> bool {
        self.lhs.eval(d, assignment) == self.rhs.eval(d, assignment)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RelationSystem {
    pub variables: Vec<String>,
    pub equations: Vec<Equation>,
}

impl RelationSystem {
    pub fn var_count(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn is_satisfied(&self, d: &OrientedDisingquandle, assignment: &[Element]) -> bool {
        self.equations.iter().all(|e| e.holds(d, assignment))
    }

    pub fn ops(&self) -> Vec<Op> {
        let mut ops = Vec::new();
        for e in &self.equations {
            for t in [&e.lhs, &e.rhs] {
                t.for_each_op(&mut |op| {
                    if !ops.contains(&op) {
                        ops.push(op)
                    }
                });
            }
        }
        ops
    }

    /// Number of equations each variable occurs in.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.var_count()];
        for e in &self.equations {
            let mut seen = vec![false; self.var_count()];
            e.lhs.for_each_var(&mut |v| seen[v] = true);
            e.rhs.for_each_var(&mut |v| seen[v] = true);
            for (c, s) in counts.iter_mut().zip(seen) {
                *c += usize::from(s);
            }
        }
        counts
    }

    /// Renames variables; `names` must be pairwise distinct and as long as
    /// `variables`. Equations are untouched.
    pub fn renamed(&self, names: Vec<String>) -> RelationSystem {
        assert_eq!(names.len(), self.variables.len());
        RelationSystem { variables: names, equations: self.equations.clone() }
    }

    /// Reorders variables: the variable at old index `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> RelationSystem {
        let mut variables = vec![String::new(); self.var_count()];
        for (i, name) in self.variables.iter().enumerate() {
            variables[perm[i]] = name.clone();
        }
        let map = |v: usize| Term::Var(perm[v]);
        let equations =
            self.equations.iter().map(|e| Equation { lhs: e.lhs.map_vars(&map), rhs: e.rhs.map_vars(&map) }).collect();
        RelationSystem { variables, equations }
    }

    /// Repeatedly removes an equation `t = v` (or `v = t`) with `v` absent
    /// from `t`, substituting `t` for `v` everywhere else. The coloring count
    /// is unchanged since `v` is a function of the remaining variables.
    pub fn eliminate_definitions(&self) -> RelationSystem {
        let mut sys = self.clone();
        loop {
            let found = sys.equations.iter().enumerate().find_map(|(i, e)| match (&e.lhs, &e.rhs) {
                (t, Term::Var(v)) | (Term::Var(v), t) if !t.contains_var(*v) => Some((i, *v, t.clone())),
                _ => None,
            });
            let Some((i, var, def)) = found else { return sys };
            sys.equations.remove(i);
            let subst = |v: usize| if v == var { def.clone() } else { Term::Var(v) };
            for e in &mut sys.equations {
                e.lhs = e.lhs.map_vars(&subst);
                e.rhs = e.rhs.map_vars(&subst);
            }
            // drop `var` and shift higher indices down
            sys.variables.remove(var);
            let shift = |v: usize| Term::Var(if v > var { v - 1 } else { v });
            for e in &mut sys.equations {
                e.lhs = e.lhs.map_vars(&shift);
                e.rhs = e.rhs.map_vars(&shift);
            }
        }
    }

    fn first_occurrence_order(&self) -> Vec<usize> {
        let mut order = Vec::new();
        for e in &self.equations {
            for t in [&e.lhs, &e.rhs] {
                t.for_each_var(&mut |v| {
                    if !order.contains(&v) {
                        order.push(v)
                    }
                });
            }
        }
        order
    }

    /// The relation-file form: a `format=1` header followed by the DSL.
    pub fn to_file_string(&self) -> String {
        format!("format=1\n{self}")
    }

    pub fn variable_map(&self) -> HashMap<&str, usize> {
        self.variables.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect()
    }
}

/// The relation DSL. A `vars` line is emitted only when the declaration
/// order is not recoverable from the equations.
impl fmt::Display for RelationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.first_occurrence_order() != (0..self.var_count()).collect::<Vec<_>>() {
            writeln!(f, "vars {}", self.variables.join(" "))?;
        }
        for e in &self.equations {
            e.lhs.write(&self.variables, f)?;
            f.write_str("=")?;
            e.rhs.write(&self.variables, f)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

//! Backtracking search with propagation through invertible positions.

use rayon::prelude::*;

use crate::disingquandle::OrientedDisingquandle;
use crate::link::system::{Op, RelationSystem, Term};
use crate::table::Element;

const UNBOUND: Element = Element::MAX;

enum Propagation {
    Conflict,
    /// Some equation still has an unbound variable.
    Open,
    /// Every equation is fully bound and satisfied.
    Closed,
}

pub(crate) struct Solver<'a> {
    d: &'a OrientedDisingquandle,
    s: &'a RelationSystem,
    order: Vec<usize>,
}

/// Most occurrences first, ties broken by first appearance in the equations.
fn branching_order(s: &RelationSystem) -> Vec<usize> {
    let mut first_seen = vec![usize::MAX; s.var_count()];
    let mut position = 0;
    for e in &s.equations {
        for t in [&e.lhs, &e.rhs] {
            t.for_each_var(&mut |v| {
                if first_seen[v] == usize::MAX {
                    first_seen[v] = position;
                    position += 1;
                }
            });
        }
    }
    let counts = s.occurrence_counts();
    let mut order: Vec<usize> = (0..s.var_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(counts[v]), first_seen[v], v));
    order
}

impl<'a> Solver<'a> {
    pub(crate) fn new(s: &'a RelationSystem, d: &'a OrientedDisingquandle) -> Self {
        Solver { d, s, order: branching_order(s) }
    }

    fn eval(&self, t: &Term, a: &[Element]) -> Option<Element> {
        match t {
            Term::Var(v) => Some(a[*v]).filter(|&x| x != UNBOUND),
            Term::Apply(op, l, r) => {
                let l = self.eval(l, a)?;
                let r = self.eval(r, a)?;
                Some(op.table(self.d).get(l, r))
            }
        }
    }

    /// Solves `t = target` for the single unbound variable of `t` when it
    /// sits in the left operand of a chain of `*k` and `/k` applications.
    fn invert(&self, t: &Term, target: Element, a: &[Element]) -> Option<(usize, Element)> {
        match t {
            Term::Var(v) => Some((*v, target)),
            Term::Apply(op, l, r) => {
                let right = self.eval(r, a)?;
                let left_value = match *op {
                    Op::Star(c) => self.d.star_bar(c).get(target, right),
                    Op::Bar(c) => self.d.star(c).get(target, right),
                    Op::R1 | Op::R2 => return None,
                };
                self.invert(l, left_value, a)
            }
        }
    }

    fn propagate(&self, a: &mut [Element], trail: &mut Vec<usize>) -> Propagation {
        loop {
            let mut progress = false;
            let mut open = false;
            for e in &self.s.equations {
                let derived = match (self.eval(&e.lhs, a), self.eval(&e.rhs, a)) {
                    (Some(l), Some(r)) if l == r => continue,
                    (Some(_), Some(_)) => return Propagation::Conflict,
                    (Some(target), None) => self.invert(&e.rhs, target, a),
                    (None, Some(target)) => self.invert(&e.lhs, target, a),
                    (None, None) => None,
                };
                match derived {
                    Some((v, value)) => {
                        a[v] = value;
                        trail.push(v);
                        progress = true;
                    }
                    None => open = true,
                }
            }
            if !progress {
                return if open { Propagation::Open } else { Propagation::Closed };
            }
        }
    }

    fn unbound<'s>(&'s self, a: &'s [Element]) -> impl Iterator<Item = usize> + 's {
        self.order.iter().copied().filter(move |&v| a[v] == UNBOUND)
    }

    fn count_from(&self, a: &mut [Element]) -> u128 {
        let mut trail = Vec::new();
        let count = match self.propagate(a, &mut trail) {
            Propagation::Conflict => 0,
            Propagation::Closed => {
                let free = a.iter().filter(|&&x| x == UNBOUND).count();
                (self.d.size() as u128).pow(free as u32)
            }
            Propagation::Open => {
                let v = self.unbound(a).next().expect("an open equation has an unbound variable");
                let mut total = 0;
                for x in 0..self.d.size() {
                    a[v] = x;
                    total += self.count_from(a);
                }
                a[v] = UNBOUND;
                total
            }
        };
        for v in trail {
            a[v] = UNBOUND;
        }
        count
    }

    fn collect_from(&self, a: &mut [Element], out: &mut Vec<Vec<Element>>) {
        let mut trail = Vec::new();
        match self.propagate(a, &mut trail) {
            Propagation::Conflict => {}
            Propagation::Closed => {
                let free: Vec<usize> = self.unbound(a).collect();
                let mut full = a.to_vec();
                expand_free(&free, 0, &mut full, self.d.size(), out);
            }
            Propagation::Open => {
                let v = self.unbound(a).next().expect("an open equation has an unbound variable");
                for x in 0..self.d.size() {
                    a[v] = x;
                    self.collect_from(a, out);
                }
                a[v] = UNBOUND;
            }
        }
        for v in trail {
            a[v] = UNBOUND;
        }
    }

    /// The root after propagation and the variable to split on, if any.
    fn root(&self) -> (Vec<Element>, Option<usize>) {
        let mut a = vec![UNBOUND; self.s.var_count()];
        let mut trail = Vec::new();
        let split = match self.propagate(&mut a, &mut trail) {
            Propagation::Open => self.unbound(&a).next(),
            _ => None,
        };
        (a, split)
    }

    pub(crate) fn count(&self, threads: usize) -> u128 {
        let (root, split) = self.root();
        match split {
            Some(v) if threads > 1 => run_in_pool(threads, || {
                (0..self.d.size())
                    .into_par_iter()
                    .map(|x| {
                        let mut a = root.clone();
                        a[v] = x;
                        self.count_from(&mut a)
                    })
                    .sum()
            }),
            _ => self.count_from(&mut root.clone()),
        }
    }

    /// Every solution, sorted lexicographically by assignment.
    pub(crate) fn solutions(&self, threads: usize) -> Vec<Vec<Element>> {
        let (root, split) = self.root();
        let mut out = match split {
            Some(v) if threads > 1 => run_in_pool(threads, || {
                (0..self.d.size())
                    .into_par_iter()
                    .map(|x| {
                        let mut a = root.clone();
                        a[v] = x;
                        let mut branch = Vec::new();
                        self.collect_from(&mut a, &mut branch);
                        branch
                    })
                    .collect::<Vec<_>>()
                    .concat()
            }),
            _ => {
                let mut out = Vec::new();
                self.collect_from(&mut root.clone(), &mut out);
                out
            }
        };
        out.sort_unstable();
        out
    }
}

fn expand_free(free: &[usize], i: usize, a: &mut Vec<Element>, n: usize, out: &mut Vec<Vec<Element>>) {
    let Some(&v) = free.get(i) else {
        out.push(a.clone());
        return;
    };
    for x in 0..n {
        a[v] = x;
        expand_free(free, i + 1, a, n, out);
    }
    a[v] = UNBOUND;
}

pub(crate) fn run_in_pool<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

//! Conjugation quandles of finite groups with word-defined singular maps.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::format::{block_table, read_blocks};
use crate::report::AxiomReport;
use crate::singquandle::{validate_oriented_singquandle, OrientedSingquandle};
use crate::table::{Element, Table};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    mul: Table,
    inv: Vec<Element>,
    id: Element,
}

impl GroupTable {
    /// Checks associativity and derives the identity and inverses.
    pub fn new(mul: Table) -> Result<Self> {
        let n = mul.size();
        let id = (0..n)
            .find(|&e| (0..n).all(|x| mul.get(e, x) == x && mul.get(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| mul.get(x, y) == id && mul.get(y, x) == id)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
            inv.push(y);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mul.get(mul.get(x, y), z) != mul.get(x, mul.get(y, z)) {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({x},{y},{z})")));
                    }
                }
            }
        }
        Ok(GroupTable { mul, inv, id })
    }

    /// Like [`new`](Self::new) but also checks a supplied inverse list.
    pub fn with_inverses(mul: Table, inv: &[Element]) -> Result<Self> {
        let g = Self::new(mul)?;
        if g.inv != inv {
            return Err(Error::InvalidGroup("supplied inverses disagree with the multiplication table".into()));
        }
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(Table::from_fn(n, |x, y| (x + y) % n)?)
    }

    /// The symmetric group on `k` points; elements are permutations in
    /// lexicographic order and `x y` applies `y` first.
    pub fn symmetric(k: usize) -> Result<Self> {
        let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
        loop {
            let mut p = perms.last().unwrap().clone();
            // next lexicographic permutation
            let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else { break };
            let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            perms.push(p);
        }
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let mul = Table::from_fn(perms.len(), |a, b| {
            let composed: Vec<usize> = (0..k).map(|t| perms[a][perms[b][t]]).collect();
            index(&composed)
        })?;
        Self::new(mul)
    }

    pub fn order(&self) -> usize {
        self.mul.size()
    }

    pub fn identity(&self) -> Element {
        self.id
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.mul.get(x, y)
    }

    pub fn inv(&self, x: Element) -> Element {
        self.inv[x]
    }

    pub fn pow(&self, x: Element, k: u32) -> Element {
        (0..k).fold(self.id, |acc, _| self.mul(acc, x))
    }

    /// `y^-1 x y`.
    pub fn conjugate(&self, x: Element, y: Element) -> Element {
        self.mul(self.mul(self.inv(y), x), y)
    }
}

/// `n=<order>`, the multiplication block, a blank line, then the inverse line.
impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.order())?;
        self.mul.write_block(f)?;
        writeln!(f, "\n")?;
        let inv: Vec<String> = self.inv.iter().map(|v| v.to_string()).collect();
        writeln!(f, "{}", inv.join(" "))
    }
}

impl FromStr for GroupTable {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let file = read_blocks(text)?;
        if file.blocks.len() != 2 || file.blocks[1].len() != 1 {
            return Err(Error::parse(1, 1, "expected a multiplication block followed by one inverse line"));
        }
        let mul = block_table(file.n, 0, &file.blocks[0])?;
        let (line, inv) = &file.blocks[1][0];
        if inv.len() != file.n {
            return Err(Error::parse(*line, 1, format!("inverse line has {} entries, expected {}", inv.len(), file.n)));
        }
        Self::with_inverses(mul, inv)
    }
}

/// Which word family defines `R1, R2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjugationVariant {
    /// `R1 = x (x y^-1)^k`, `R2 = y (x^-1 y)^k`.
    A,
    /// `R1 = (x y^-1)^k x`, `R2 = (x^-1 y)^k y`.
    B,
    /// `R1 = x (y x^-1)^(k+1)`, `R2 = x (y^-1 x)^k`.
    D,
}

impl FromStr for ConjugationVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(ConjugationVariant::A),
            "B" | "b" => Ok(ConjugationVariant::B),
            "D" | "d" => Ok(ConjugationVariant::D),
            other => Err(Error::parse(1, 1, format!("unknown conjugation variant `{other}`"))),
        }
    }
}

/// Tabulates the conjugation quandle `x * y = y^-1 x y` with the chosen
/// `R1, R2`, and returns it with its validation report. The structure is
/// returned whether or not it passes.
pub fn conjugation_singquandle(
    g: &GroupTable,
    variant: ConjugationVariant,
    k: u32,
) -> Result<(OrientedSingquandle, AxiomReport)> {
    let n = g.order();
    let star = Table::from_fn(n, |x, y| g.conjugate(x, y))?;
    let (r1, r2) = match variant {
        ConjugationVariant::A => (
            Table::from_fn(n, |x, y| g.mul(x, g.pow(g.mul(x, g.inv(y)), k)))?,
            Table::from_fn(n, |x, y| g.mul(y, g.pow(g.mul(g.inv(x), y), k)))?,
        ),
        ConjugationVariant::B => (
            Table::from_fn(n, |x, y| g.mul(g.pow(g.mul(x, g.inv(y)), k), x))?,
            Table::from_fn(n, |x, y| g.mul(g.pow(g.mul(g.inv(x), y), k), y))?,
        ),
        ConjugationVariant::D => (
            Table::from_fn(n, |x, y| g.mul(x, g.pow(g.mul(y, g.inv(x)), k + 1)))?,
            Table::from_fn(n, |x, y| g.mul(x, g.pow(g.mul(g.inv(y), x), k)))?,
        ),
    };
    let s = OrientedSingquandle::new(star, r1, r2)?;
    let report = validate_oriented_singquandle(&s);
    Ok((s, report))
}

/// Smallest `(x, y)` violating
/// `R2(x, y) = R2(x y^-1 x, x) R1(x y^-1 x, x)^-1 R2(x y^-1 x, x)`, the
/// extra word constraint stated alongside the conjugation families.
pub fn conjugation_constraint_violation(g: &GroupTable, s: &OrientedSingquandle) -> Option<(Element, Element)> {
    let n = g.order();
    for x in 0..n {
        for y in 0..n {
            let w = g.mul(g.mul(x, g.inv(y)), x);
            let r2w = s.r2().get(w, x);
            let rhs = g.mul(g.mul(r2w, g.inv(s.r1().get(w, x))), r2w);
            if s.r2().get(x, y) != rhs {
                return Some((x, y));
            }
        }
    }
    None
}

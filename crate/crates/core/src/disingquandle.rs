//! Oriented disingquandles: two quandles sharing one pair of singular maps.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::format::{block_table, read_blocks};
use crate::quandle::check_quandle_into;
use crate::report::{first_pair, first_triple, Axiom, AxiomReport, Scope};
use crate::singquandle::{check_singquandle_into, same_size, OrientedSingquandle};
use crate::table::{right_inverse_table, Element, MapTable, OpTable, Table};

/// Index of one of the two quandle operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub fn index(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Color> {
        match i {
            1 => Some(Color::One),
            2 => Some(Color::Two),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedDisingquandle {
    star1: OpTable,
    star1_bar: OpTable,
    star2: OpTable,
    star2_bar: OpTable,
    r1: MapTable,
    r2: MapTable,
}

impl OrientedDisingquandle {
    /// Assembles the structure and derives both inverse tables. No axioms
    /// are checked beyond the column bijectivity the inverses need.
    pub fn new(star1: OpTable, star2: OpTable, r1: MapTable, r2: MapTable) -> Result<Self> {
        same_size(&[&star1, &star2, &r1, &r2])?;
        let star1_bar = right_inverse_table(&star1)?;
        let star2_bar = right_inverse_table(&star2)?;
        Ok(OrientedDisingquandle { star1, star1_bar, star2, star2_bar, r1, r2 })
    }

    /// Assembles and fully validates. Quandle failures (including a
    /// non-bijective column) are reported as axiom failures.
    pub fn validated(star1: OpTable, star2: OpTable, r1: MapTable, r2: MapTable) -> Result<Self> {
        same_size(&[&star1, &star2, &r1, &r2])?;
        let mut quandles = AxiomReport::default();
        check_quandle_into(&star1, Scope::Quandle1, &mut quandles);
        check_quandle_into(&star2, Scope::Quandle2, &mut quandles);
        if !quandles.passed() {
            return Err(Error::Axioms(Box::new(quandles)));
        }
        let d = Self::new(star1, star2, r1, r2)?;
        let report = validate_oriented_disingquandle(&d);
        if report.passed() {
            Ok(d)
        } else {
            Err(Error::Axioms(Box::new(report)))
        }
    }

    pub fn size(&self) -> usize {
        self.star1.size()
    }

    pub fn star(&self, c: Color) -> &OpTable {
        match c {
            Color::One => &self.star1,
            Color::Two => &self.star2,
        }
    }

    pub fn star_bar(&self, c: Color) -> &OpTable {
        match c {
            Color::One => &self.star1_bar,
            Color::Two => &self.star2_bar,
        }
    }

    pub fn r1(&self) -> &MapTable {
        &self.r1
    }

    pub fn r2(&self) -> &MapTable {
        &self.r2
    }

    /// The oriented singquandle `(*c, R1, R2)`.
    pub fn singquandle(&self, c: Color) -> OrientedSingquandle {
        OrientedSingquandle::new(self.star(c).clone(), self.r1.clone(), self.r2.clone())
            .expect("components share a carrier and have bijective columns")
    }

    /// True when `R1(x, x) = x = R2(x, x)` for every `x`, so constant
    /// colorings satisfy every crossing relation.
    pub fn fixes_diagonal(&self) -> bool {
        (0..self.size()).all(|x| self.r1.get(x, x) == x && self.r2.get(x, x) == x)
    }

    /// Transports every table along the permutation `perm`.
    pub fn relabel(&self, perm: &[Element]) -> Result<Self> {
        let n = self.size();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::ElementOutOfRange { element: p, n });
            }
        }
        if perm.len() != n {
            return Err(Error::SizeMismatch { left: n, right: perm.len() });
        }
        Self::new(self.star1.relabel(perm), self.star2.relabel(perm), self.r1.relabel(perm), self.r2.relabel(perm))
    }

    pub fn to_presentation_matrix(&self) -> PresentationMatrix {
        PresentationMatrix { blocks: [self.star1.clone(), self.star2.clone(), self.r1.clone(), self.r2.clone()] }
    }

    pub fn from_presentation_matrix(m: PresentationMatrix) -> Result<Self> {
        let [star1, star2, r1, r2] = m.blocks;
        Self::validated(star1, star2, r1, r2)
    }

    /// Smallest superset of `seed` closed under `*1, *2, /1, /2, R1, R2`.
    pub fn closure(&self, seed: &[Element]) -> Result<BTreeSet<Element>> {
        let n = self.size();
        if seed.is_empty() {
            return Err(Error::EmptySeed);
        }
        let mut member = vec![false; n];
        let mut elements = Vec::new();
        for &s in seed {
            if s >= n {
                return Err(Error::ElementOutOfRange { element: s, n });
            }
            if !std::mem::replace(&mut member[s], true) {
                elements.push(s);
            }
        }
        let tables = self.operation_tables();
        // Pairs (i, j) with both indices below `done` have been expanded.
        let mut done = 0;
        while done < elements.len() {
            let end = elements.len();
            for i in 0..end {
                for j in 0..end {
                    if i < done && j < done {
                        continue;
                    }
                    let (x, y) = (elements[i], elements[j]);
                    for t in &tables {
                        let v = t.get(x, y);
                        if !std::mem::replace(&mut member[v], true) {
                            elements.push(v);
                        }
                    }
                }
            }
            done = end;
        }
        Ok(elements.into_iter().collect())
    }

    /// Whether `subset` is closed under all six operations, i.e. is a
    /// sub-disingquandle.
    pub fn is_subdisingquandle(&self, subset: &[Element]) -> Result<bool> {
        let n = self.size();
        if subset.is_empty() {
            return Err(Error::EmptySeed);
        }
        let mut member = vec![false; n];
        for &s in subset {
            if s >= n {
                return Err(Error::ElementOutOfRange { element: s, n });
            }
            member[s] = true;
        }
        let tables = self.operation_tables();
        Ok(subset.iter().all(|&x| subset.iter().all(|&y| tables.iter().all(|t| member[t.get(x, y)]))))
    }

    fn operation_tables(&self) -> [&Table; 6] {
        [&self.star1, &self.star2, &self.star1_bar, &self.star2_bar, &self.r1, &self.r2]
    }
}

/// Runs both singquandle validations, the four mixed axioms and the
/// twist-compatibility identity.
pub fn validate_oriented_disingquandle(d: &OrientedDisingquandle) -> AxiomReport {
    let mut report = AxiomReport::default();
    check_quandle_into(&d.star1, Scope::Quandle1, &mut report);
    check_quandle_into(&d.star2, Scope::Quandle2, &mut report);
    check_singquandle_into(&d.star1, &d.star1_bar, &d.r1, &d.r2, Scope::Singquandle1, &mut report);
    check_singquandle_into(&d.star2, &d.star2_bar, &d.r1, &d.r2, Scope::Singquandle2, &mut report);
    report.extend(mixed_axioms(d));
    report
}

fn mixed_axioms(d: &OrientedDisingquandle) -> AxiomReport {
    let n = d.size();
    let op1 = |a, b| d.star1.get(a, b);
    let op2 = |a, b| d.star2.get(a, b);
    let inv1 = |a, b| d.star1_bar.get(a, b);
    let inv2 = |a, b| d.star2_bar.get(a, b);
    let r1 = |a, b| d.r1.get(a, b);
    let r2 = |a, b| d.r2.get(a, b);

    let mut report = AxiomReport::default();
    report.record(
        Scope::Mixed,
        Axiom::PassThrough12,
        first_triple(n, |x, y, z| op2(inv1(y, r1(x, z)), x) == inv1(op2(y, r2(x, z)), z)),
    );
    report.record(
        Scope::Mixed,
        Axiom::PassThrough21,
        first_triple(n, |x, y, z| op1(inv2(y, r1(x, z)), x) == inv2(op1(y, r2(x, z)), z)),
    );
    report.record(Scope::Mixed, Axiom::Twist12, first_pair(n, |x, y| op1(r1(x, y), r2(x, y)) == r2(y, op2(x, y))));
    report.record(Scope::Mixed, Axiom::Twist21, first_pair(n, |x, y| op2(r1(x, y), r2(x, y)) == r2(y, op1(x, y))));
    report.record(Scope::Mixed, Axiom::TwistCompatibility, first_pair(n, |x, y| r2(y, op1(x, y)) == r2(y, op2(x, y))));
    report
}

/// Validates raw blocks. Unlike [`OrientedDisingquandle::validated`] this
/// also reports on blocks whose columns are not bijective.
pub fn validate_presentation_matrix(m: &PresentationMatrix) -> AxiomReport {
    let [star1, star2, r1, r2] = m.blocks.clone();
    let mut quandles = AxiomReport::default();
    check_quandle_into(&star1, Scope::Quandle1, &mut quandles);
    check_quandle_into(&star2, Scope::Quandle2, &mut quandles);
    match OrientedDisingquandle::new(star1, star2, r1, r2) {
        Ok(d) => validate_oriented_disingquandle(&d),
        Err(_) => quandles,
    }
}

/// The block table `[M1 | M2 | M3 | M4]` of `*1, *2, R1, R2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PresentationMatrix {
    pub blocks: [Table; 4],
}

impl PresentationMatrix {
    pub fn new(blocks: [Table; 4]) -> Result<Self> {
        same_size(&blocks.iter().collect::<Vec<_>>())?;
        Ok(PresentationMatrix { blocks })
    }

    pub fn size(&self) -> usize {
        self.blocks[0].size()
    }
}

/// `n=<int>`, then the four blocks separated by blank lines.
impl fmt::Display for PresentationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.size())?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            block.write_block(f)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for PresentationMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let file = read_blocks(text)?;
        if file.blocks.len() != 4 {
            return Err(Error::parse(1, 1, format!("expected 4 blocks, found {}", file.blocks.len())));
        }
        let tables =
            file.blocks.iter().enumerate().map(|(k, b)| block_table(file.n, k, b)).collect::<Result<Vec<_>>>()?;
        let blocks: [Table; 4] = tables.try_into().expect("four blocks");
        PresentationMatrix::new(blocks)
    }
}

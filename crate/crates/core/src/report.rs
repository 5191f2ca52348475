//! Per-axiom verdicts with deterministic counterexamples.

use std::fmt;

use serde::Serialize;

use crate::table::Element;

/// Which part of a structure an axiom belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// A lone operation table.
    Quandle,
    /// The quandle `*1` of a disingquandle.
    Quandle1,
    /// The quandle `*2` of a disingquandle.
    Quandle2,
    /// A lone oriented singquandle.
    Singquandle,
    /// `(*1, R1, R2)` inside a disingquandle.
    Singquandle1,
    /// `(*2, R1, R2)` inside a disingquandle.
    Singquandle2,
    /// Axioms tying `*1` and `*2` together through `R1, R2`.
    Mixed,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::Quandle => "quandle",
            Scope::Quandle1 => "quandle1",
            Scope::Quandle2 => "quandle2",
            Scope::Singquandle => "singquandle",
            Scope::Singquandle1 => "singquandle1",
            Scope::Singquandle2 => "singquandle2",
            Scope::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `x * x = x`, counterexample `(x)`.
    Idempotency,
    /// every column map `x -> x * y` is a bijection, counterexample `(y)`.
    ColumnBijectivity,
    /// `(x * y) * z = (x * z) * (y * z)`.
    RightDistributivity,
    /// `(x * y) /y = x` and `(x / y) * y = x`.
    InverseCoherence,
    /// `R1(x / y, z) * y = R1(x, z * y)`.
    R1Transport,
    /// `R2(x / y, z) = R2(x, z * y) / y`.
    R2Transport,
    /// `(y / R1(x, z)) * x = (y * R2(x, z)) / z`.
    PassThrough,
    /// `R2(x, y) = R1(y, x * y)`.
    R2FromR1,
    /// `R1(x, y) * R2(x, y) = R2(y, x * y)`.
    Twist,
    /// `(y /1 R1(x, z)) *2 x = (y *2 R2(x, z)) /1 z`.
    PassThrough12,
    /// `(y /2 R1(x, z)) *1 x = (y *1 R2(x, z)) /2 z`.
    PassThrough21,
    /// `R1(x, y) *1 R2(x, y) = R2(y, x *2 y)`.
    Twist12,
    /// `R1(x, y) *2 R2(x, y) = R2(y, x *1 y)`.
    Twist21,
    /// `R2(y, x *1 y) = R2(y, x *2 y)`, a consequence of the others.
    TwistCompatibility,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Idempotency => "idempotency",
            Axiom::ColumnBijectivity => "column_bijectivity",
            Axiom::RightDistributivity => "right_distributivity",
            Axiom::InverseCoherence => "inverse_coherence",
            Axiom::R1Transport => "r1_transport",
            Axiom::R2Transport => "r2_transport",
            Axiom::PassThrough => "pass_through",
            Axiom::R2FromR1 => "r2_from_r1",
            Axiom::Twist => "twist",
            Axiom::PassThrough12 => "pass_through_12",
            Axiom::PassThrough21 => "pass_through_21",
            Axiom::Twist12 => "twist_12",
            Axiom::Twist21 => "twist_21",
            Axiom::TwistCompatibility => "twist_compatibility",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AxiomId {
    pub scope: Scope,
    pub axiom: Axiom,
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.scope.name(), self.axiom.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub id: AxiomId,
    pub passed: bool,
    /// Lexicographically smallest failing variable tuple.
    pub counterexample: Option<Vec<Element>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn get(&self, scope: Scope, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.id == AxiomId { scope, axiom })
    }

    pub(crate) fn record(&mut self, scope: Scope, axiom: Axiom, counterexample: Option<Vec<Element>>) {
        self.results.push(AxiomResult {
            id: AxiomId { scope, axiom },
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    pub(crate) fn extend(&mut self, other: AxiomReport) {
        self.results.extend(other.results);
    }

    /// One-line description of the first failure, or "all axioms hold".
    pub fn summary(&self) -> String {
        match self.failures().next() {
            None => "all axioms hold".to_string(),
            Some(r) => {
                let more = self.failures().count() - 1;
                let mut s = format!("{} fails", r.id);
                if let Some(c) = &r.counterexample {
                    s.push_str(&format!(" at {}", tuple(c)));
                }
                if more > 0 {
                    s.push_str(&format!(" (+{more} more)"));
                }
                s
            }
        }
    }
}

fn tuple(c: &[Element]) -> String {
    let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.counterexample {
                None => writeln!(f, "PASS {}", r.id)?,
                Some(c) => writeln!(f, "FAIL {} at {}", r.id, tuple(c))?,
            }
        }
        Ok(())
    }
}

/// Smallest pair `(x, y)` in lexicographic order violating `holds`.
pub(crate) fn first_pair(n: usize, mut holds: impl FnMut(Element, Element) -> bool) -> Option<Vec<Element>> {
    for x in 0..n {
        for y in 0..n {
            if !holds(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// Smallest triple `(x, y, z)` in lexicographic order violating `holds`.
pub(crate) fn first_triple(n: usize, mut holds: impl FnMut(Element, Element, Element) -> bool) -> Option<Vec<Element>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

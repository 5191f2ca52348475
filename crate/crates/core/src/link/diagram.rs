//! Oriented dichromatic singular link diagrams in a PD-style code.
//!
//! Slot order for classical crossings is `(under-in, over-in, under-out,
//! over-out)`; the over strand is a single arc, so `over-in = over-out`.
//! Singular crossings list `(in-left, in-right, out-left, out-right)`; the
//! strands cross, so `in-left` continues as `out-right` and `in-right` as
//! `out-left`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::disingquandle::Color;
use crate::error::{Error, Result};
use crate::link::system::{Equation, Op, RelationSystem, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Positive,
    Negative,
    Singular,
}

impl CrossingKind {
    fn keyword(self) -> &'static str {
        match self {
            CrossingKind::Positive => "pos",
            CrossingKind::Negative => "neg",
            CrossingKind::Singular => "sing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub slots: [String; 4],
}

impl Crossing {
    pub fn new(kind: CrossingKind, slots: [&str; 4]) -> Self {
        Crossing { kind, slots: slots.map(str::to_string) }
    }

    /// Slots where an arc starts or ends (as opposed to passing over).
    fn endpoints(&self) -> Vec<(usize, bool)> {
        match self.kind {
            // (slot, is_incoming)
            CrossingKind::Singular => vec![(0, true), (1, true), (2, false), (3, false)],
            _ => vec![(0, true), (2, false)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub name: String,
    pub arcs: Vec<String>,
    pub label: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinkDiagram {
    pub crossings: Vec<Crossing>,
    pub components: Vec<Component>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub crossing: Option<usize>,
    pub arc: Option<String>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DiagramReport {
    pub violations: Vec<Violation>,
}

impl DiagramReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for DiagramReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| {
                let mut s = String::new();
                if let Some(c) = v.crossing {
                    s.push_str(&format!("crossing {c}: "));
                }
                if let Some(a) = &v.arc {
                    s.push_str(&format!("arc `{a}`: "));
                }
                s.push_str(&v.message);
                s
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl LinkDiagram {
    fn component_of(&self) -> HashMap<&str, usize> {
        let mut map = HashMap::new();
        for (i, c) in self.components.iter().enumerate() {
            for a in &c.arcs {
                map.entry(a.as_str()).or_insert(i);
            }
        }
        map
    }

    /// Arcs in order of first appearance in the crossings, then any arcs
    /// that only occur in component declarations.
    pub fn arcs(&self) -> Vec<String> {
        let mut arcs: Vec<String> = Vec::new();
        let all = self
            .crossings
            .iter()
            .flat_map(|c| c.slots.iter())
            .chain(self.components.iter().flat_map(|c| c.arcs.iter()));
        for a in all {
            if !arcs.contains(a) {
                arcs.push(a.clone());
            }
        }
        arcs
    }

    pub fn validate(&self) -> DiagramReport {
        let mut violations = Vec::new();
        let mut v = |crossing: Option<usize>, arc: Option<&str>, message: String| {
            violations.push(Violation { crossing, arc: arc.map(str::to_string), message })
        };

        let mut owner: HashMap<&str, usize> = HashMap::new();
        for (i, c) in self.components.iter().enumerate() {
            if c.arcs.is_empty() {
                v(None, None, format!("component `{}` has no arcs", c.name));
            }
            for a in &c.arcs {
                if let Some(prev) = owner.insert(a.as_str(), i) {
                    v(None, Some(a), format!("listed in components `{}` and `{}`", self.components[prev].name, c.name));
                }
            }
        }
        let component = self.component_of();

        let mut incoming: HashMap<&str, usize> = HashMap::new();
        let mut outgoing: HashMap<&str, usize> = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for a in &c.slots {
                if !component.contains_key(a.as_str()) {
                    v(Some(ci), Some(a), "not assigned to any component".into());
                }
            }
            for (slot, is_in) in c.endpoints() {
                let map = if is_in { &mut incoming } else { &mut outgoing };
                *map.entry(c.slots[slot].as_str()).or_insert(0) += 1;
            }
            let same = |i: usize, j: usize| component.get(c.slots[i].as_str()) == component.get(c.slots[j].as_str());
            match c.kind {
                CrossingKind::Positive | CrossingKind::Negative => {
                    if !same(0, 2) {
                        v(Some(ci), None, "under-strand arcs belong to different components".into());
                    }
                    if c.slots[1] != c.slots[3] {
                        v(Some(ci), None, "over-strand must be a single arc passing through".into());
                    }
                }
                CrossingKind::Singular => {
                    if !same(0, 3) || !same(1, 2) {
                        v(Some(ci), None, "singular strands do not continue within their components".into());
                    }
                }
            }
        }

        for (i, c) in self.components.iter().enumerate() {
            for a in &c.arcs {
                if owner.get(a.as_str()) != Some(&i) {
                    continue;
                }
                let (ins, outs) =
                    (incoming.get(a.as_str()).copied().unwrap_or(0), outgoing.get(a.as_str()).copied().unwrap_or(0));
                let free = ins == 0 && outs == 0 && c.arcs.len() == 1;
                if !free && (ins != 1 || outs != 1) {
                    v(
                        None,
                        Some(a),
                        format!("must start and end at exactly one crossing each (starts {outs}, ends {ins})"),
                    );
                }
            }
        }
        DiagramReport { violations }
    }

    /// Compiles the coloring relations. Classical crossings use the
    /// operation indexed by the over-strand's label; negative crossings are
    /// written `under-out *k over = under-in`. Each singular crossing yields
    /// `R1(in-left, in-right) = out-left` and `R2(in-left, in-right) = out-right`.
    pub fn relations(&self) -> Result<RelationSystem> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::InvalidDiagram(report));
        }
        let variables = self.arcs();
        let index: HashMap<&str, usize> = variables.iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
        let component = self.component_of();
        let var = |a: &String| Term::Var(index[a.as_str()]);

        let mut equations = Vec::new();
        for c in &self.crossings {
            let [s0, s1, s2, s3] = &c.slots;
            match c.kind {
                CrossingKind::Positive | CrossingKind::Negative => {
                    let label = self.components[component[s1.as_str()]].label;
                    let (input, output) = if c.kind == CrossingKind::Positive { (s0, s2) } else { (s2, s0) };
                    equations
                        .push(Equation { lhs: Term::apply(Op::Star(label), var(input), var(s1)), rhs: var(output) });
                }
                CrossingKind::Singular => {
                    equations.push(Equation { lhs: Term::apply(Op::R1, var(s0), var(s1)), rhs: var(s2) });
                    equations.push(Equation { lhs: Term::apply(Op::R2, var(s0), var(s1)), rhs: var(s3) });
                }
            }
        }
        Ok(RelationSystem { variables, equations })
    }
}

/// Shorthand for [`LinkDiagram::validate`].
pub fn validate_diagram(d: &LinkDiagram) -> DiagramReport {
    d.validate()
}

/// Shorthand for [`LinkDiagram::relations`].
pub fn relations_from_diagram(d: &LinkDiagram) -> Result<RelationSystem> {
    d.relations()
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "format=1")?;
        for c in &self.crossings {
            writeln!(f, "{}({})", c.kind.keyword(), c.slots.join(","))?;
        }
        for c in &self.components {
            writeln!(f, "component {} = {{{}}} label {}", c.name, c.arcs.join(","), c.label.index())?;
        }
        Ok(())
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl FromStr for LinkDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut diagram = LinkDiagram::default();
        let mut saw_header = false;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if !saw_header {
                match line.strip_prefix("format=") {
                    Some("1") => {
                        saw_header = true;
                        continue;
                    }
                    Some(v) => return Err(Error::parse(line_no, 1, format!("unsupported format version `{v}`"))),
                    None => return Err(Error::parse(line_no, 1, "diagram files start with `format=1`")),
                }
            }
            if let Some(rest) = line.strip_prefix("component") {
                // component c1 = {a,b,c} label 1
                let (name, rest) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::parse(line_no, 1, "expected `component <name> = {...} label <1|2>`"))?;
                let name = name.trim();
                let rest = rest.trim();
                let open = rest.find('{').ok_or_else(|| Error::parse(line_no, 1, "missing `{`"))?;
                let close = rest.find('}').ok_or_else(|| Error::parse(line_no, 1, "missing `}`"))?;
                let arcs: Vec<String> =
                    rest[open + 1..close].split(',').map(|a| a.trim().to_string()).filter(|a| !a.is_empty()).collect();
                let label = rest[close + 1..]
                    .trim()
                    .strip_prefix("label")
                    .and_then(|l| l.trim().parse::<u8>().ok())
                    .and_then(Color::from_index)
                    .ok_or_else(|| Error::parse(line_no, close + 1, "expected `label 1` or `label 2`"))?;
                if !valid_name(name) || arcs.iter().any(|a| !valid_name(a)) {
                    return Err(Error::parse(line_no, 1, "invalid component or arc name"));
                }
                diagram.components.push(Component { name: name.to_string(), arcs, label });
                continue;
            }
            let (kw, rest) =
                line.split_once('(').ok_or_else(|| Error::parse(line_no, 1, format!("unrecognised line `{line}`")))?;
            let kind = match kw.trim() {
                "pos" => CrossingKind::Positive,
                "neg" => CrossingKind::Negative,
                "sing" => CrossingKind::Singular,
                other => return Err(Error::parse(line_no, 1, format!("unknown crossing kind `{other}`"))),
            };
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::parse(line_no, line.len(), "missing `)`"))?;
            let slots: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
            if slots.len() != 4 || slots.iter().any(|s| !valid_name(s)) {
                return Err(Error::parse(line_no, kw.len() + 2, "a crossing takes exactly four arc names"));
            }
            diagram.crossings.push(Crossing { kind, slots: slots.try_into().unwrap() });
        }
        if !saw_header {
            return Err(Error::parse(1, 1, "diagram files start with `format=1`"));
        }
        Ok(diagram)
    }
}

//! Parser for the relation DSL.
//!
//! ```text
//! # comment
//! vars x y z          optional declaration, fixes variable order
//! z*R1(x,y)=R2(x,y)
//! x *1 (y *2 z) = w
//! ```
//!
//! Infix `*1 *2 /1 /2` are left-associative with equal precedence; bare `*`
//! and `/` mean `*1` and `/1`. `R1(t,t)` and `R2(t,t)` are the singular maps.

use std::collections::HashMap;

use crate::disingquandle::Color;
use crate::error::{Error, Result};
use crate::link::system::{Equation, Op, RelationSystem, Term};

struct Parser<'a> {
    line: usize,
    chars: Vec<char>,
    pos: usize,
    names: &'a mut Vec<String>,
    index: &'a mut HashMap<String, usize>,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.err(format!("expected `{c}`, found `{d}`"))),
            None => Err(self.err(format!("expected `{c}`, found end of line"))),
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == '_' => {}
            _ => return None,
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '\'') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn variable(&mut self, name: String) -> Term {
        if let Some(&idx) = self.index.get(&name) {
            return Term::Var(idx);
        }
        let idx = self.names.len();
        self.index.insert(name.clone(), idx);
        self.names.push(name);
        Term::Var(idx)
    }

    fn color_suffix(&mut self) -> Color {
        match self.chars.get(self.pos) {
            Some('1') => {
                self.pos += 1;
                Color::One
            }
            Some('2') => {
                self.pos += 1;
                Color::Two
            }
            _ => Color::One,
        }
    }

    fn expr(&mut self) -> Result<Term> {
        let mut left = self.primary()?;
        loop {
            let op = match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    Op::Star(self.color_suffix())
                }
                Some('/') => {
                    self.pos += 1;
                    Op::Bar(self.color_suffix())
                }
                _ => return Ok(left),
            };
            let right = self.primary()?;
            left = Term::apply(op, left, right);
        }
    }

    fn primary(&mut self) -> Result<Term> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.expr()?;
                self.expect(')')?;
                Ok(t)
            }
            Some(_) => {
                let start = self.pos;
                let Some(name) = self.ident() else {
                    return Err(self.err(format!("unexpected `{}`", self.chars[self.pos])));
                };
                let is_call = self.peek() == Some('(');
                match (name.as_str(), is_call) {
                    ("R1" | "R2", true) => {
                        self.pos += 1;
                        let a = self.expr()?;
                        self.expect(',')?;
                        let b = self.expr()?;
                        self.expect(')')?;
                        Ok(Term::apply(if name == "R1" { Op::R1 } else { Op::R2 }, a, b))
                    }
                    ("R1" | "R2", false) => {
                        self.pos = start;
                        Err(self.err(format!("`{name}` is reserved for the singular map and needs two arguments")))
                    }
                    (_, true) => {
                        self.pos = start;
                        Err(self.err(format!("unknown function `{name}`")))
                    }
                    (_, false) => Ok(self.variable(name)),
                }
            }
            None => Err(self.err("expected a term, found end of line")),
        }
    }
}

/// Parses the DSL. An optional `format=1` first line is accepted.
pub fn parse_relation_dsl(text: &str) -> Result<RelationSystem> {
    let mut names = Vec::new();
    let mut index = HashMap::new();
    let mut equations = Vec::new();
    let mut seen_content = false;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if !seen_content {
            seen_content = true;
            if let Some(version) = trimmed.strip_prefix("format=") {
                if version.trim() != "1" {
                    return Err(Error::parse(line_no, 1, format!("unsupported format version `{}`", version.trim())));
                }
                continue;
            }
        }
        if let Some(rest) = trimmed.strip_prefix("vars").filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
        {
            if !equations.is_empty() || !names.is_empty() {
                return Err(Error::parse(line_no, 1, "`vars` must precede all equations"));
            }
            for name in rest.split_whitespace() {
                let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
                if !valid || name == "R1" || name == "R2" {
                    return Err(Error::parse(line_no, 1, format!("invalid variable name `{name}`")));
                }
                if index.insert(name.to_string(), names.len()).is_some() {
                    return Err(Error::parse(line_no, 1, format!("variable `{name}` declared twice")));
                }
                names.push(name.to_string());
            }
            continue;
        }

        let mut p =
            Parser { line: line_no, chars: line.chars().collect(), pos: 0, names: &mut names, index: &mut index };
        let lhs = p.expr()?;
        p.expect('=')?;
        let rhs = p.expr()?;
        if let Some(c) = p.peek() {
            return Err(p.err(format!("unexpected `{c}` after equation")));
        }
        equations.push(Equation { lhs, rhs });
    }
    Ok(RelationSystem { variables: names, equations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_equation() {
        let s = parse_relation_dsl("x*y=z").unwrap();
        assert_eq!(s.variables, ["x", "y", "z"]);
        assert_eq!(s.equations.len(), 1);
        assert_eq!(s.to_string(), "x*1y=z\n");
    }

    #[test]
    fn nested_term_prints_back() {
        let s = parse_relation_dsl("x*1(y*2z)=w").unwrap();
        assert_eq!(s.to_string(), "x*1(y*2z)=w\n");
        assert_eq!(s.variables, ["x", "y", "z", "w"]);
    }

    #[test]
    fn left_associativity() {
        let s = parse_relation_dsl("a*b/2c=d").unwrap();
        let expected = Term::apply(
            Op::Bar(Color::Two),
            Term::apply(Op::Star(Color::One), Term::Var(0), Term::Var(1)),
            Term::Var(2),
        );
        assert_eq!(s.equations[0].lhs, expected);
    }

    #[test]
    fn singular_maps_and_comments() {
        let s =
            parse_relation_dsl("format=1\n# trefoil-like\nz*R1(x,y)=R2(x,y)  # first\n\ny*z=R1(x,y)\nx*y=z\n").unwrap();
        assert_eq!(s.variables, ["z", "x", "y"]);
        assert_eq!(s.equations.len(), 3);
    }

    #[test]
    fn vars_declaration_keeps_unused() {
        let s = parse_relation_dsl("vars a b").unwrap();
        assert_eq!(s.variables, ["a", "b"]);
        assert!(s.equations.is_empty());
        assert_eq!(parse_relation_dsl(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn errors_carry_position() {
        assert_eq!(parse_relation_dsl("x*y=z\nx*=y"), Err(Error::parse(2, 3, "unexpected `=`")));
        assert!(matches!(parse_relation_dsl("F(x,y)=z"), Err(Error::Parse { line: 1, column: 1, .. })));
        assert!(matches!(parse_relation_dsl("R1=z"), Err(Error::Parse { .. })));
        assert!(matches!(parse_relation_dsl("x*y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_relation_dsl("(x*y=z"), Err(Error::Parse { .. })));
        assert!(matches!(parse_relation_dsl("format=2\nx=y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_relation_dsl("x=y\nvars x"), Err(Error::Parse { .. })));
    }
}

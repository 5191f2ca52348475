//! Named structures from the worked examples.

use std::fmt;
use std::str::FromStr;

use crate::disingquandle::OrientedDisingquandle;
use crate::error::{Error, Result};
use crate::families::affine::{affine_quadratic_disingquandle, AffineQuadraticParams, QuadraticPoly};
use crate::table::Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    /// `Z_10`, `x * y = 3x - 2y`, `R1 = 4x + 2y + 5xy`.
    Z10Canonical,
    /// `Z_10`, `x * y = 3x - 2y`, `R1 = 5 + x + 5y + 5x² + 5y² + 5xy`.
    Z10Uno,
    /// `Z_30`, `x * y = 13x - 12y`, `R1 = 5 - 9x + 5y + 10x² + 15y² + 20xy`.
    Z30,
    /// `Z_60`, `x * y = 7x - 6y`, `R1 = 10 + 6x + 5y + 10x² + 20y² + 30xy`.
    Z60,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::Z10Canonical, Builtin::Z10Uno, Builtin::Z30, Builtin::Z60];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Z10Canonical => "z10_canonical",
            Builtin::Z10Uno => "z10_uno",
            Builtin::Z30 => "z30",
            Builtin::Z60 => "z60",
        }
    }

    pub fn params(self) -> AffineQuadraticParams {
        let p = |n, a, alpha, beta, gamma, lambda, mu, delta| AffineQuadraticParams {
            n,
            a,
            alpha,
            beta,
            gamma,
            lambda,
            mu,
            delta,
        };
        match self {
            Builtin::Z10Canonical => p(10, 3, 0, 4, 2, 0, 0, 5),
            Builtin::Z10Uno => p(10, 3, 5, 1, 5, 5, 5, 5),
            Builtin::Z30 => p(30, 13, 5, -9, 5, 10, 15, 20),
            Builtin::Z60 => p(60, 7, 10, 6, 5, 10, 20, 30),
        }
    }

    /// The closed form printed for `R2` alongside the example.
    pub fn printed_r2(self) -> QuadraticPoly {
        match self {
            Builtin::Z10Canonical | Builtin::Z10Uno => QuadraticPoly::new(10, [0, 6, 0, 0, 0, 5]),
            Builtin::Z30 => QuadraticPoly::new(30, [5, 5, 21, 15, 10, 20]),
            Builtin::Z60 => QuadraticPoly::new(60, [10, 35, -24, 20, 10, 0]),
        }
    }

    pub fn structure(self) -> OrientedDisingquandle {
        affine_quadratic_disingquandle(&self.params()).expect("builtin parameters satisfy the family conditions")
    }

    /// Compares the derived `R2` table with the printed closed form.
    pub fn r2_audit(self) -> R2Audit {
        let derived = self.params().r2_poly();
        let printed = self.printed_r2();
        let table = self.structure();
        let mismatched_pairs = (0..table.size())
            .flat_map(|x| (0..table.size()).map(move |y| (x, y)))
            .filter(|&(x, y)| table.r2().get(x, y) != printed.eval(x, y))
            .collect();
        R2Audit { builtin: self, derived, printed, mismatched_pairs }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| Error::UnknownBuiltin(s.to_string()))
    }
}

/// Shorthand for `name.parse::<Builtin>()?.structure()`.
pub fn builtin(name: &str) -> Result<OrientedDisingquandle> {
    Ok(name.parse::<Builtin>()?.structure())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R2Audit {
    pub builtin: Builtin,
    pub derived: QuadraticPoly,
    pub printed: QuadraticPoly,
    pub mismatched_pairs: Vec<(Element, Element)>,
}

impl R2Audit {
    pub fn consistent(&self) -> bool {
        self.mismatched_pairs.is_empty()
    }
}

impl fmt::Display for R2Audit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: derived R2 = {}", self.builtin, self.derived)?;
        writeln!(f, "{}: printed R2 = {}", self.builtin, self.printed)?;
        write!(
            f,
            "{}: {} of {} pairs disagree",
            self.builtin,
            self.mismatched_pairs.len(),
            self.derived.modulus * self.derived.modulus
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for b in Builtin::ALL {
            assert_eq!(b.name().parse::<Builtin>().unwrap(), b);
        }
        assert_eq!("z11".parse::<Builtin>(), Err(Error::UnknownBuiltin("z11".into())));
    }

    #[test]
    fn printed_r2_consistency() {
        assert!(Builtin::Z10Canonical.r2_audit().consistent());
        assert!(Builtin::Z30.r2_audit().consistent());
        assert!(!Builtin::Z10Uno.r2_audit().consistent());
        assert!(!Builtin::Z60.r2_audit().consistent());
    }
}

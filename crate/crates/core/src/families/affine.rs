//! Affine quandles `x * y = a x + (1 - a) y` over `Z_n` with quadratic `R1`.

use std::fmt;
use std::str::FromStr;

use crate::disingquandle::OrientedDisingquandle;
use crate::error::{Error, Result};
use crate::table::{Element, Table};

/// `c + x·X + y·Y + xx·X² + yy·Y² + xy·XY` over `Z_n`, coefficients reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticPoly {
    pub modulus: u64,
    pub constant: u64,
    pub x: u64,
    pub y: u64,
    pub xx: u64,
    pub yy: u64,
    pub xy: u64,
}

impl QuadraticPoly {
    pub fn new(modulus: u64, coefficients: [i64; 6]) -> Self {
        let r = |c: i64| c.rem_euclid(modulus as i64) as u64;
        let [constant, x, y, xx, yy, xy] = coefficients;
        QuadraticPoly { modulus, constant: r(constant), x: r(x), y: r(y), xx: r(xx), yy: r(yy), xy: r(xy) }
    }

    pub fn eval(&self, x: Element, y: Element) -> Element {
        let (x, y, n) = (x as u64, y as u64, self.modulus);
        let v = self.constant
            + self.x * x % n
            + self.y * y % n
            + self.xx * (x * x % n) % n
            + self.yy * (y * y % n) % n
            + self.xy * (x * y % n) % n;
        (v % n) as Element
    }

    pub fn tabulate(&self) -> Table {
        Table::from_fn(self.modulus as usize, |x, y| self.eval(x, y)).expect("reduced polynomial stays in range")
    }

    /// Pairs on which two polynomials (same modulus) disagree.
    pub fn disagreements(&self, other: &QuadraticPoly) -> Vec<(Element, Element)> {
        let n = self.modulus as usize;
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| self.eval(x, y) != other.eval(x, y)).collect()
    }
}

impl fmt::Display for QuadraticPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms =
            [(self.constant, ""), (self.x, "x"), (self.y, "y"), (self.xx, "x^2"), (self.yy, "y^2"), (self.xy, "xy")];
        let parts: Vec<String> = terms
            .iter()
            .filter(|(c, _)| *c != 0)
            .map(|(c, m)| match (*c, *m) {
                (c, "") => c.to_string(),
                (1, m) => m.to_string(),
                (c, m) => format!("{c}{m}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", parts.join(" + "))?;
        }
        write!(f, " (mod {})", self.modulus)
    }
}

/// Parameters of the affine-quadratic family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineQuadraticParams {
    pub n: u64,
    pub a: i64,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub lambda: i64,
    pub mu: i64,
    pub delta: i64,
}

/// The first parameter condition a tuple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamViolation {
    ModulusTooSmall {
        n: u64,
    },
    MultiplierNotInvertible {
        a: u64,
        n: u64,
    },
    MultiplierSquaresToOne {
        a: u64,
        n: u64,
    },
    /// `(1 - a) * value != 0 (mod n)` for the named coefficient expression.
    Annihilator {
        coefficient: &'static str,
        value: u64,
        n: u64,
    },
}

impl fmt::Display for ParamViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamViolation::ModulusTooSmall { n } => write!(f, "modulus n = {n} must be at least 3"),
            ParamViolation::MultiplierNotInvertible { a, n } => write!(f, "gcd(a, n) != 1 for a = {a}, n = {n}"),
            ParamViolation::MultiplierSquaresToOne { a, n } => write!(f, "a^2 ≡ 1 (mod {n}) for a = {a}"),
            ParamViolation::Annihilator { coefficient, value, n } => {
                write!(f, "(1 - a)·{coefficient} ≢ 0 (mod {n}) ({coefficient} = {value})")
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(n as i128) as u64)
}

impl AffineQuadraticParams {
    fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.n as i64) as u64
    }

    pub fn multiplier(&self) -> u64 {
        self.reduce(self.a)
    }

    pub fn check(&self) -> Result<(), ParamViolation> {
        let n = self.n;
        if n < 3 {
            return Err(ParamViolation::ModulusTooSmall { n });
        }
        let a = self.multiplier();
        if gcd(a, n) != 1 {
            return Err(ParamViolation::MultiplierNotInvertible { a, n });
        }
        if a * a % n == 1 {
            return Err(ParamViolation::MultiplierSquaresToOne { a, n });
        }
        let one_minus_a = self.reduce(1 - a as i64);
        let conditions = [
            ("alpha", self.alpha),
            ("(1 - beta - gamma)", 1 - self.beta - self.gamma),
            ("lambda", self.lambda),
            ("mu", self.mu),
            ("delta", self.delta),
        ];
        for (coefficient, v) in conditions {
            let value = self.reduce(v);
            if !(one_minus_a * value).is_multiple_of(n) {
                return Err(ParamViolation::Annihilator { coefficient, value, n });
            }
        }
        Ok(())
    }

    pub fn r1_poly(&self) -> QuadraticPoly {
        QuadraticPoly::new(self.n, [self.alpha, self.beta, self.gamma, self.lambda, self.mu, self.delta])
    }

    /// Expansion of `R1(y, a x + (1 - a) y)`.
    pub fn r2_poly(&self) -> QuadraticPoly {
        let m = self.n as i128;
        let r = |v: i128| v.rem_euclid(m) as i64;
        let a = self.multiplier() as i128;
        let b = 1 - a;
        let (al, be, ga, la, mu, de) = (
            self.alpha as i128,
            self.beta as i128,
            self.gamma as i128,
            self.lambda as i128,
            self.mu as i128,
            self.delta as i128,
        );
        QuadraticPoly::new(
            self.n,
            [r(al), r(ga * a), r(be + ga * b), r(mu * a * a), r(la + mu * b * b + de * b), r(2 * mu * a * b + de * a)],
        )
    }

    /// Tables `(*, R1, R2)` with `R2(x, y) = R1(y, x * y)`, without any checks
    /// beyond `a` being invertible.
    pub fn tables(&self) -> Result<(Table, Table, Table)> {
        let n = self.n as usize;
        let a = self.multiplier();
        if n == 0 || mod_inverse(a, self.n).is_none() {
            return Err(Error::Parameter(ParamViolation::MultiplierNotInvertible { a, n: self.n }));
        }
        let b = self.reduce(1 - a as i64);
        let star = Table::from_fn(n, |x, y| ((a * x as u64 + b * y as u64) % self.n) as usize)?;
        let r1 = self.r1_poly().tabulate();
        let r2 = Table::from_fn(n, |x, y| r1.get(y, star.get(x, y)))?;
        Ok((star, r1, r2))
    }
}

/// Builds the disingquandle with `*1 = *2`, rejecting parameters that fail
/// the family's conditions and re-validating the result.
pub fn affine_quadratic_disingquandle(p: &AffineQuadraticParams) -> Result<OrientedDisingquandle> {
    p.check().map_err(Error::Parameter)?;
    force_affine_quadratic(p)
}

/// Builds and validates without the parameter pre-check.
pub fn force_affine_quadratic(p: &AffineQuadraticParams) -> Result<OrientedDisingquandle> {
    let (star, r1, r2) = p.tables()?;
    match OrientedDisingquandle::validated(star.clone(), star, r1, r2) {
        Err(Error::Axioms(report)) => Err(Error::Internal(report)),
        other => other,
    }
}

/// Parses `n=10 a=3 alpha=0 beta=4 gamma=2 lambda=0 mu=0 delta=5`.
/// Omitted coefficients default to zero; `n` and `a` are required.
impl FromStr for AffineQuadraticParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = AffineQuadraticParams { n: 0, a: 0, alpha: 0, beta: 0, gamma: 0, lambda: 0, mu: 0, delta: 0 };
        let (mut have_n, mut have_a) = (false, false);
        let mut column = 1;
        for token in s.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::parse(1, column, format!("expected key=value, found `{token}`")))?;
            let value: i64 =
                value.parse().map_err(|_| Error::parse(1, column, format!("`{value}` is not an integer")))?;
            match key {
                "n" => {
                    if value < 1 {
                        return Err(Error::parse(1, column, "n must be positive"));
                    }
                    p.n = value as u64;
                    have_n = true;
                }
                "a" => {
                    p.a = value;
                    have_a = true;
                }
                "alpha" => p.alpha = value,
                "beta" => p.beta = value,
                "gamma" => p.gamma = value,
                "lambda" => p.lambda = value,
                "mu" => p.mu = value,
                "delta" => p.delta = value,
                other => return Err(Error::parse(1, column, format!("unknown parameter `{other}`"))),
            }
            column += token.len() + 1;
        }
        if !have_n || !have_a {
            return Err(Error::parse(1, 1, "parameters `n` and `a` are required"));
        }
        Ok(p)
    }
}

impl fmt::Display for AffineQuadraticParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} a={} alpha={} beta={} gamma={} lambda={} mu={} delta={}",
            self.n, self.a, self.alpha, self.beta, self.gamma, self.lambda, self.mu, self.delta
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: &str) -> AffineQuadraticParams {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_r2_is_6x_plus_5xy() {
        let p = params("n=10 a=3 alpha=0 beta=4 gamma=2 lambda=0 mu=0 delta=5");
        assert_eq!(p.r2_poly(), QuadraticPoly::new(10, [0, 6, 0, 0, 0, 5]));
        let d = affine_quadratic_disingquandle(&p).unwrap();
        assert_eq!(d.r2(), &QuadraticPoly::new(10, [0, 6, 0, 0, 0, 5]).tabulate());
    }

    #[test]
    fn uno_r2_expansion() {
        let p = params("n=10 a=3 alpha=5 beta=1 gamma=5 lambda=5 mu=5 delta=5");
        assert_eq!(p.r2_poly(), QuadraticPoly::new(10, [5, 5, 1, 5, 5, 5]));
        assert!(affine_quadratic_disingquandle(&p).is_ok());
    }

    #[test]
    fn z30_r2_matches_printed() {
        let p = params("n=30 a=13 alpha=5 beta=-9 gamma=5 lambda=10 mu=15 delta=20");
        assert_eq!(p.r2_poly(), QuadraticPoly::new(30, [5, 5, 21, 15, 10, 20]));
    }

    #[test]
    fn z60_r2_has_extra_xy_term() {
        let p = params("n=60 a=7 alpha=10 beta=6 gamma=5 lambda=10 mu=20 delta=30");
        assert_eq!(p.r2_poly(), QuadraticPoly::new(60, [10, 35, -24, 20, 10, 30]));
    }

    #[test]
    fn r2_poly_agrees_with_tabulation() {
        for s in [
            "n=10 a=3 alpha=5 beta=1 gamma=5 lambda=5 mu=5 delta=5",
            "n=60 a=7 alpha=10 beta=6 gamma=5 lambda=10 mu=20 delta=30",
            "n=11 a=2 alpha=3 beta=4 gamma=7 lambda=1 mu=9 delta=6",
        ] {
            let p = params(s);
            let (_, _, r2) = p.tables().unwrap();
            assert_eq!(r2, p.r2_poly().tabulate(), "{s}");
        }
    }

    #[test]
    fn rejections_name_the_condition() {
        let e = affine_quadratic_disingquandle(&params("n=10 a=9 beta=1")).unwrap_err();
        assert_eq!(e, Error::Parameter(ParamViolation::MultiplierSquaresToOne { a: 9, n: 10 }));
        assert!(e.to_string().contains("a^2 ≡ 1"));
        let e = affine_quadratic_disingquandle(&params("n=10 a=2")).unwrap_err();
        assert_eq!(e, Error::Parameter(ParamViolation::MultiplierNotInvertible { a: 2, n: 10 }));
        let e = affine_quadratic_disingquandle(&params("n=10 a=3 alpha=1 beta=1")).unwrap_err();
        assert!(matches!(e, Error::Parameter(ParamViolation::Annihilator { coefficient: "alpha", .. })));
        let e = affine_quadratic_disingquandle(&params("n=2 a=1")).unwrap_err();
        assert_eq!(e, Error::Parameter(ParamViolation::ModulusTooSmall { n: 2 }));
    }

    #[test]
    fn parse_errors() {
        assert!("n=10 a=3 zeta=1".parse::<AffineQuadraticParams>().is_err());
        assert!("n=10 alpha=1".parse::<AffineQuadraticParams>().is_err());
        assert!("n=10 a=x".parse::<AffineQuadraticParams>().is_err());
    }

    #[test]
    fn poly_display() {
        assert_eq!(QuadraticPoly::new(10, [0, 6, 0, 0, 0, 5]).to_string(), "6x + 5xy (mod 10)");
        assert_eq!(QuadraticPoly::new(10, [5, 1, 0, 0, 0, 0]).to_string(), "5 + x (mod 10)");
    }
}

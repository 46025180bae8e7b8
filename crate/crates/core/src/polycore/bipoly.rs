use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{self, Rational};
use super::{UniPoly, Var};
use crate::error::Result;

/// Sparse bivariate polynomial in `(x, z)`.
///
/// Keys are `(x_power, z_power)`. Zero coefficients are never stored, so the
/// zero polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, x_pow: u32, z_pow: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_pow, z_pow), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Embeds a univariate polynomial; its variable tag decides the axis.
    pub fn from_uni(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let (xp, zp) = match p.var() {
                Var::X => (i as u32, 0),
                Var::Z => (0, i as u32),
            };
            out.add_term(xp, zp, c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x_pow: u32, z_pow: u32) -> Rational {
        self.terms
            .get(&(x_pow, z_pow))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn z_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        match var {
            Var::X => self.x_degree(),
            Var::Z => self.z_degree(),
        }
    }

    fn add_term(&mut self, xp: u32, zp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((xp, zp)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(xp, zp));
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect(),
        }
    }

    /// Exact `k`-th formal partial derivative in `var`.
    pub fn differentiate(&self, var: Var, k: u32) -> Self {
        let mut out = Self::zero();
        for (&(xp, zp), c) in &self.terms {
            let pow = match var {
                Var::X => xp,
                Var::Z => zp,
            };
            if pow < k {
                continue;
            }
            let falling: i64 = ((pow - k + 1)..=pow).map(i64::from).product();
            let c = c * rational::int(falling);
            match var {
                Var::X => out.add_term(xp - k, zp, c),
                Var::Z => out.add_term(xp, zp - k, c),
            }
        }
        out
    }

    /// Same as [`BiPoly::differentiate`], with the variable given as a tag.
    pub fn differentiate_tag(&self, tag: &str, k: u32) -> Result<Self> {
        Ok(self.differentiate(tag.parse()?, k))
    }

    /// Substitutes `var = value`, leaving a polynomial in the other variable.
    pub fn specialize(&self, var: Var, value: &Rational) -> UniPoly {
        let rest = var.other();
        let len = self.degree_in(rest).map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (&(xp, zp), c) in &self.terms {
            let (fixed_pow, rest_pow) = match var {
                Var::X => (xp, zp),
                Var::Z => (zp, xp),
            };
            coeffs[rest_pow as usize] += c * pow(value, fixed_pow);
        }
        UniPoly::new(coeffs, rest)
    }

    pub fn eval(&self, x: &Rational, z: &Rational) -> Rational {
        self.specialize(Var::X, x).eval(z)
    }

    /// The coefficient of `x^i`, a polynomial in `z`.
    pub fn x_coefficient(&self, i: u32) -> UniPoly {
        let len = self.z_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (&(xp, zp), c) in &self.terms {
            if xp == i {
                coeffs[zp as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs, Var::Z)
    }

    /// The coefficient of `z^j`, a polynomial in `x`.
    pub fn z_coefficient(&self, j: u32) -> UniPoly {
        let len = self.x_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (&(xp, zp), c) in &self.terms {
            if zp == j {
                coeffs[xp as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs, Var::X)
    }

    /// `P(x, z + shift)`.
    pub fn shift_z(&self, shift: &Rational) -> Self {
        let mut out = Self::zero();
        for i in self.x_powers() {
            let shifted = self.x_coefficient(i).taylor_shift(shift);
            for (j, c) in shifted.coeffs().iter().enumerate() {
                out.add_term(i, j as u32, c.clone());
            }
        }
        out
    }

    /// `P(-x, z)`.
    pub fn reflect_x(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(xp, zp), c)| ((xp, zp), if xp % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn mul_x_pow(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(xp, zp), c)| ((xp + k, zp), c.clone())).collect(),
        }
    }

    /// Multiplies by a polynomial in `z` alone.
    pub fn mul_z_poly(&self, factor: &UniPoly) -> Self {
        self * &Self::from_uni(&factor.clone().with_var(Var::Z))
    }

    /// Exact division by a polynomial in `z` alone, done per power of `x`.
    pub fn exact_div_z(&self, divisor: &UniPoly) -> Result<Self> {
        let divisor = divisor.clone().with_var(Var::Z);
        let mut out = Self::zero();
        for i in self.x_powers() {
            let q = self.x_coefficient(i).exact_div(&divisor)?;
            for (j, c) in q.coeffs().iter().enumerate() {
                out.add_term(i, j as u32, c.clone());
            }
        }
        Ok(out)
    }

    fn x_powers(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().map(|k| k.0).collect();
        v.dedup();
        v
    }

    /// Text form grouped by powers of `x`, e.g. `(1/2)*x^2 + (-2 + -1*z)*x + (...)`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut powers = self.x_powers();
        powers.reverse();
        powers
            .into_iter()
            .map(|i| {
                let c = self.x_coefficient(i).to_text();
                match i {
                    0 => format!("({c})"),
                    1 => format!("({c})*x"),
                    _ => format!("({c})*x^{i}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn pow(base: &Rational, exp: u32) -> Rational {
    (0..exp).fold(Rational::one(), |acc, _| acc * base)
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.to_text())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(xp, zp), c) in &rhs.terms {
            out.add_term(xp, zp, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(xp, zp), c) in &rhs.terms {
            out.add_term(xp, zp, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(d, e), f) in &rhs.terms {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{frac, int};

    /// L1(x, z) = (z + 1) - x
    fn l1() -> BiPoly {
        &(&BiPoly::z() + &BiPoly::constant(int(1))) - &BiPoly::x()
    }

    #[test]
    fn derivative_of_degree_one() {
        assert_eq!(l1().differentiate(Var::Z, 1), BiPoly::constant(int(1)));
        assert!(l1().differentiate(Var::Z, 2).is_zero());
        assert_eq!(l1().differentiate(Var::Z, 0), l1());
    }

    #[test]
    fn unknown_tag_is_an_error() {
        assert!(l1().differentiate_tag("y", 1).is_err());
        assert_eq!(l1().differentiate_tag("x", 1).unwrap(), BiPoly::constant(int(-1)));
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = &l1() - &l1();
        assert!(p.is_zero());
        assert_eq!(p.x_degree(), None);
        assert_eq!(p.terms().count(), 0);
    }

    #[test]
    fn specialize_both_ways() {
        let p = &l1() * &l1();
        let at_x = p.specialize(Var::X, &frac(1, 2));
        assert_eq!(at_x.var(), Var::Z);
        assert_eq!(at_x.eval(&int(3)), p.eval(&frac(1, 2), &int(3)));
        let at_z = p.specialize(Var::Z, &int(-1));
        assert_eq!(at_z.var(), Var::X);
        assert_eq!(at_z, UniPoly::from_ints(&[0, 0, 1], Var::X));
    }

    #[test]
    fn shift_and_divide() {
        let p = &l1() * &BiPoly::z();
        let shifted = p.shift_z(&int(2));
        assert_eq!(shifted.eval(&int(5), &int(1)), p.eval(&int(5), &int(3)));
        let q = p.exact_div_z(&UniPoly::from_ints(&[0, 1], Var::Z)).unwrap();
        assert_eq!(q, l1());
        assert!(p.exact_div_z(&UniPoly::from_ints(&[7, 1], Var::Z)).is_err());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use super::Var;
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `var^i`. The zero polynomial is the empty
/// vector; otherwise the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: Var,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>, var: Var) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs, var }
    }

    pub fn zero(var: Var) -> Self {
        Self { coeffs: Vec::new(), var }
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    /// The monic linear polynomial `var - root`.
    pub fn linear_root(root: &Rational, var: Var) -> Self {
        Self::new(vec![-root.clone(), Rational::one()], var)
    }

    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect(), var)
    }

    /// `∏ (var - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>, var: Var) -> Self {
        roots
            .into_iter()
            .fold(Self::constant(Rational::one(), var), |acc, r| {
                &acc * &Self::linear_root(r, var)
            })
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn sign_at(&self, at: &Rational) -> i8 {
        rational::sign(&self.eval(at))
    }

    /// Sign as `var -> +inf` (`positive = true`) or `-inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        match (self.leading(), self.degree()) {
            (Some(lc), Some(d)) => {
                let s = rational::sign(lc);
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => 0,
        }
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * at + rational::to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rational::int(i as i64))
            .collect();
        Self::new(coeffs, self.var)
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.var);
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            var: self.var,
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Divides by `|c|` for a suitable positive rational `c` so that the
    /// leading coefficient becomes `±1`. Signs are preserved everywhere.
    pub fn sign_normalized(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.abs().recip()),
            None => self.clone(),
        }
    }

    /// `p(-var)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::new(coeffs, self.var)
    }

    /// `p(var + shift)` by exact binomial re-expansion (Horner form).
    pub fn taylor_shift(&self, shift: &Rational) -> Self {
        let lin = Self::new(vec![shift.clone(), Rational::one()], self.var);
        let mut acc = Self::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone(), self.var);
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or(Error::ZeroPolynomial("division by zero polynomial"))?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let var = self.var;
        if rem.len() <= dd {
            return Ok((Self::zero(var), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] * &lc_inv;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot, var), Self::new(rem, var)))
    }

    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "{self} is not divisible by {divisor}"
            )));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.sign_normalized();
        }
        a.monic()
    }

    /// `Σ |c_i|`.
    pub fn abs_coeff_sum(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Debug text form `c0 + c1*z + c2*z^2` with exact `p/q` coefficients.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let v = self.var.symbol();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let c = rational::to_exact(c);
                match i {
                    0 => c,
                    1 => format!("{c}*{v}"),
                    _ => format!("{c}*{v}^{i}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn check_vars(&self, other: &Self) -> Var {
        let a_const = self.degree().unwrap_or(0) == 0;
        let b_const = other.degree().unwrap_or(0) == 0;
        match (a_const, b_const) {
            (true, false) => other.var,
            (false, true) => self.var,
            _ => {
                assert_eq!(
                    self.var, other.var,
                    "univariate operands live in different variables"
                );
                self.var
            }
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.to_text())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_vars(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::new(coeffs, var)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_vars(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::new(coeffs, var)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_vars(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs, var)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            var: self.var,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{frac, int};

    fn z(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c, Var::Z)
    }

    #[test]
    fn difference_of_squares() {
        let x = |c: &[i64]| UniPoly::from_ints(c, Var::X);
        assert_eq!(&x(&[1, 1]) * &x(&[-1, 1]), x(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity_and_scaling() {
        let p = UniPoly::new(vec![frac(-1, 2), frac(1, 2), frac(1, 2)], Var::Z);
        assert_eq!(&p + &UniPoly::zero(Var::Z), p);
        assert_eq!(p.scale(&int(2)), z(&[-1, 1, 1]));
        assert!(p.scale(&int(0)).is_zero());
    }

    #[test]
    fn zero_polynomial_shape() {
        let p = UniPoly::new(vec![int(0), int(0)], Var::Z);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p.to_text(), "0");
        assert_eq!(p.derivative(), p);
    }

    #[test]
    fn division_and_gcd() {
        // (z+1)^2 (z-1)
        let p = &(&z(&[1, 1]) * &z(&[1, 1])) * &z(&[-1, 1]);
        let (q, r) = p.div_rem(&z(&[1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, z(&[-1, 0, 1]));
        assert_eq!(UniPoly::gcd(&p, &p.derivative()), z(&[1, 1]));
        assert!(p.exact_div(&z(&[2, 1])).is_err());
        assert!(p.div_rem(&UniPoly::zero(Var::Z)).is_err());
    }

    #[test]
    fn taylor_shift_matches_substitution() {
        let p = z(&[3, -2, 0, 5]);
        let shifted = p.taylor_shift(&frac(-3, 2));
        for t in [int(0), int(2), frac(-7, 3)] {
            assert_eq!(shifted.eval(&t), p.eval(&(t.clone() - frac(3, 2))));
        }
    }

    #[test]
    fn text_form() {
        let p = UniPoly::new(vec![frac(-1, 2), frac(1, 2), frac(1, 2)], Var::Z);
        assert_eq!(p.to_text(), "-1/2 + 1/2*z + 1/2*z^2");
    }

    #[test]
    fn signs_at_infinity() {
        let p = z(&[0, 0, 0, -2]);
        assert_eq!(p.sign_at_infinity(true), -1);
        assert_eq!(p.sign_at_infinity(false), 1);
    }
}

//! Integer-coefficient shadow of a [`UniPoly`] for fast exact sign queries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::UniPoly;

/// A positive rational multiple of a `UniPoly` with coprime integer
/// coefficients. Signs agree with the original everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_uni(p: &UniPoly) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut coeffs: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let content = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            for c in &mut coeffs {
                *c /= &content;
            }
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Sign of `p(a/b)` from `Σ c_i a^i b^(d-i)`, with `b > 0`.
    pub fn sign_at(&self, at: &Rational) -> i8 {
        let Some(d) = self.degree() else {
            return 0;
        };
        let (a, b) = (at.numer(), at.denom());
        let mut acc = self.coeffs[d].clone();
        if b.is_one() {
            for c in self.coeffs[..d].iter().rev() {
                acc = acc * a + c;
            }
        } else {
            let mut bpow = b.clone();
            for c in self.coeffs[..d].iter().rev() {
                acc = acc * a + c * &bpow;
                bpow *= b;
            }
        }
        if acc.is_positive() {
            1
        } else if acc.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        match self.coeffs.last() {
            None => 0,
            Some(lc) => {
                let s: i8 = if lc.is_positive() { 1 } else { -1 };
                if positive || (self.coeffs.len() - 1) % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{frac, int};
    use crate::polycore::Var;

    #[test]
    fn signs_match_rational_evaluation() {
        let p = UniPoly::new(vec![frac(-1, 3), frac(5, 7), int(0), frac(-2, 9)], Var::Z);
        let ip = IntPoly::from_uni(&p);
        for t in [int(0), frac(1, 2), frac(-7, 3), int(4), frac(22, 7)] {
            assert_eq!(ip.sign_at(&t), p.sign_at(&t), "at {t}");
        }
        assert_eq!(ip.sign_at_infinity(true), -1);
        assert_eq!(ip.sign_at_infinity(false), 1);
    }

    #[test]
    fn exact_zero() {
        let p = UniPoly::new(vec![frac(-1, 4), int(0), int(1)], Var::X);
        assert_eq!(IntPoly::from_uni(&p).sign_at(&frac(1, 2)), 0);
    }
}

use num_traits::{One, Signed, Zero};

use super::{ids, Report, Verdict};
use crate::error::{Error, Result};
use crate::families::charlier;
use crate::polycore::rational::{self, factorial, frac, int, Rational};

/// Truncation index cap; reaching it yields `Inconclusive`.
const MAX_TERMS: u32 = 4000;

#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    pub n: u32,
    pub m: u32,
    pub x0: Rational,
    /// Last summation index `N`.
    pub truncation_n: u32,
    /// `Σ_{z=0}^{N} e^{-x0} x0^z / z! · C_n(z) C_m(z)`, with `e^{-x0}` replaced
    /// by the midpoint of a rational enclosure.
    pub partial_sum: Rational,
    /// Rigorous bound on the truncated tail plus the exponential's error.
    pub tail_bound: Rational,
    /// `δ_nm · n! · x0^-n`.
    pub target: Rational,
    pub tolerance: Rational,
    pub verdict: Verdict,
}

impl OrthogonalityReport {
    pub fn error(&self) -> Rational {
        (&self.partial_sum - &self.target).abs()
    }

    pub fn to_report(&self) -> Report {
        let detail = match self.verdict {
            Verdict::Pass => "orthogonal",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "tail-bound-not-reached",
        };
        let mut r = Report::new(ids::CHARLIER_ORTHOGONALITY, self.verdict, detail)
            .input("n", self.n)
            .input("m", self.m)
            .input("x0", rational::to_exact(&self.x0))
            .input("tolerance", rational::to_sci(&self.tolerance))
            .input("truncation_n", self.truncation_n)
            .input("partial_sum", rational::to_decimal(&self.partial_sum, 40))
            .input("target", rational::to_exact(&self.target))
            .input("tail_bound", rational::to_sci(&self.tail_bound))
            .input("error", rational::to_sci(&self.error()));
        if self.verdict == Verdict::Fail {
            r = r.witness(format!(
                "|partial - target| = {} exceeds tail bound + tolerance",
                rational::to_sci(&self.error())
            ));
        }
        r
    }
}

fn pow(base: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * base)
}

/// Rational enclosure `[lo, hi]` of `e^{-x0}` with `hi - lo ≤ width`.
fn exp_neg_enclosure(x0: &Rational, width: &Rational) -> (Rational, Rational) {
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let mut k: u32 = 0;
    loop {
        k += 1;
        term = term * x0 / int(k as i64);
        sum += &term;
        // remainder after index k: ≤ term_{k+1} / (1 - x0/(k+2)), valid once k+2 > x0
        let denom = Rational::one() - x0 / int(k as i64 + 2);
        if denom.is_positive() {
            let next = &term * x0 / int(k as i64 + 1);
            let rem = next / denom;
            let lo = Rational::one() / (&sum + &rem);
            let hi = Rational::one() / &sum;
            if &hi - &lo <= *width {
                return (lo, hi);
            }
        }
    }
}

/// Discrete orthogonality of Charlier polynomials under the Poisson weight,
/// summed exactly up to a truncation index chosen from a rigorous tail bound.
pub fn charlier_orthogonality(n: u32, m: u32, x0: &Rational, tol: &Rational) -> Result<OrthogonalityReport> {
    if n > 12 || m > 12 {
        return Err(Error::Domain("orthogonality is checked for n, m ≤ 12".into()));
    }
    if !tol.is_positive() {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let cn = charlier(n, x0)?;
    let cm = charlier(m, x0)?;
    let prod = &cn * &cm;
    let d = prod.degree().unwrap_or(0) as u32;
    let a = prod.abs_coeff_sum();
    let target = if n == m {
        Rational::from_integer(factorial(n)) / pow(x0, n)
    } else {
        Rational::zero()
    };
    let quarter_tol = tol * frac(1, 4);

    // weighted sum without the e^{-x0} factor; u_z = x0^z / z!
    let mut partial = Rational::zero();
    let mut u = Rational::one();
    let mut truncation = None;
    for z in 0..=MAX_TERMS {
        let zr = int(z as i64);
        partial += &u * prod.eval(&zr);
        // tail over z' ≥ z+1 against A·x0^z'·z'^d/z'!, geometric once the
        // ratio at z+1 is at most 1/2
        let z1 = int(z as i64 + 1);
        let u_next = &u * x0 / &z1;
        let ratio = x0 / int(z as i64 + 2) * pow(&(int(z as i64 + 2) / &z1), d);
        if ratio <= frac(1, 2) {
            let tail = int(2) * &a * &u_next * pow(&z1, d);
            if tail <= quarter_tol {
                truncation = Some((z, tail));
                break;
            }
        }
        u = u_next;
    }
    let Some((truncation_n, tail)) = truncation else {
        return Ok(OrthogonalityReport {
            n,
            m,
            x0: x0.clone(),
            truncation_n: MAX_TERMS,
            partial_sum: partial,
            tail_bound: Rational::zero(),
            target,
            tolerance: tol.clone(),
            verdict: Verdict::Inconclusive,
        });
    };
    let scale = partial.abs() + Rational::one();
    let (lo, hi) = exp_neg_enclosure(x0, &(&quarter_tol / &scale));
    let mid = (&lo + &hi) / int(2);
    let half_width = (&hi - &lo) / int(2);
    let partial_sum = &mid * &partial;
    let tail_bound = tail + half_width * partial.abs();
    let error = (&partial_sum - &target).abs();
    let verdict = if error <= &tail_bound + tol {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(OrthogonalityReport {
        n,
        m,
        x0: x0.clone(),
        truncation_n,
        partial_sum,
        tail_bound,
        target,
        tolerance: tol.clone(),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::ten_pow_neg;

    #[test]
    fn n_one_at_one_sums_to_one() {
        let r = charlier_orthogonality(1, 1, &int(1), &ten_pow_neg(20)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.error() <= ten_pow_neg(20));
        assert_eq!(r.target, int(1));
    }

    #[test]
    fn different_degrees_vanish() {
        let r = charlier_orthogonality(0, 1, &int(1), &ten_pow_neg(20)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.error() <= ten_pow_neg(20));
    }

    #[test]
    fn norm_at_two() {
        let r = charlier_orthogonality(2, 2, &int(2), &ten_pow_neg(20)).unwrap();
        assert_eq!(r.target, frac(1, 2));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn exponential_enclosure_contains_e_inverse() {
        let (lo, hi) = exp_neg_enclosure(&int(1), &ten_pow_neg(25));
        let e_inv = 0.36787944117144233f64;
        assert!(rational::to_f64(&lo) <= e_inv + 1e-16 && rational::to_f64(&hi) >= e_inv - 1e-16);
        assert!(&hi - &lo <= ten_pow_neg(25));
    }

    #[test]
    fn domain_errors() {
        assert!(charlier_orthogonality(1, 1, &int(0), &ten_pow_neg(5)).is_err());
        assert!(charlier_orthogonality(13, 1, &int(1), &ten_pow_neg(5)).is_err());
    }
}

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{ids, Report, Verdict};
use crate::error::{Error, Result};
use crate::polycore::rational::{self, Rational};
use crate::polycore::UniPoly;
use crate::rootlab::isolate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InequalityVerdict {
    /// `p''p - p'^2 < 0` at every grid point.
    Strict,
    /// Zero only at multiple roots of `p`, negative elsewhere.
    WeakAtMultipleRoot,
    Fail,
}

#[derive(Debug, Clone)]
pub struct LaguerreInequalityReport {
    pub poly: UniPoly,
    pub grid: Vec<Rational>,
    /// Exact values of `p''p - p'^2` on the grid.
    pub values: Vec<Rational>,
    pub verdict: InequalityVerdict,
    pub witness: Option<String>,
}

impl LaguerreInequalityReport {
    pub fn outcome(&self) -> Verdict {
        match self.verdict {
            InequalityVerdict::Fail => Verdict::Fail,
            _ => Verdict::Pass,
        }
    }

    pub fn to_report(&self) -> Report {
        let detail = match self.verdict {
            InequalityVerdict::Strict => "strict",
            InequalityVerdict::WeakAtMultipleRoot => "weak-at-multiple-root",
            InequalityVerdict::Fail => "fail",
        };
        let values: Vec<String> = self.values.iter().map(rational::to_exact).collect();
        let grid: Vec<String> = self.grid.iter().map(rational::to_exact).collect();
        let mut r = Report::new(ids::LAGUERRE_INEQUALITY, self.outcome(), detail)
            .input("p", self.poly.to_text())
            .input("grid", grid.join(","))
            .input("values", values.join(","));
        if let Some(w) = &self.witness {
            r = r.witness(w.clone());
        }
        r
    }
}

/// Exact sign of `p''(t) p(t) - p'(t)^2` at each grid point.
pub fn laguerre_inequality_check(p: &UniPoly, grid: &[Rational]) -> Result<LaguerreInequalityReport> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial("Laguerre inequality")),
        Some(0) => {
            return Err(Error::Domain(
                "Laguerre's inequality concerns non-constant polynomials".into(),
            ))
        }
        _ => {}
    }
    let deficit = isolate(p)?.nonreal_deficit;
    if deficit > 0 {
        return Err(Error::NotRealRooted {
            which: "p".into(),
            deficit,
        });
    }
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let mut verdict = InequalityVerdict::Strict;
    let mut witness = None;
    let mut values = Vec::with_capacity(grid.len());
    for t in grid {
        let d1t = d1.eval(t);
        let v = d2.eval(t) * p.eval(t) - &d1t * &d1t;
        if v.is_positive() || (v.is_zero() && !d1t.is_zero()) {
            verdict = InequalityVerdict::Fail;
            witness = Some(format!(
                "p''p - p'^2 = {} at {}",
                rational::to_exact(&v),
                rational::to_exact(t)
            ));
        } else if v.is_zero() && verdict == InequalityVerdict::Strict {
            // p'(t) = 0 and p(t) p''(t) = 0: t is a multiple root
            verdict = InequalityVerdict::WeakAtMultipleRoot;
            witness = Some(format!("multiple root at {}", rational::to_exact(t)));
        }
        values.push(v);
    }
    Ok(LaguerreInequalityReport {
        poly: p.clone(),
        grid: grid.to_vec(),
        values,
        verdict,
        witness,
    })
}

use std::cmp::Ordering;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use super::{Report, Verdict};
use crate::error::{Error, Result};
use crate::families::gegenbauer_tilde;
use crate::polycore::rational::{self, Rational};
use crate::polycore::{UniPoly, Var};
use crate::rootlab::{check_tolerance, isolate, root_sign, separate, CertifiedRoot, Enclosure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootSelector {
    All,
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonotonicityVerdict {
    Increasing,
    Decreasing,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct MonotonicityReport {
    pub label: String,
    pub expected: Direction,
    pub grid: Vec<Rational>,
    /// Selected roots at each grid point, ascending.
    pub values: Vec<Vec<Enclosure>>,
    pub verdict: MonotonicityVerdict,
    pub witness: Option<String>,
}

impl MonotonicityReport {
    pub fn outcome(&self) -> Verdict {
        match self.verdict {
            MonotonicityVerdict::Fail => Verdict::Fail,
            MonotonicityVerdict::Inconclusive => Verdict::Inconclusive,
            _ => Verdict::Pass,
        }
    }

    pub fn to_report(&self, theorem_id: &str) -> Report {
        let detail = match self.verdict {
            MonotonicityVerdict::Increasing => "increasing",
            MonotonicityVerdict::Decreasing => "decreasing",
            MonotonicityVerdict::Fail => "fail",
            MonotonicityVerdict::Inconclusive => "inconclusive",
        };
        let grid: Vec<String> = self.grid.iter().map(rational::to_exact).collect();
        let mut r = Report::new(theorem_id, self.outcome(), detail)
            .input("family", &self.label)
            .input("grid", grid.join(","));
        for (g, encs) in grid.iter().zip(&self.values) {
            r = r.enclosures_of(&format!("at {g}"), encs);
        }
        if let Some(w) = &self.witness {
            r = r.witness(w.clone());
        }
        r
    }
}

fn select(roots: Vec<CertifiedRoot>, selector: RootSelector) -> Result<Vec<CertifiedRoot>> {
    if selector == RootSelector::All {
        return Ok(roots);
    }
    let mut out = Vec::new();
    for mut r in roots {
        let s = root_sign(&mut r)?;
        let keep = match selector {
            RootSelector::Positive => s > 0,
            _ => s < 0,
        };
        if keep {
            out.push(r);
        }
    }
    Ok(out)
}

/// Checks that each selected root of `family(t)` moves in the `expected`
/// direction along the strictly increasing `grid`. Successive enclosures of
/// the same root are refined until ordered; overlap at the width floor is
/// reported as `Inconclusive`.
pub fn verify_root_monotonicity<F>(
    label: &str,
    grid: &[Rational],
    family: F,
    selector: RootSelector,
    expected: Direction,
) -> Result<MonotonicityReport>
where
    F: Fn(&Rational) -> Result<UniPoly> + Sync,
{
    if grid.is_empty() {
        return Err(Error::Domain("monotonicity grid is empty".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("monotonicity grid must be strictly increasing".into()));
    }
    let isolated: Vec<(Vec<CertifiedRoot>, usize)> = grid
        .par_iter()
        .map(|t| {
            let iso = isolate(&family(t)?)?;
            let deficit = iso.nonreal_deficit;
            Ok((select(iso.roots, selector)?, deficit))
        })
        .collect::<Result<_>>()?;

    let mut report = MonotonicityReport {
        label: label.to_string(),
        expected,
        grid: grid.to_vec(),
        values: Vec::new(),
        verdict: match expected {
            Direction::Increasing => MonotonicityVerdict::Increasing,
            Direction::Decreasing => MonotonicityVerdict::Decreasing,
        },
        witness: None,
    };
    let mut columns: Vec<Vec<CertifiedRoot>> = Vec::with_capacity(grid.len());
    for (t, (roots, deficit)) in grid.iter().zip(isolated) {
        if deficit > 0 {
            report.verdict = MonotonicityVerdict::Fail;
            report.witness = Some(format!(
                "not real-rooted at {} (deficit {deficit})",
                rational::to_exact(t)
            ));
        }
        columns.push(roots);
    }
    let count = columns[0].len();
    if report.verdict != MonotonicityVerdict::Fail {
        if let Some(k) = columns.iter().position(|c| c.len() != count) {
            report.verdict = MonotonicityVerdict::Fail;
            report.witness = Some(format!(
                "selected root count changes from {count} to {} at {}",
                columns[k].len(),
                rational::to_exact(&grid[k])
            ));
        }
    }
    if report.verdict != MonotonicityVerdict::Fail {
        let want = match expected {
            Direction::Increasing => Ordering::Less,
            Direction::Decreasing => Ordering::Greater,
        };
        'outer: for j in 0..count {
            for k in 1..columns.len() {
                let (left, right) = columns.split_at_mut(k);
                let (a, b) = (&mut left[k - 1][j], &mut right[0][j]);
                match separate(a, b) {
                    Some(o) if o == want => {}
                    Some(_) => {
                        report.verdict = MonotonicityVerdict::Fail;
                        report.witness = Some(format!(
                            "root {} moves the wrong way between {} and {}: {} vs {}",
                            j + 1,
                            rational::to_exact(&grid[k - 1]),
                            rational::to_exact(&grid[k]),
                            a.enclosure().view().mid,
                            b.enclosure().view().mid
                        ));
                        break 'outer;
                    }
                    None => {
                        report.verdict = MonotonicityVerdict::Inconclusive;
                        report.witness = Some(format!(
                            "root {} unresolved between {} and {} at the width floor",
                            j + 1,
                            rational::to_exact(&grid[k - 1]),
                            rational::to_exact(&grid[k])
                        ));
                    }
                }
            }
        }
    }
    let tol = check_tolerance();
    report.values = columns
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|mut r| {
                    r.refine(&tol);
                    r.enclosure().clone()
                })
                .collect()
        })
        .collect();
    Ok(report)
}

/// Monotonicity of the moving roots `γ_i^n(x)`: increasing on a grid inside
/// `[-1, 0)`, decreasing on a grid inside `(0, 1]`.
pub fn verify_gamma_monotonicity(n: u32, grid: &[Rational]) -> Result<MonotonicityReport> {
    if n < 2 {
        return Err(Error::Domain("γ monotonicity needs n ≥ 2".into()));
    }
    let one = rational::int(1);
    let expected = if grid.iter().all(|x| x.is_negative() && x.abs() <= one) {
        Direction::Increasing
    } else if grid.iter().all(|x| x.is_positive() && x <= &one) {
        Direction::Decreasing
    } else {
        return Err(Error::Domain(
            "γ monotonicity grid must lie in [-1, 0) or in (0, 1]".into(),
        ));
    };
    let tilde = gegenbauer_tilde(n)?.reduced;
    let label = format!("gamma roots of G~_{n}");
    verify_root_monotonicity(
        &label,
        grid,
        |x| Ok(tilde.specialize(Var::X, x)),
        RootSelector::All,
        expected,
    )
}

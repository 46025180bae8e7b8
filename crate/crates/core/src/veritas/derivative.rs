use num_traits::Zero;
use serde::Serialize;

use super::interlace::MergedRoots;
use super::monotone::{verify_root_monotonicity, Direction, MonotonicityReport, RootSelector};
use super::{check_interlacing, ids, InterlaceMode, InterlaceVerdict, Report, Verdict};
use crate::error::{Error, Result};
use crate::families::{dz_family, FamilyId, FamilyKind};
use crate::polycore::rational::{self, frac, int, Rational};
use crate::polycore::{sturm_count, Bound, UniPoly, Var};
use crate::rootlab::{isolate, root_sign, sign_at_root, Enclosure};

/// One `k` of the family `∂_z^k P_n(x, z0)`, viewed as a polynomial in `x`.
#[derive(Debug, Clone, Serialize)]
pub struct DerivativeStep {
    pub k: u32,
    pub degree: Option<usize>,
    pub expected_degree: usize,
    pub real_rooted: bool,
    pub all_simple: bool,
    pub positive_roots: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_positive_roots: Option<usize>,
    pub zero_multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_zero_multiplicity: Option<usize>,
    /// Sign of `dx/dz = -∂_z P / ∂_x P` matches the theorem at every
    /// tracked root.
    pub velocity_ok: bool,
    /// Against `k + 1` (positive roots only, for the modified family).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interlacing_with_next: Option<InterlaceVerdict>,
    #[serde(skip)]
    pub roots: Vec<Enclosure>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct DerivativeFamilyReport {
    pub kind: FamilyKind,
    pub n: u32,
    pub z0: Rational,
    pub steps: Vec<DerivativeStep>,
    pub grid_monotonicity: Vec<MonotonicityReport>,
}

impl DerivativeFamilyReport {
    pub fn theorem_id(&self) -> &'static str {
        match self.kind {
            FamilyKind::Laguerre => ids::LAGUERRE_DERIVATIVES,
            _ => ids::GEGENBAUER_DERIVATIVES,
        }
    }

    pub fn outcome(&self) -> Verdict {
        let steps = if self.steps.iter().all(|s| s.failures.is_empty()) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        steps.combine(Verdict::all(self.grid_monotonicity.iter().map(|m| m.outcome())))
    }

    /// `Err(TheoremViolation)` naming the first failing `k` and its polynomial.
    pub fn into_result(self) -> Result<Self> {
        if let Some(s) = self.steps.iter().find(|s| !s.failures.is_empty()) {
            let id = FamilyId::new(self.kind, self.n);
            let poly = dz_family(id, s.k)?.specialize(Var::Z, &self.z0);
            return Err(Error::TheoremViolation {
                theorem: self.theorem_id().into(),
                detail: format!("k = {}: {}; polynomial {}", s.k, s.failures.join("; "), poly),
            });
        }
        Ok(self)
    }

    pub fn to_report(&self) -> Report {
        let id = self.theorem_id();
        let mut checks: Vec<Report> = self
            .steps
            .iter()
            .map(|s| {
                let verdict = if s.failures.is_empty() {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                };
                let mut r = Report::new(id, verdict, "derivative-step")
                    .input("k", s.k)
                    .input("degree", s.degree.map_or("zero".to_string(), |d| d.to_string()))
                    .input("positive_roots", s.positive_roots)
                    .input("zero_multiplicity", s.zero_multiplicity)
                    .enclosures_of("roots", &s.roots);
                if let Some(v) = s.interlacing_with_next {
                    r = r.input("interlacing_with_next", v.name());
                }
                for f in &s.failures {
                    r = r.witness(f.clone());
                }
                r
            })
            .collect();
        checks.extend(self.grid_monotonicity.iter().map(|m| m.to_report(id)));
        let mut r = Report::group(id, "derivative-family", checks);
        r.inputs.insert("family".into(), self.kind.name().into());
        r.inputs.insert("n".into(), self.n.to_string());
        r.inputs.insert("z0".into(), rational::to_exact(&self.z0));
        r
    }
}

fn zero_multiplicity(p: &UniPoly) -> usize {
    p.coeffs().iter().take_while(|c| c.is_zero()).count()
}

/// The full root profile of `∂_z^k P_n(x, z0)` for `k = 0..=n`, for the
/// Laguerre or the modified Gegenbauer family.
pub fn verify_derivative_family(kind: FamilyKind, n: u32, z0: &Rational) -> Result<DerivativeFamilyReport> {
    let modified = match kind {
        FamilyKind::Laguerre => {
            if *z0 <= int(-1) {
                return Err(Error::Domain("Laguerre derivative family needs z0 > -1".into()));
            }
            false
        }
        FamilyKind::GegenbauerModified => {
            if *z0 <= frac(-1, 2) {
                return Err(Error::Domain(
                    "modified Gegenbauer derivative family needs z0 > -1/2".into(),
                ));
            }
            true
        }
        other => {
            return Err(Error::Domain(format!(
                "derivative families are checked for laguerre and gegenbauer-modified, not {other}"
            )))
        }
    };
    let id = FamilyId::new(kind, n);
    let bivariate: Vec<_> = (0..=n + 1).map(|k| dz_family(id, k)).collect::<Result<_>>()?;
    let polys: Vec<UniPoly> = bivariate.iter().map(|b| b.specialize(Var::Z, z0)).collect();
    let half = (n / 2) as usize;
    let threshold = n as usize - half;

    let mut steps = Vec::with_capacity(n as usize + 1);
    for k in 0..=n as usize {
        let p = &polys[k];
        let mut step = DerivativeStep {
            k: k as u32,
            degree: p.degree(),
            expected_degree: if modified { n as usize } else { n as usize - k },
            real_rooted: false,
            all_simple: false,
            positive_roots: 0,
            expected_positive_roots: None,
            zero_multiplicity: 0,
            expected_zero_multiplicity: None,
            velocity_ok: true,
            interlacing_with_next: None,
            roots: Vec::new(),
            failures: Vec::new(),
        };
        if p.is_zero() {
            step.failures.push("derivative vanishes identically".into());
            steps.push(step);
            continue;
        }
        if step.degree != Some(step.expected_degree) {
            step.failures.push(format!(
                "degree {:?}, expected {}",
                step.degree, step.expected_degree
            ));
        }
        let iso = isolate(p)?;
        step.real_rooted = iso.is_real_rooted();
        step.all_simple = iso.all_simple();
        if !step.real_rooted {
            step.failures
                .push(format!("not real-rooted (deficit {})", iso.nonreal_deficit));
        }
        step.positive_roots = if step.degree.unwrap_or(0) > 0 {
            sturm_count(p, &Bound::At(Rational::zero()), &Bound::PosInf)?
        } else {
            0
        };
        step.zero_multiplicity = zero_multiplicity(p);

        if modified {
            let exp_pos = if k <= threshold { half } else { n as usize - k };
            let exp_zero = 2 * k.saturating_sub(threshold) + (n as usize % 2);
            step.expected_positive_roots = Some(exp_pos);
            step.expected_zero_multiplicity = Some(exp_zero);
            if step.positive_roots != exp_pos {
                step.failures.push(format!(
                    "{} positive roots, expected {exp_pos}",
                    step.positive_roots
                ));
            }
            if step.zero_multiplicity != exp_zero {
                step.failures.push(format!(
                    "zero has multiplicity {}, expected {exp_zero}",
                    step.zero_multiplicity
                ));
            }
        } else if !step.all_simple {
            step.failures.push("repeated roots".into());
        }

        // root velocity dx/dz = -∂_z P / ∂_x P at z0
        let dz = &polys[k + 1];
        let dx = p.derivative();
        for root in &iso.roots {
            let mut r = root.clone();
            if modified && root_sign(&mut r)? <= 0 {
                continue;
            }
            let a = sign_at_root(&mut r, dz)?;
            let b = sign_at_root(&mut r, &dx)?;
            let velocity = -a * b;
            let ok = if modified { velocity < 0 } else { velocity > 0 };
            if !ok {
                step.velocity_ok = false;
                step.failures.push(format!(
                    "root near {} has velocity sign {velocity}",
                    r.enclosure().view().mid
                ));
            }
        }

        if k < n as usize && step.real_rooted {
            let next = &polys[k + 1];
            let next_real = isolate(next)?.is_real_rooted();
            if next_real {
                let verdict = if modified {
                    let mut merged = MergedRoots::new(p, next)?;
                    merged.retain_by_sign(|s| s > 0)?;
                    merged.chain(true).0
                } else {
                    check_interlacing(p, next, InterlaceMode::Strict)?.verdict
                };
                step.interlacing_with_next = Some(verdict);
                if verdict != InterlaceVerdict::StrictInterlace {
                    step.failures
                        .push(format!("interlacing with k + 1 is {}", verdict.name()));
                }
            }
        }
        let mut refined = iso.refined(&crate::rootlab::check_tolerance());
        step.roots = refined.roots.drain(..).map(|r| r.enclosure().clone()).collect();
        steps.push(step);
    }

    let grid = [z0.clone(), z0 + frac(1, 2), z0 + int(1)];
    let (selector, direction) = if modified {
        (RootSelector::Positive, Direction::Decreasing)
    } else {
        (RootSelector::All, Direction::Increasing)
    };
    let mut grid_monotonicity = Vec::new();
    for k in 0..n {
        let b = &bivariate[k as usize];
        let label = format!("d^{k}/dz^{k} {}_{n}", kind.name());
        grid_monotonicity.push(verify_root_monotonicity(
            &label,
            &grid,
            |z| Ok(b.specialize(Var::Z, z)),
            selector,
            direction,
        )?);
    }

    Ok(DerivativeFamilyReport {
        kind,
        n,
        z0: z0.clone(),
        steps,
        grid_monotonicity,
    })
}

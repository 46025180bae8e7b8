//! Theorem-level batches over `(n, parameter)` grids, and the umbrella suite.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{
    charlier_orthogonality, ids, laguerre_inequality_check, verify_classical_x_interlacing,
    verify_derivative_family, verify_dual_interlacing, verify_gamma_monotonicity,
    verify_root_monotonicity, Direction, Report, RootSelector, Verdict,
};
use crate::error::{Error, Result};
use crate::families::{gegenbauer_modified, laguerre, FamilyId, FamilyKind};
use crate::polycore::rational::{self, frac, int, ten_pow_neg, Rational};
use crate::polycore::Var;
use crate::rootlab::nonreal_scan;

/// Inputs for one theorem batch. Which fields matter depends on the theorem.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremRequest {
    pub theorem: String,
    pub ns: Vec<u32>,
    /// Second degree index (Charlier orthogonality).
    pub ms: Vec<u32>,
    /// Parameter values `z0`, or the evaluation grid for Laguerre's inequality.
    pub zs: Vec<Rational>,
    /// Values of `x0`.
    pub xs: Vec<Rational>,
    pub families: Vec<FamilyKind>,
    pub tol: Rational,
}

/// `k/8` for `k = -8..=8`, without 0.
pub fn default_x_grid() -> Vec<Rational> {
    (-8..=8).filter(|&k| k != 0).map(|k| frac(k, 8)).collect()
}

impl TheoremRequest {
    /// Desk-scale defaults (`n ≤ max_n`) for a theorem id.
    pub fn defaults(theorem: &str, max_n: u32) -> Result<Self> {
        let ns: Vec<u32> = (1..=max_n).collect();
        let mut r = TheoremRequest {
            theorem: theorem.to_string(),
            ns,
            ms: vec![],
            zs: vec![],
            xs: vec![],
            families: vec![],
            tol: ten_pow_neg(20),
        };
        match theorem {
            ids::INTERLACING_IN_X => {
                r.zs = vec![int(0), frac(1, 2), int(1), int(2)];
                r.families = vec![
                    FamilyKind::Laguerre,
                    FamilyKind::Gegenbauer,
                    FamilyKind::GegenbauerModified,
                ];
            }
            ids::MONOTONE_ROOTS => {
                r.zs = vec![int(0), frac(1, 2), int(1), int(2)];
                r.families = vec![FamilyKind::Laguerre, FamilyKind::GegenbauerModified];
            }
            ids::LAGUERRE_Z => r.xs = vec![int(0), frac(1, 2), int(1), int(2), int(5)],
            ids::GEGENBAUER_Z
            | ids::GEGENBAUER_Z_MODIFIED
            | ids::DUAL_INTERLACING
            | ids::DUAL_INTERLACING_MODIFIED => r.xs = default_x_grid(),
            ids::LAGUERRE_DERIVATIVES => r.zs = vec![int(0), int(1)],
            ids::GEGENBAUER_DERIVATIVES => r.zs = vec![int(0), frac(1, 2), int(1)],
            ids::LAGUERRE_INEQUALITY => {
                r.xs = vec![int(0), int(1), int(2)];
                r.zs = vec![int(-3), frac(-1, 2), int(0), frac(1, 3), frac(7, 2)];
            }
            ids::CHARLIER_ORTHOGONALITY => {
                let top = max_n.min(6);
                r.ns = (0..=top).collect();
                r.ms = (0..=top).collect();
                r.xs = vec![int(1), int(2), frac(5, 2)];
            }
            other => return Err(unknown(other)),
        }
        Ok(r)
    }
}

fn unknown(id: &str) -> Error {
    Error::Domain(format!(
        "unknown theorem id `{id}` (known: {})",
        ids::ALL.join(", ")
    ))
}

fn need<T>(v: &[T], what: &str, theorem: &str) -> Result<()> {
    if v.is_empty() {
        Err(Error::Domain(format!("{theorem} needs a nonempty {what}")))
    } else {
        Ok(())
    }
}

/// Cartesian product in `(a, b)` lexicographic order.
fn pairs<A: Clone + Send + Sync, B: Clone + Send + Sync>(a: &[A], b: &[B]) -> Vec<(A, B)> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

fn par_reports<T, F>(items: Vec<T>, f: F) -> Result<Vec<Report>>
where
    T: Send + Sync,
    F: Fn(&T) -> Result<Report> + Sync + Send,
{
    items.par_iter().map(f).collect()
}

fn scan_report(theorem: &str, kind: FamilyKind, n: u32, xs: &[Rational], want_simple: bool) -> Report {
    let checks = nonreal_scan(FamilyId::new(kind, n), xs)
        .into_iter()
        .map(|p| {
            let mut bad = Vec::new();
            if let Some(e) = &p.error {
                bad.push(e.clone());
            }
            if p.nonreal_deficit > 0 {
                bad.push(format!("non-real deficit {}", p.nonreal_deficit));
            }
            if want_simple && !p.all_simple {
                bad.push("repeated roots".to_string());
            }
            if p.is_zero_polynomial() {
                bad.push("specialization vanishes identically".to_string());
            }
            let verdict = if bad.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            let mut r = Report::new(theorem, verdict, "real-rooted-in-z")
                .input("family", kind.name())
                .input("n", n)
                .input("x0", rational::to_exact(&p.x))
                .input("degree", p.degree.map_or("zero".into(), |d| d.to_string()))
                .input("distinct_real", p.distinct_real)
                .input("nonreal_deficit", p.nonreal_deficit)
                .input("all_simple", p.all_simple);
            for b in bad {
                r = r.witness(b);
            }
            r
        })
        .collect();
    let mut g = Report::group(theorem, "scan", checks);
    g.inputs.insert("family".into(), kind.name().into());
    g.inputs.insert("n".into(), n.to_string());
    g
}

fn gamma_monotone_reports(n: u32, xs: &[Rational]) -> Result<Vec<Report>> {
    let mut neg: Vec<Rational> = xs.iter().filter(|x| x.is_negative()).cloned().collect();
    let mut pos: Vec<Rational> = xs.iter().filter(|x| x.is_positive()).cloned().collect();
    neg.sort();
    pos.sort();
    let mut out = Vec::new();
    for g in [neg, pos] {
        if g.len() >= 2 {
            out.push(verify_gamma_monotonicity(n, &g)?.to_report(ids::GEGENBAUER_Z));
        }
    }
    Ok(out)
}

/// Runs one theorem batch.
pub fn run_theorem(req: &TheoremRequest) -> Result<Report> {
    let id = req.theorem.as_str();
    let checks: Vec<Report> = match id {
        ids::INTERLACING_IN_X => {
            need(&req.ns, "n range", id)?;
            need(&req.zs, "z grid", id)?;
            let mut items = Vec::new();
            for &kind in &req.families {
                for (n, z) in pairs(&req.ns, &req.zs) {
                    items.push((kind, n, z));
                }
            }
            par_reports(items, |(kind, n, z)| {
                Ok(verify_classical_x_interlacing(*kind, *n, z)?.to_report(*n, z))
            })?
        }
        ids::MONOTONE_ROOTS => {
            need(&req.ns, "n range", id)?;
            if req.zs.len() < 2 {
                return Err(Error::Domain(format!("{id} needs at least two z values")));
            }
            let mut items = Vec::new();
            for &kind in &req.families {
                for &n in &req.ns {
                    items.push((kind, n));
                }
            }
            par_reports(items, |(kind, n)| {
                let (poly, selector, dir) = match kind {
                    FamilyKind::Laguerre => (laguerre(*n), RootSelector::All, Direction::Increasing),
                    FamilyKind::GegenbauerModified | FamilyKind::Gegenbauer => (
                        gegenbauer_modified(*n),
                        RootSelector::Positive,
                        Direction::Decreasing,
                    ),
                    other => {
                        return Err(Error::Domain(format!(
                            "{id} covers laguerre and gegenbauer roots, not {other}"
                        )))
                    }
                };
                let label = format!("{}_{n} roots in x", kind.name());
                let r = verify_root_monotonicity(
                    &label,
                    &req.zs,
                    |z| Ok(poly.specialize(Var::Z, z)),
                    selector,
                    dir,
                )?;
                Ok(r.to_report(id))
            })?
        }
        ids::LAGUERRE_Z => {
            need(&req.xs, "x grid", id)?;
            if req.xs.iter().any(|x| x.is_negative()) {
                return Err(Error::Domain(format!("{id} is stated for x0 ≥ 0")));
            }
            par_reports(req.ns.clone(), |n| {
                Ok(scan_report(id, FamilyKind::Laguerre, *n, &req.xs, false))
            })?
        }
        ids::GEGENBAUER_Z | ids::GEGENBAUER_Z_MODIFIED => {
            need(&req.xs, "x grid", id)?;
            if req.xs.iter().any(|x| x.is_zero() || x.abs() > int(1)) {
                return Err(Error::Domain(format!("{id} is stated for x0 in [-1,0)∪(0,1]")));
            }
            let modified = id == ids::GEGENBAUER_Z_MODIFIED;
            par_reports(req.ns.clone(), |n| {
                let mut checks = Vec::new();
                if modified {
                    checks.push(scan_report(id, FamilyKind::GegenbauerModified, *n, &req.xs, true));
                } else {
                    checks.push(scan_report(id, FamilyKind::Gegenbauer, *n, &req.xs, false));
                    if *n >= 2 {
                        checks.push(scan_report(id, FamilyKind::GegenbauerTilde, *n, &req.xs, true));
                        checks.extend(gamma_monotone_reports(*n, &req.xs)?);
                    }
                }
                Ok(Report::group(id, format!("n={n}"), checks))
            })?
        }
        ids::DUAL_INTERLACING | ids::DUAL_INTERLACING_MODIFIED => {
            need(&req.xs, "x grid", id)?;
            let modified = id == ids::DUAL_INTERLACING_MODIFIED;
            par_reports(pairs(&req.ns, &req.xs), |(n, x)| {
                let r = verify_dual_interlacing(*n, x)?;
                Ok(if modified {
                    r.modified_report()
                } else {
                    r.gegenbauer_report()
                })
            })?
        }
        ids::LAGUERRE_DERIVATIVES | ids::GEGENBAUER_DERIVATIVES => {
            need(&req.zs, "z grid", id)?;
            let kind = if id == ids::LAGUERRE_DERIVATIVES {
                FamilyKind::Laguerre
            } else {
                FamilyKind::GegenbauerModified
            };
            par_reports(pairs(&req.ns, &req.zs), |(n, z)| {
                Ok(verify_derivative_family(kind, *n, z)?.to_report())
            })?
        }
        ids::LAGUERRE_INEQUALITY => {
            need(&req.xs, "x0 grid", id)?;
            need(&req.zs, "evaluation grid", id)?;
            if req.xs.iter().any(|x| x.is_negative()) {
                return Err(Error::Domain(format!("{id} uses L_n(x0, ·) with x0 ≥ 0")));
            }
            par_reports(pairs(&req.ns, &req.xs), |(n, x)| {
                let p = laguerre(*n).specialize(Var::X, x);
                let mut r = laguerre_inequality_check(&p, &req.zs)?.to_report();
                r.inputs.insert("n".into(), n.to_string());
                r.inputs.insert("x0".into(), rational::to_exact(x));
                Ok(r)
            })?
        }
        ids::CHARLIER_ORTHOGONALITY => {
            need(&req.xs, "x0 grid", id)?;
            let ms = if req.ms.is_empty() { &req.ns } else { &req.ms };
            let mut items = Vec::new();
            for x in &req.xs {
                for (n, m) in pairs(&req.ns, ms) {
                    items.push((n, m, x.clone()));
                }
            }
            par_reports(items, |(n, m, x)| {
                Ok(charlier_orthogonality(*n, *m, x, &req.tol)?.to_report())
            })?
        }
        other => return Err(unknown(other)),
    };
    let mut r = Report::group(id, "theorem", checks);
    r.inputs.insert(
        "n".into(),
        req.ns.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
    );
    Ok(r)
}

/// Every theorem at its default grid, `n ≤ max_n`, in the order of [`ids::ALL`].
pub fn full_suite(max_n: u32) -> Result<Report> {
    let reports = ids::ALL
        .iter()
        .map(|id| run_theorem(&TheoremRequest::defaults(id, max_n)?))
        .collect::<Result<Vec<_>>>()?;
    let mut r = Report::group("full-suite", "suite", reports);
    r.inputs.insert("max_n".into(), max_n.to_string());
    Ok(r)
}

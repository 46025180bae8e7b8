use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{ids, Report, Verdict};
use crate::error::{Error, Result};
use crate::families::{
    gegenbauer, gegenbauer_modified, gegenbauer_tilde, laguerre, FamilyKind, ModifiedFactorRule,
};
use crate::polycore::rational::{self, int, Rational};
use crate::polycore::{squarefree_part, BiPoly, UniPoly, Var};
use crate::rootlab::{
    check_tolerance, isolate, root_sign, FactorCounter, CertifiedRoot, Enclosure,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InterlaceMode {
    Strict,
    Weak,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InterlaceVerdict {
    StrictInterlace,
    WeakInterlace,
    Fail,
}

impl InterlaceVerdict {
    pub fn name(self) -> &'static str {
        match self {
            InterlaceVerdict::StrictInterlace => "strict-interlace",
            InterlaceVerdict::WeakInterlace => "weak-interlace",
            InterlaceVerdict::Fail => "fail",
        }
    }

    pub fn satisfies(self, mode: InterlaceMode) -> bool {
        match mode {
            InterlaceMode::Strict => self == InterlaceVerdict::StrictInterlace,
            InterlaceMode::Weak => self != InterlaceVerdict::Fail,
        }
    }
}

/// The distinct real roots of `lcm(p, q)` in ascending order, each with its
/// multiplicity in `p` and in `q`. Shared roots are detected exactly, so
/// no pair of enclosures ever has to be separated numerically.
#[derive(Debug, Clone)]
pub struct MergedRoots {
    pub roots: Vec<CertifiedRoot>,
    pub p_mult: Vec<usize>,
    pub q_mult: Vec<usize>,
}

impl MergedRoots {
    pub fn new(p: &UniPoly, q: &UniPoly) -> Result<Self> {
        let q = q.clone().with_var(p.var());
        let sp = squarefree_part(p)?;
        let sq = squarefree_part(&q)?;
        let g = UniPoly::gcd(&sp.part, &sq.part);
        let h = &sp.part * &sq.part.exact_div(&g)?;
        let iso = isolate(&h)?;
        let (cp, cq) = (FactorCounter::new(&sp)?, FactorCounter::new(&sq)?);
        let p_mult = iso.roots.iter().map(|r| cp.multiplicity_at(r.enclosure())).collect();
        let q_mult = iso.roots.iter().map(|r| cq.multiplicity_at(r.enclosure())).collect();
        Ok(Self {
            roots: iso.roots,
            p_mult,
            q_mult,
        })
    }

    pub fn refine(&mut self, tol: &Rational) {
        for r in &mut self.roots {
            r.refine(tol);
        }
    }

    /// Keeps the entries whose root satisfies `keep(sign of root)`.
    pub fn retain_by_sign(&mut self, keep: impl Fn(i8) -> bool) -> Result<()> {
        let mut roots = Vec::new();
        let mut p_mult = Vec::new();
        let mut q_mult = Vec::new();
        for ((mut r, a), b) in self
            .roots
            .drain(..)
            .zip(self.p_mult.drain(..))
            .zip(self.q_mult.drain(..))
        {
            if keep(root_sign(&mut r)?) {
                roots.push(r);
                p_mult.push(a);
                q_mult.push(b);
            }
        }
        *self = Self {
            roots,
            p_mult,
            q_mult,
        };
        Ok(())
    }

    fn enclosures_for(&self, mult: &[usize]) -> Vec<(Enclosure, usize)> {
        self.roots
            .iter()
            .zip(mult)
            .filter(|(_, &m)| m > 0)
            .map(|(r, &m)| (r.enclosure().clone(), m))
            .collect()
    }

    pub fn p_roots(&self) -> Vec<(Enclosure, usize)> {
        self.enclosures_for(&self.p_mult)
    }

    pub fn q_roots(&self) -> Vec<(Enclosure, usize)> {
        self.enclosures_for(&self.q_mult)
    }

    pub fn shared(&self) -> Vec<Enclosure> {
        self.roots
            .iter()
            .zip(self.p_mult.iter().zip(&self.q_mult))
            .filter(|(_, (&a, &b))| a > 0 && b > 0)
            .map(|(r, _)| r.enclosure().clone())
            .collect()
    }

    /// Descending ranks repeated by multiplicity: rank 0 is the largest root.
    fn ranks(&self, mult: &[usize]) -> Vec<usize> {
        let k = self.roots.len();
        (0..k)
            .rev()
            .flat_map(|i| std::iter::repeat(k - 1 - i).take(mult[i]))
            .collect()
    }

    /// The chain `a_1 ≥ b_1 ≥ a_2 ≥ …` with `a` the leading polynomial.
    pub(crate) fn chain(&self, p_leads: bool) -> (InterlaceVerdict, Option<String>) {
        let (a, b, an, bn) = if p_leads {
            (self.ranks(&self.p_mult), self.ranks(&self.q_mult), "p", "q")
        } else {
            (self.ranks(&self.q_mult), self.ranks(&self.p_mult), "q", "p")
        };
        if !(a.len() == b.len() || a.len() == b.len() + 1) {
            return (
                InterlaceVerdict::Fail,
                Some(format!(
                    "{an} has {} real roots and {bn} has {}; no interlacing chain",
                    a.len(),
                    b.len()
                )),
            );
        }
        let k = self.roots.len();
        let describe = |name: &str, idx: usize, rank: usize| {
            let v = self.roots[k - 1 - rank].enclosure().view();
            format!("{name}_{} ≈ {} (±{})", idx + 1, v.mid, v.width)
        };
        let mut weak = false;
        for i in 0..b.len() {
            let mut pairs = vec![((an, i, a[i]), (bn, i, b[i]))];
            if i + 1 < a.len() {
                pairs.push(((bn, i, b[i]), (an, i + 1, a[i + 1])));
            }
            for (hi, lo) in pairs {
                // values decrease as ranks increase
                if hi.2 > lo.2 {
                    return (
                        InterlaceVerdict::Fail,
                        Some(format!(
                            "{} < {}",
                            describe(hi.0, hi.1, hi.2),
                            describe(lo.0, lo.1, lo.2)
                        )),
                    );
                }
                if hi.2 == lo.2 {
                    weak = true;
                }
            }
        }
        let verdict = if weak {
            InterlaceVerdict::WeakInterlace
        } else {
            InterlaceVerdict::StrictInterlace
        };
        (verdict, None)
    }
}

#[derive(Debug, Clone)]
pub struct InterlacingReport {
    pub mode: InterlaceMode,
    pub verdict: InterlaceVerdict,
    /// Which polynomial carries the largest root of the chain.
    pub lead: char,
    pub p_roots: Vec<(Enclosure, usize)>,
    pub q_roots: Vec<(Enclosure, usize)>,
    pub shared_roots: Vec<Enclosure>,
    pub witness: Option<String>,
    merged: MergedRoots,
}

impl InterlacingReport {
    pub fn passed(&self) -> bool {
        self.verdict.satisfies(self.mode)
    }

    pub fn outcome(&self) -> Verdict {
        if self.passed() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Re-evaluates the certifying polynomial at every enclosure endpoint.
    pub fn recheck(&self) -> bool {
        self.merged.roots.iter().all(CertifiedRoot::certificate_holds)
    }

    pub fn merged(&self) -> &MergedRoots {
        &self.merged
    }

    pub fn to_report(&self, theorem_id: &str, label: &str) -> Report {
        let mut r = Report::new(theorem_id, self.outcome(), self.verdict.name())
            .input("pair", label)
            .input("mode", format!("{:?}", self.mode).to_lowercase())
            .input("lead", self.lead)
            .enclosures_of("p_roots", self.p_roots.iter().map(|(e, _)| e))
            .enclosures_of("q_roots", self.q_roots.iter().map(|(e, _)| e));
        if !self.shared_roots.is_empty() {
            r = r
                .witness(format!("{} shared root(s)", self.shared_roots.len()))
                .enclosures_of("shared_roots", &self.shared_roots);
        }
        if let Some(w) = &self.witness {
            r = r.witness(w.clone());
        }
        r
    }
}

/// Definition-level interlacing check of `p` (degree `d`) against `q`
/// (degree `d` or `d - 1`). Both must be real-rooted.
pub fn check_interlacing(p: &UniPoly, q: &UniPoly, mode: InterlaceMode) -> Result<InterlacingReport> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial("interlacing (p)"))?;
    let dq = q.degree().ok_or(Error::ZeroPolynomial("interlacing (q)"))?;
    if !(dq == dp || dq + 1 == dp) {
        return Err(Error::DegreeMismatch(format!(
            "interlacing needs deg q ∈ {{deg p, deg p - 1}}, got {dp} and {dq}"
        )));
    }
    for (which, poly) in [("p", p), ("q", q)] {
        let deficit = isolate(poly)?.nonreal_deficit;
        if deficit > 0 {
            return Err(Error::NotRealRooted {
                which: which.to_string(),
                deficit,
            });
        }
    }
    let mut merged = MergedRoots::new(p, q)?;
    let (mut verdict, mut witness) = merged.chain(true);
    let mut lead = 'p';
    if dp == dq {
        let (v2, w2) = merged.chain(false);
        if v2 < verdict {
            verdict = v2;
            witness = w2;
            lead = 'q';
        }
    }
    merged.refine(&check_tolerance());
    Ok(InterlacingReport {
        mode,
        verdict,
        lead,
        p_roots: merged.p_roots(),
        q_roots: merged.q_roots(),
        shared_roots: merged.shared(),
        witness,
        merged,
    })
}

/// `P_n` vs `P_{n-1}` and `P_n` vs `∂_x P_n`, in `x` at `z = z0`.
#[derive(Debug, Clone)]
pub struct ClassicalInterlacing {
    /// Gegenbauer at `z0 = 0` is checked through the modified family.
    pub family_used: FamilyKind,
    pub vs_previous: InterlacingReport,
    pub vs_derivative: InterlacingReport,
}

impl ClassicalInterlacing {
    pub fn to_report(&self, n: u32, z0: &Rational) -> Report {
        let mut r = Report::group(
            ids::INTERLACING_IN_X,
            "classical-x-interlacing",
            vec![
                self.vs_previous.to_report(ids::INTERLACING_IN_X, "P_n vs P_{n-1}"),
                self.vs_derivative.to_report(ids::INTERLACING_IN_X, "P_n vs d/dx P_n"),
            ],
        );
        r.inputs.insert("family".into(), self.family_used.name().into());
        r.inputs.insert("n".into(), n.to_string());
        r.inputs.insert("z0".into(), rational::to_exact(z0));
        r
    }
}

pub fn verify_classical_x_interlacing(kind: FamilyKind, n: u32, z0: &Rational) -> Result<ClassicalInterlacing> {
    if n == 0 {
        return Err(Error::Domain("classical interlacing needs n ≥ 1".into()));
    }
    let family_used = match kind {
        FamilyKind::Laguerre => {
            if *z0 <= int(-1) {
                return Err(Error::Domain("Laguerre interlacing needs z0 > -1".into()));
            }
            kind
        }
        FamilyKind::Gegenbauer | FamilyKind::GegenbauerModified => {
            if *z0 <= rational::frac(-1, 2) {
                return Err(Error::Domain("Gegenbauer interlacing needs z0 > -1/2".into()));
            }
            if kind == FamilyKind::Gegenbauer && z0.is_zero() {
                FamilyKind::GegenbauerModified
            } else {
                kind
            }
        }
        other => {
            return Err(Error::Domain(format!(
                "classical interlacing is not defined for the {other} family"
            )))
        }
    };
    let build = |m: u32| -> BiPoly {
        match family_used {
            FamilyKind::Laguerre => laguerre(m),
            FamilyKind::Gegenbauer => gegenbauer(m),
            _ => gegenbauer_modified(m),
        }
    };
    let pn = build(n);
    let p = pn.specialize(Var::Z, z0);
    let prev = build(n - 1).specialize(Var::Z, z0);
    let deriv = pn.differentiate(Var::X, 1).specialize(Var::Z, z0);
    Ok(ClassicalInterlacing {
        family_used,
        vs_previous: check_interlacing(&p, &prev, InterlaceMode::Strict)?,
        vs_derivative: check_interlacing(&p, &deriv, InterlaceMode::Strict)?,
    })
}

/// Which constant `z`-roots are shared between the degree-`n` and
/// degree-`(n-1)` members, and which belong to only one of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantRootLedger {
    pub kind: FamilyKind,
    pub n: u32,
    #[serde(serialize_with = "serialize_list")]
    pub shared: Vec<Rational>,
    #[serde(serialize_with = "serialize_list")]
    pub only_current: Vec<Rational>,
    #[serde(serialize_with = "serialize_list")]
    pub only_previous: Vec<Rational>,
}

fn serialize_list<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational::to_exact))
}

fn constant_roots(kind: FamilyKind, n: u32) -> Result<Vec<Rational>> {
    Ok(match kind {
        FamilyKind::Gegenbauer if n == 0 => vec![],
        FamilyKind::Gegenbauer => gegenbauer_tilde(n)?.constant_roots,
        FamilyKind::GegenbauerModified => ModifiedFactorRule::new(n).extra_constant_roots,
        other => {
            return Err(Error::Domain(format!(
                "no constant-root ledger for the {other} family"
            )))
        }
    })
}

pub fn constant_root_ledger(kind: FamilyKind, n: u32) -> Result<ConstantRootLedger> {
    if n == 0 {
        return Err(Error::Domain("constant-root ledger needs n ≥ 1".into()));
    }
    let cur = constant_roots(kind, n)?;
    let prev = constant_roots(kind, n - 1)?;
    Ok(ConstantRootLedger {
        kind,
        n,
        shared: cur.iter().filter(|r| prev.contains(r)).cloned().collect(),
        only_current: cur.iter().filter(|r| !prev.contains(r)).cloned().collect(),
        only_previous: prev.iter().filter(|r| !cur.contains(r)).cloned().collect(),
    })
}

impl ConstantRootLedger {
    /// Whether every unshared constant root lies below `lowest`, the smallest
    /// moving root of the pair. Equality is allowed unless `strict`; it
    /// happens for the modified family at `x = ±1`.
    pub fn below(&self, lowest: &Enclosure, strict: bool) -> bool {
        self.only_current
            .iter()
            .chain(&self.only_previous)
            .all(|c| c < &lowest.lo || !strict && lowest.is_exact() && c == &lowest.lo)
    }
}

#[derive(Debug, Clone)]
pub struct PairReports {
    pub vs_previous: InterlacingReport,
    pub vs_derivative: InterlacingReport,
}

impl PairReports {
    fn reports(&self, theorem_id: &str, prefix: &str) -> Vec<Report> {
        vec![
            self.vs_previous
                .to_report(theorem_id, &format!("{prefix}_n vs {prefix}_(n-1)")),
            self.vs_derivative
                .to_report(theorem_id, &format!("{prefix}_n vs d/dx {prefix}_n")),
        ]
    }
}

#[derive(Debug, Clone)]
pub struct DualInterlacingReport {
    pub n: u32,
    pub x0: Rational,
    /// At `x0 = 0` one polynomial of each pair vanishes identically; no
    /// convention is chosen and no check is run.
    pub degenerate_at_zero: bool,
    pub gegenbauer: Option<PairReports>,
    pub modified: Option<PairReports>,
    /// `G̃_n` vs `G̃_{n-1}` and vs `∂_x G̃_n`; strict for `0 < |x0| < 1`.
    pub reduced: Option<PairReports>,
    /// `G̃_n(x0, z)` vs `G̃_{n-1}(x0, z + 1)`.
    pub reduced_shift: Option<InterlacingReport>,
    pub modified_simple: bool,
    pub ledgers: Vec<(ConstantRootLedger, bool)>,
}

impl DualInterlacingReport {
    fn base(&self, theorem_id: &str, checks: Vec<Report>) -> Report {
        let mut r = if self.degenerate_at_zero {
            Report::new(theorem_id, Verdict::Pass, "degenerate-at-zero")
                .witness("one polynomial of each pair is identically zero at x = 0")
        } else {
            Report::group(theorem_id, "dual-interlacing", checks)
        };
        r.inputs.insert("n".into(), self.n.to_string());
        r.inputs.insert("x0".into(), rational::to_exact(&self.x0));
        r
    }

    fn reduced_checks(&self) -> Vec<Report> {
        let mut v = Vec::new();
        if let Some(red) = &self.reduced {
            v.extend(red.reports(ids::DUAL_INTERLACING, "G~"));
        }
        if let Some(s) = &self.reduced_shift {
            v.push(s.to_report(ids::DUAL_INTERLACING, "G~_n(z) vs G~_(n-1)(z+1)"));
        }
        v
    }

    fn ledger_check(&self, kind: FamilyKind, theorem_id: &str) -> Option<Report> {
        self.ledgers.iter().find(|(l, _)| l.kind == kind).map(|(l, ok)| {
            let verdict = if *ok { Verdict::Pass } else { Verdict::Fail };
            Report::new(theorem_id, verdict, "constant-root-ledger")
                .input("shared", l.shared.len())
                .input("only_current", fmt_list(&l.only_current))
                .input("only_previous", fmt_list(&l.only_previous))
        })
    }

    pub fn gegenbauer_report(&self) -> Report {
        let mut checks = Vec::new();
        if let Some(g) = &self.gegenbauer {
            checks.extend(g.reports(ids::DUAL_INTERLACING, "G"));
        }
        checks.extend(self.reduced_checks());
        checks.extend(self.ledger_check(FamilyKind::Gegenbauer, ids::DUAL_INTERLACING));
        self.base(ids::DUAL_INTERLACING, checks)
    }

    pub fn modified_report(&self) -> Report {
        let mut checks = Vec::new();
        if let Some(g) = &self.modified {
            checks.extend(g.reports(ids::DUAL_INTERLACING_MODIFIED, "G^"));
        }
        let simple = if self.modified_simple {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        checks.push(Report::new(ids::DUAL_INTERLACING_MODIFIED, simple, "simple-roots"));
        checks.extend(self.reduced_checks().into_iter().map(|mut r| {
            r.theorem_id = ids::DUAL_INTERLACING_MODIFIED.into();
            r
        }));
        checks.extend(self.ledger_check(
            FamilyKind::GegenbauerModified,
            ids::DUAL_INTERLACING_MODIFIED,
        ));
        self.base(ids::DUAL_INTERLACING_MODIFIED, checks)
    }

    pub fn outcome(&self) -> Verdict {
        self.gegenbauer_report()
            .verdict
            .combine(self.modified_report().verdict)
    }
}

fn fmt_list(v: &[Rational]) -> String {
    v.iter().map(rational::to_exact).collect::<Vec<_>>().join(",")
}

fn pair(p: &BiPoly, prev: &BiPoly, x0: &Rational, mode: InterlaceMode) -> Result<PairReports> {
    let at = |b: &BiPoly| b.specialize(Var::X, x0);
    Ok(PairReports {
        vs_previous: check_interlacing(&at(p), &at(prev), mode)?,
        vs_derivative: check_interlacing(&at(p), &at(&p.differentiate(Var::X, 1)), mode)?,
    })
}

/// Interlacing in `z` of the Gegenbauer and modified Gegenbauer families at
/// a fixed `x0 ∈ [-1, 1]`.
pub fn verify_dual_interlacing(n: u32, x0: &Rational) -> Result<DualInterlacingReport> {
    if n == 0 {
        return Err(Error::Domain("dual interlacing needs n ≥ 1".into()));
    }
    if x0.abs() > int(1) {
        return Err(Error::Domain(format!(
            "dual interlacing is stated for x0 in [-1, 1], got {}",
            rational::to_exact(x0)
        )));
    }
    let mut report = DualInterlacingReport {
        n,
        x0: x0.clone(),
        degenerate_at_zero: x0.is_zero(),
        gegenbauer: None,
        modified: None,
        reduced: None,
        reduced_shift: None,
        modified_simple: false,
        ledgers: Vec::new(),
    };
    if report.degenerate_at_zero {
        return Ok(report);
    }
    let weak = InterlaceMode::Weak;
    report.gegenbauer = Some(pair(&gegenbauer(n), &gegenbauer(n - 1), x0, weak)?);
    let gm = gegenbauer_modified(n);
    report.modified = Some(pair(&gm, &gegenbauer_modified(n - 1), x0, weak)?);
    report.modified_simple = isolate(&gm.specialize(Var::X, x0))?.all_simple();

    let interior = x0.abs() < int(1);
    let reduced_mode = if interior { InterlaceMode::Strict } else { weak };
    let mut lowest: Option<Enclosure> = None;
    if n >= 2 {
        let t = gegenbauer_tilde(n)?.reduced;
        let t1 = gegenbauer_tilde(n - 1)?.reduced;
        let red = pair(&t, &t1, x0, reduced_mode)?;
        lowest = red
            .vs_previous
            .merged()
            .roots
            .first()
            .map(|r| r.enclosure().clone());
        report.reduced = Some(red);
        report.reduced_shift = Some(check_interlacing(
            &t.specialize(Var::X, x0),
            &t1.shift_z(&int(1)).specialize(Var::X, x0),
            reduced_mode,
        )?);
    }
    for kind in [FamilyKind::Gegenbauer, FamilyKind::GegenbauerModified] {
        let ledger = constant_root_ledger(kind, n)?;
        let strict = interior && kind == FamilyKind::GegenbauerModified;
        let ok = match &lowest {
            Some(low) => ledger.below(low, strict),
            None => true,
        };
        report.ledgers.push((ledger, ok));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::frac;

    fn x(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c, Var::X)
    }

    #[test]
    fn textbook_cases() {
        // (x-1)(x-3) vs (x-2)
        let r = check_interlacing(&x(&[3, -4, 1]), &x(&[-2, 1]), InterlaceMode::Strict).unwrap();
        assert_eq!(r.verdict, InterlaceVerdict::StrictInterlace);
        assert!(r.recheck());
        // (x-1)(x-2) vs (x-3)
        let r = check_interlacing(&x(&[2, -3, 1]), &x(&[-3, 1]), InterlaceMode::Strict).unwrap();
        assert_eq!(r.verdict, InterlaceVerdict::Fail);
        assert!(r.witness.is_some());
        assert!(!r.passed());
    }

    #[test]
    fn laguerre_two_against_one() {
        let p = laguerre(2).specialize(Var::Z, &int(0));
        let q = laguerre(1).specialize(Var::Z, &int(0));
        let r = check_interlacing(&p, &q, InterlaceMode::Strict).unwrap();
        assert_eq!(r.verdict, InterlaceVerdict::StrictInterlace);
        assert_eq!(r.p_roots.len(), 2);
        assert_eq!(r.q_roots[0].0, Enclosure::exact(int(1)));
    }

    #[test]
    fn shared_and_equal_degree() {
        // (x-1)(x-2) vs (x-1)(x-3): equal degree, shared root, q leads
        let p = x(&[2, -3, 1]);
        let q = x(&[3, -4, 1]);
        let r = check_interlacing(&p, &q, InterlaceMode::Weak).unwrap();
        assert_eq!(r.verdict, InterlaceVerdict::WeakInterlace);
        assert_eq!(r.lead, 'q');
        assert_eq!(r.shared_roots.len(), 1);
        assert!(r.passed());
    }

    #[test]
    fn double_roots_are_weak() {
        // (x-1)^2 vs (x-1)
        let r = check_interlacing(&x(&[1, -2, 1]), &x(&[-1, 1]), InterlaceMode::Weak).unwrap();
        assert_eq!(r.verdict, InterlaceVerdict::WeakInterlace);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            check_interlacing(&x(&[1, 0, 0, 1]), &x(&[1]), InterlaceMode::Weak),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(matches!(
            check_interlacing(&x(&[1, 0, 1]), &x(&[0, 1]), InterlaceMode::Weak),
            Err(Error::NotRealRooted { .. })
        ));
        // degree one against a constant is trivially strict
        let r = check_interlacing(&x(&[-1, 1]), &x(&[1]), InterlaceMode::Strict).unwrap();
        assert_eq!(r.verdict, InterlaceVerdict::StrictInterlace);
    }

    #[test]
    fn classical_examples() {
        let r = verify_classical_x_interlacing(FamilyKind::Laguerre, 4, &int(0)).unwrap();
        assert!(r.vs_previous.passed() && r.vs_derivative.passed());
        let r = verify_classical_x_interlacing(FamilyKind::GegenbauerModified, 5, &frac(1, 2)).unwrap();
        assert!(r.vs_previous.passed() && r.vs_derivative.passed());
        let r = verify_classical_x_interlacing(FamilyKind::Laguerre, 1, &int(0)).unwrap();
        assert!(r.vs_previous.passed());
        let r = verify_classical_x_interlacing(FamilyKind::Gegenbauer, 4, &int(0)).unwrap();
        assert_eq!(r.family_used, FamilyKind::GegenbauerModified);
        assert!(verify_classical_x_interlacing(FamilyKind::Laguerre, 3, &int(-1)).is_err());
        assert!(verify_classical_x_interlacing(FamilyKind::Gegenbauer, 3, &frac(-1, 2)).is_err());
    }

    #[test]
    fn dual_examples() {
        let r = verify_dual_interlacing(4, &frac(-1, 2)).unwrap();
        assert_eq!(r.outcome(), Verdict::Pass);
        assert_eq!(
            r.reduced.as_ref().unwrap().vs_previous.verdict,
            InterlaceVerdict::StrictInterlace
        );

        let r = verify_dual_interlacing(3, &int(-1)).unwrap();
        let g = r.gegenbauer.as_ref().unwrap();
        assert_eq!(g.vs_previous.verdict, InterlaceVerdict::WeakInterlace);
        assert!(!g.vs_previous.shared_roots.is_empty());
        assert_eq!(r.outcome(), Verdict::Pass);

        let r = verify_dual_interlacing(2, &int(1)).unwrap();
        let g = r.gegenbauer.as_ref().unwrap();
        assert_eq!(g.vs_previous.p_roots.len(), 2);
        assert!(g.vs_previous.passed());

        let r = verify_dual_interlacing(5, &int(0)).unwrap();
        assert!(r.degenerate_at_zero);
        assert_eq!(r.gegenbauer_report().detail, "degenerate-at-zero");
        assert!(verify_dual_interlacing(3, &int(2)).is_err());
    }

    #[test]
    fn ledger_matches_parity_cases() {
        // modified family, n even: -1/2-(n-1) only in G^_n, -1/2-(n/2-1) only in G^_{n-1}
        let l = constant_root_ledger(FamilyKind::GegenbauerModified, 6).unwrap();
        assert_eq!(l.only_current, vec![frac(-11, 2)]);
        assert_eq!(l.only_previous, vec![frac(-5, 2)]);
        // n odd: the one unshared root belongs to G^_n
        let l = constant_root_ledger(FamilyKind::GegenbauerModified, 5).unwrap();
        assert_eq!(l.only_current, vec![frac(-9, 2)]);
        assert!(l.only_previous.is_empty());
        // plain family, n odd: extra root -(n+1)/2 + 1
        let l = constant_root_ledger(FamilyKind::Gegenbauer, 5).unwrap();
        assert_eq!(l.only_current, vec![int(-2)]);
        let l = constant_root_ledger(FamilyKind::Gegenbauer, 6).unwrap();
        assert!(l.only_current.is_empty() && l.only_previous.is_empty());
    }
}

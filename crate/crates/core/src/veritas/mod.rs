//! Theorem checkers. Every verdict is decided on certified enclosures or exact
//! values; `Inconclusive` is kept distinct from `Fail`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::rootlab::{Enclosure, EnclosureView};

mod charlier;
mod derivative;
mod inequality;
mod interlace;
mod monotone;
pub mod suite;

pub use charlier::{charlier_orthogonality, OrthogonalityReport};
pub use derivative::{verify_derivative_family, DerivativeFamilyReport, DerivativeStep};
pub use inequality::{laguerre_inequality_check, InequalityVerdict, LaguerreInequalityReport};
pub use interlace::{
    check_interlacing, constant_root_ledger, verify_classical_x_interlacing,
    verify_dual_interlacing, ConstantRootLedger, DualInterlacingReport, InterlaceMode,
    InterlaceVerdict, InterlacingReport, MergedRoots,
};
pub use monotone::{
    verify_gamma_monotonicity, verify_root_monotonicity, Direction, MonotonicityReport,
    MonotonicityVerdict, RootSelector,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Theorem identifiers used in reports.
pub mod ids {
    pub const INTERLACING_IN_X: &str = "thm-interlderiv";
    pub const MONOTONE_ROOTS: &str = "thm-monoroots";
    pub const LAGUERRE_Z: &str = "cor-laguerrez";
    pub const GEGENBAUER_Z: &str = "thm-gegenbauerz";
    pub const GEGENBAUER_Z_MODIFIED: &str = "cor-gegenbauerzmod";
    pub const DUAL_INTERLACING: &str = "thm-dualinterlG";
    pub const DUAL_INTERLACING_MODIFIED: &str = "cor-dualinterlGmod";
    pub const LAGUERRE_DERIVATIVES: &str = "thm-laguerreD";
    pub const GEGENBAUER_DERIVATIVES: &str = "thm-gegenbauerD";
    pub const LAGUERRE_INEQUALITY: &str = "lem-laguerre-ineq";
    pub const CHARLIER_ORTHOGONALITY: &str = "thm-charlier-orth";

    pub const ALL: [&str; 11] = [
        INTERLACING_IN_X,
        MONOTONE_ROOTS,
        LAGUERRE_Z,
        GEGENBAUER_Z,
        GEGENBAUER_Z_MODIFIED,
        DUAL_INTERLACING,
        DUAL_INTERLACING_MODIFIED,
        LAGUERRE_DERIVATIVES,
        GEGENBAUER_DERIVATIVES,
        LAGUERRE_INEQUALITY,
        CHARLIER_ORTHOGONALITY,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    /// Fail dominates Inconclusive, which dominates Pass.
    pub fn combine(self, other: Verdict) -> Verdict {
        self.max(other)
    }

    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().fold(Verdict::Pass, Verdict::combine)
    }
}

/// Serialized form of any checker result.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub theorem_id: String,
    pub inputs: BTreeMap<String, String>,
    pub verdict: Verdict,
    /// Checker-specific verdict, e.g. `strict-interlace`.
    pub detail: String,
    pub witnesses: Vec<String>,
    pub enclosures: BTreeMap<String, Vec<EnclosureView>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Report>,
}

impl Report {
    pub fn new(theorem_id: &str, verdict: Verdict, detail: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            theorem_id: theorem_id.to_string(),
            inputs: BTreeMap::new(),
            verdict,
            detail: detail.into(),
            witnesses: Vec::new(),
            enclosures: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn enclosures_of<'a>(
        mut self,
        key: &str,
        encs: impl IntoIterator<Item = &'a Enclosure>,
    ) -> Self {
        self.enclosures
            .insert(key.to_string(), encs.into_iter().map(Enclosure::view).collect());
        self
    }

    /// Aggregates children under one report; the verdict is their combination.
    pub fn group(theorem_id: &str, detail: impl Into<String>, checks: Vec<Report>) -> Self {
        let verdict = Verdict::all(checks.iter().map(|c| c.verdict));
        let mut r = Self::new(theorem_id, verdict, detail);
        r.checks = checks;
        r
    }

    /// Number of leaf checks with the given verdict.
    pub fn count(&self, v: Verdict) -> usize {
        if self.checks.is_empty() {
            usize::from(self.verdict == v)
        } else {
            self.checks.iter().map(|c| c.count(v)).sum()
        }
    }

    /// Leaf reports that did not pass.
    pub fn failures(&self) -> Vec<&Report> {
        if self.checks.is_empty() {
            if self.verdict == Verdict::Pass {
                vec![]
            } else {
                vec![self]
            }
        } else {
            self.checks.iter().flat_map(|c| c.failures()).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_combine() {
        assert_eq!(Verdict::all([Verdict::Pass, Verdict::Pass]), Verdict::Pass);
        assert_eq!(
            Verdict::all([Verdict::Pass, Verdict::Inconclusive]),
            Verdict::Inconclusive
        );
        assert_eq!(
            Verdict::all([Verdict::Fail, Verdict::Inconclusive]),
            Verdict::Fail
        );
        assert_eq!(Verdict::all([]), Verdict::Pass);
    }

    #[test]
    fn group_counts_leaves() {
        let g = Report::group(
            "x",
            "group",
            vec![
                Report::new("x", Verdict::Pass, "a"),
                Report::group("x", "inner", vec![Report::new("x", Verdict::Fail, "b")]),
            ],
        );
        assert_eq!(g.verdict, Verdict::Fail);
        assert_eq!(g.count(Verdict::Pass), 1);
        assert_eq!(g.failures().len(), 1);
    }
}

use rayon::prelude::*;
use serde::Serialize;

use super::isolate;
use crate::error::Result;
use crate::families::{charlier, FamilyId, FamilyKind};
use crate::polycore::rational::{self, Rational};
use crate::polycore::{UniPoly, Var};

/// Real-root profile of one family member specialized at one `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanPoint {
    pub family: FamilyKind,
    pub n: u32,
    #[serde(serialize_with = "rational::serialize_exact")]
    pub x: Rational,
    /// `None` for the zero polynomial.
    pub degree: Option<usize>,
    pub distinct_real: usize,
    pub real_with_multiplicity: usize,
    pub nonreal_deficit: usize,
    pub all_simple: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ScanPoint {
    pub fn is_zero_polynomial(&self) -> bool {
        self.degree.is_none() && self.error.is_none()
    }
}

/// The polynomial in `z` obtained by fixing `x` (or `x0` for Charlier).
pub fn z_specialization(f: FamilyId, x: &Rational) -> Result<UniPoly> {
    match f.kind {
        FamilyKind::Charlier => charlier(f.n, x),
        _ => Ok(f.poly()?.specialize(Var::X, x)),
    }
}

fn scan_point(f: FamilyId, x: &Rational) -> ScanPoint {
    let mut point = ScanPoint {
        family: f.kind,
        n: f.n,
        x: x.clone(),
        degree: None,
        distinct_real: 0,
        real_with_multiplicity: 0,
        nonreal_deficit: 0,
        all_simple: true,
        error: None,
    };
    let p = match z_specialization(f, x) {
        Ok(p) => p,
        Err(e) => {
            point.error = Some(e.to_string());
            return point;
        }
    };
    if p.is_zero() {
        return point;
    }
    match isolate(&p) {
        Ok(iso) => {
            point.degree = Some(iso.degree);
            point.distinct_real = iso.real_count;
            point.real_with_multiplicity = iso.real_with_multiplicity();
            point.nonreal_deficit = iso.nonreal_deficit;
            point.all_simple = iso.all_simple();
        }
        Err(e) => point.error = Some(e.to_string()),
    }
    point
}

/// Nonreal deficit of the `z`-specialization at each grid point. Points are
/// evaluated in parallel; the output follows the grid order.
pub fn nonreal_scan(f: FamilyId, x_grid: &[Rational]) -> Vec<ScanPoint> {
    x_grid.par_iter().map(|x| scan_point(f, x)).collect()
}

/// Smallest `(n, x)` — `n` first, then `x` ascending — with a positive
/// deficit.
pub fn first_positive_deficit(
    kind: FamilyKind,
    ns: impl IntoIterator<Item = u32>,
    x_grid: &[Rational],
) -> Option<ScanPoint> {
    let mut xs = x_grid.to_vec();
    xs.sort();
    ns.into_iter().find_map(|n| {
        nonreal_scan(FamilyId::new(kind, n), &xs)
            .into_iter()
            .find(|p| p.nonreal_deficit > 0)
    })
}

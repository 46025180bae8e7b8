use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{isolate, width_floor, CertifiedRoot, Enclosure};
use crate::error::{Error, Result};
use crate::families::gegenbauer_tilde;
use crate::polycore::rational::{self, Rational};
use crate::polycore::Var;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaOrder {
    /// Nondecreasing `|γ|`, ties broken negative-first.
    Modulus,
    /// Strictly decreasing value, `γ_1 > γ_2 > …`.
    ValueDescending,
}

/// The moving roots `γ_i^n(x)` of `G̃_n(x, ·)`.
#[derive(Debug, Clone)]
pub struct GammaRoots {
    pub n: u32,
    pub x: Rational,
    /// Ordered by [`GammaOrder::Modulus`].
    pub values: Vec<CertifiedRoot>,
    /// Positions `i` where `values[i]` and `values[i+1]` could not be
    /// separated in modulus down to the width floor.
    pub modulus_ties: Vec<usize>,
    pub nonreal_deficit: usize,
    pub all_simple: bool,
}

impl GammaRoots {
    pub fn ordered(&self, order: GammaOrder) -> Vec<CertifiedRoot> {
        match order {
            GammaOrder::Modulus => self.values.clone(),
            GammaOrder::ValueDescending => {
                let mut v = self.values.clone();
                v.sort_by(|a, b| b.enclosure().lo.cmp(&a.enclosure().lo));
                v
            }
        }
    }

    pub fn enclosures(&self, order: GammaOrder) -> Vec<Enclosure> {
        self.ordered(order)
            .into_iter()
            .map(|r| r.enclosure().clone())
            .collect()
    }

    /// Exact values, when every enclosure collapsed to a point.
    pub fn exact_values(&self) -> Option<Vec<Rational>> {
        self.values
            .iter()
            .map(|r| r.is_exact().then(|| r.enclosure().lo.clone()))
            .collect()
    }
}

fn in_support(x: &Rational) -> bool {
    x.abs() <= rational::int(1)
}

/// Isolates the roots of `G̃_n(x, ·)`, refines them to `tol`, and orders them
/// by modulus.
pub fn gamma_roots(n: u32, x: &Rational, tol: &Rational) -> Result<GammaRoots> {
    if x.is_zero() {
        return Err(Error::Domain("γ roots are defined only for x ≠ 0".into()));
    }
    if n < 2 {
        return Err(Error::Domain(format!("γ roots need n ≥ 2, got {n}")));
    }
    let tilde = gegenbauer_tilde(n)?;
    let p = tilde.reduced.specialize(Var::X, x);
    let iso = isolate(&p)?;
    let expected = (n / 2) as usize;
    if in_support(x) && (iso.nonreal_deficit > 0 || iso.real_count < expected) {
        return Err(Error::TheoremViolation {
            theorem: "thm-gegenbauerz".into(),
            detail: format!(
                "G̃_{n}(x = {}, z) has {} distinct real roots (expected {expected}), deficit {}",
                rational::to_exact(x),
                iso.real_count,
                iso.nonreal_deficit
            ),
        });
    }
    let all_simple = iso.all_simple();
    let nonreal_deficit = iso.nonreal_deficit;
    let mut values: Vec<CertifiedRoot> = iso.refined(tol).roots;
    let mut ties = Vec::new();
    sort_by_modulus(&mut values, &mut ties);
    Ok(GammaRoots {
        n,
        x: x.clone(),
        values,
        modulus_ties: ties,
        nonreal_deficit,
        all_simple,
    })
}

fn root_sign(r: &CertifiedRoot) -> Ordering {
    r.enclosure().mid().cmp(&Rational::zero())
}

/// Compares `|a|` with `|b|`, refining as needed. `None` on a tie at the floor.
fn compare_modulus(a: &mut CertifiedRoot, b: &mut CertifiedRoot) -> Option<Ordering> {
    let floor = width_floor();
    loop {
        let (ma, mb) = (a.enclosure().modulus(), b.enclosure().modulus());
        if ma.below(&mb) {
            return Some(Ordering::Less);
        }
        if mb.below(&ma) {
            return Some(Ordering::Greater);
        }
        if ma.is_exact() && mb.is_exact() {
            return (ma.lo != mb.lo).then(|| ma.lo.cmp(&mb.lo));
        }
        let (wa, wb) = (a.enclosure().width(), b.enclosure().width());
        if wa <= floor && wb <= floor {
            return None;
        }
        if wa >= wb {
            a.bisect();
        } else {
            b.bisect();
        }
    }
}

/// Insertion sort; the lists are short (⌊n/2⌋ entries).
fn sort_by_modulus(values: &mut [CertifiedRoot], ties: &mut Vec<usize>) {
    for i in 1..values.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = values.split_at_mut(j);
            let (a, b) = (&mut left[j - 1], &mut right[0]);
            let ord = compare_modulus(a, b).unwrap_or_else(|| root_sign(a).cmp(&root_sign(b)));
            if ord == Ordering::Greater {
                values.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    for i in 1..values.len() {
        let (left, right) = values.split_at_mut(i);
        if compare_modulus(&mut left[i - 1], &mut right[0]).is_none() {
            ties.push(i - 1);
        }
    }
}

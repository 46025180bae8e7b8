//! Certified real-root isolation.
//!
//! Every root is carried as a [`CertifiedRoot`]: a closed rational interval
//! together with the squarefree polynomial that certifies it. A non-degenerate
//! interval has strictly opposite signs of that polynomial at its endpoints and
//! contains exactly one distinct root; a degenerate one is an exact root.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polycore::rational::{self, Rational};
use crate::polycore::{squarefree_part, Bound, IntPoly, Squarefree, SturmSequence, UniPoly};

mod gamma;
mod scan;

pub use gamma::{gamma_roots, GammaOrder, GammaRoots};
pub use scan::{first_positive_deficit, nonreal_scan, z_specialization, ScanPoint};

/// Default enclosure width for theorem checks: `10^-30`.
pub fn check_tolerance() -> Rational {
    rational::ten_pow_neg(30)
}

/// Default enclosure width for CSV output: `10^-12`.
pub fn output_tolerance() -> Rational {
    rational::ten_pow_neg(12)
}

/// Refinement stops here when two enclosures still cannot be separated.
pub fn width_floor() -> Rational {
    rational::ten_pow_neg(60)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn exact(r: Rational) -> Self {
        Self { lo: r.clone(), hi: r }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// Strictly below `other` as sets.
    pub fn below(&self, other: &Enclosure) -> bool {
        self.hi < other.lo
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        !(self.below(other) || other.below(self))
    }

    pub fn neg(&self) -> Enclosure {
        Enclosure {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    /// The range of `|v|` over the enclosure.
    pub fn modulus(&self) -> Enclosure {
        if self.lo.is_negative() && self.hi.is_positive() {
            Enclosure {
                lo: Rational::zero(),
                hi: self.lo.abs().max(self.hi.abs()),
            }
        } else if self.hi.is_positive() || self.hi.is_zero() && !self.lo.is_negative() {
            self.clone()
        } else {
            self.neg()
        }
    }

    pub fn view(&self) -> EnclosureView {
        EnclosureView {
            mid: rational::to_decimal(&self.mid(), 40),
            width: rational::to_sci(&self.width()),
            lo: rational::to_exact(&self.lo),
            hi: rational::to_exact(&self.hi),
        }
    }
}

/// Serialized form: decimal midpoint with explicit width, plus exact bounds.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct EnclosureView {
    pub mid: String,
    pub width: String,
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone)]
pub struct CertifiedRoot {
    certifier: Arc<UniPoly>,
    signs: Arc<IntPoly>,
    enclosure: Enclosure,
    pub multiplicity: usize,
}

impl CertifiedRoot {
    pub fn enclosure(&self) -> &Enclosure {
        &self.enclosure
    }

    /// Squarefree polynomial whose sign change certifies the enclosure.
    pub fn certifier(&self) -> &UniPoly {
        &self.certifier
    }

    pub fn is_exact(&self) -> bool {
        self.enclosure.is_exact()
    }

    /// One bisection step, keeping the sign-change certificate.
    pub fn bisect(&mut self) {
        if self.enclosure.is_exact() {
            return;
        }
        let mid = self.enclosure.mid();
        let s_mid = self.signs.sign_at(&mid);
        if s_mid == 0 {
            self.enclosure = Enclosure::exact(mid);
            return;
        }
        let s_lo = self.signs.sign_at(&self.enclosure.lo);
        if s_lo == s_mid {
            self.enclosure.lo = mid;
        } else {
            self.enclosure.hi = mid;
        }
    }

    pub fn refine(&mut self, tol: &Rational) {
        if self.enclosure.is_exact() {
            return;
        }
        let q = &*self.signs;
        let mut lo = self.enclosure.lo.clone();
        let mut hi = self.enclosure.hi.clone();
        let s_lo = q.sign_at(&lo);
        let two = rational::int(2);
        while &(&hi - &lo) > tol {
            let mid = (&lo + &hi) / &two;
            let s = q.sign_at(&mid);
            if s == 0 {
                self.enclosure = Enclosure::exact(mid);
                return;
            }
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.enclosure = Enclosure { lo, hi };
    }

    pub fn refined(&self, tol: &Rational) -> CertifiedRoot {
        let mut r = self.clone();
        r.refine(tol);
        r
    }

    /// Whether the certificate still holds: opposite endpoint signs, or an
    /// exact root.
    pub fn certificate_holds(&self) -> bool {
        let q = &*self.signs;
        if self.enclosure.is_exact() {
            return q.sign_at(&self.enclosure.lo) == 0;
        }
        let a = q.sign_at(&self.enclosure.lo);
        let b = q.sign_at(&self.enclosure.hi);
        a != 0 && b != 0 && a != b
    }
}

/// Separates two roots by refining both until their enclosures are disjoint.
/// Returns `None` when the width floor is reached first.
pub fn separate(a: &mut CertifiedRoot, b: &mut CertifiedRoot) -> Option<Ordering> {
    let floor = width_floor();
    loop {
        if a.enclosure.below(&b.enclosure) {
            return Some(Ordering::Less);
        }
        if b.enclosure.below(&a.enclosure) {
            return Some(Ordering::Greater);
        }
        if a.is_exact() && b.is_exact() {
            return Some(a.enclosure.lo.cmp(&b.enclosure.lo));
        }
        let a_small = a.enclosure.width() <= floor;
        let b_small = b.enclosure.width() <= floor;
        if a_small && b_small {
            return None;
        }
        if a.enclosure.width() >= b.enclosure.width() && !a_small {
            a.bisect();
        } else if !b_small {
            b.bisect();
        } else {
            a.bisect();
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootIsolation {
    pub poly: UniPoly,
    pub squarefree: Squarefree,
    /// Sorted ascending, pairwise disjoint.
    pub roots: Vec<CertifiedRoot>,
    pub degree: usize,
    /// Number of distinct real roots.
    pub real_count: usize,
    /// `degree - Σ multiplicities`; always even.
    pub nonreal_deficit: usize,
}

impl RootIsolation {
    pub fn real_with_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn is_real_rooted(&self) -> bool {
        self.nonreal_deficit == 0
    }

    pub fn all_simple(&self) -> bool {
        self.squarefree.all_simple()
    }

    pub fn enclosures(&self) -> Vec<Enclosure> {
        self.roots.iter().map(|r| r.enclosure.clone()).collect()
    }

    /// Enclosure of root `index` with width at most `tol`.
    pub fn refine(&self, index: usize, tol: &Rational) -> Result<Enclosure> {
        let root = self.roots.get(index).ok_or_else(|| {
            Error::Domain(format!(
                "root index {index} out of range ({} real roots)",
                self.roots.len()
            ))
        })?;
        Ok(root.refined(tol).enclosure)
    }

    pub fn refine_all(&mut self, tol: &Rational) {
        for r in &mut self.roots {
            r.refine(tol);
        }
    }

    pub fn refined(mut self, tol: &Rational) -> Self {
        self.refine_all(tol);
        self
    }
}

/// Power of two strictly above every root modulus (Cauchy bound).
fn root_bound(q: &UniPoly) -> Rational {
    let lc = q.leading().expect("nonzero").abs();
    let max_ratio = q
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    let bound = max_ratio + Rational::one();
    let mut b = Rational::one();
    while b <= bound {
        b *= rational::int(2);
    }
    b
}

/// Isolates every distinct real root of `p` and attaches multiplicities.
pub fn isolate(p: &UniPoly) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("root isolation"));
    }
    let degree = p.degree().unwrap_or(0);
    let squarefree = squarefree_part(p)?;
    let q = Arc::new(squarefree.part.clone());
    let qi = Arc::new(IntPoly::from_uni(&q));
    let mut roots = Vec::new();

    if degree > 0 {
        let sturm = SturmSequence::new(&q)?;
        let b = root_bound(&q);
        let two = rational::int(2);
        let mut stack = vec![(-b.clone(), b)];
        let mut found: Vec<Enclosure> = Vec::new();
        while let Some((lo, hi)) = stack.pop() {
            let count = sturm.count(&Bound::At(lo.clone()), &Bound::At(hi.clone()));
            match count {
                0 => {}
                1 => found.push(tighten_endpoints(&qi, &sturm, lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / &two;
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        found.sort_by(|a, b| a.lo.cmp(&b.lo));
        let counter = FactorCounter::new(&squarefree)?;
        for enclosure in found {
            let multiplicity = match counter.multiplicity_at(&enclosure) {
                0 => {
                    return Err(Error::Domain(
                        "isolated root belongs to no squarefree factor".into(),
                    ))
                }
                m => m,
            };
            roots.push(CertifiedRoot {
                certifier: Arc::clone(&q),
                signs: Arc::clone(&qi),
                enclosure,
                multiplicity,
            });
        }
    }

    let real_count = roots.len();
    let weighted: usize = roots.iter().map(|r| r.multiplicity).sum();
    Ok(RootIsolation {
        poly: p.clone(),
        squarefree,
        roots,
        degree,
        real_count,
        nonreal_deficit: degree - weighted,
    })
}

/// Turns a Sturm interval `(lo, hi]` holding one root into a certified
/// closed enclosure whose endpoints are not roots (or an exact root).
fn tighten_endpoints(q: &IntPoly, sturm: &SturmSequence, mut lo: Rational, mut hi: Rational) -> Enclosure {
    if q.sign_at(&hi) == 0 {
        return Enclosure::exact(hi);
    }
    let two = rational::int(2);
    while q.sign_at(&lo) == 0 {
        let mid = (&lo + &hi) / &two;
        if q.sign_at(&mid) == 0 {
            return Enclosure::exact(mid);
        }
        if sturm.count(&Bound::At(lo.clone()), &Bound::At(mid.clone())) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Enclosure { lo, hi }
}

/// Sturm chains of every squarefree factor, for repeated multiplicity lookups.
pub struct FactorCounter {
    factors: Vec<(SturmSequence, IntPoly, usize)>,
}

impl FactorCounter {
    pub fn new(sq: &Squarefree) -> Result<Self> {
        let factors = sq
            .factors
            .iter()
            .map(|(f, m)| Ok((SturmSequence::new(f)?, IntPoly::from_uni(f), *m)))
            .collect::<Result<_>>()?;
        Ok(Self { factors })
    }

    /// Multiplicity of the single root inside `enc` (0 if there is none).
    /// `enc` must contain at most one distinct root and, unless exact, no
    /// root at its endpoints.
    pub fn multiplicity_at(&self, enc: &Enclosure) -> usize {
        for (s, f, m) in &self.factors {
            let hit = if enc.is_exact() {
                f.sign_at(&enc.lo) == 0
            } else {
                s.count(&Bound::At(enc.lo.clone()), &Bound::At(enc.hi.clone())) > 0
            };
            if hit {
                return *m;
            }
        }
        0
    }
}

/// Multiplicity, in the polynomial behind `sq`, of the single root inside
/// `enc` (0 if it has none there). `enc` must contain at most one distinct
/// root of that polynomial and, unless exact, no root at its endpoints.
pub fn multiplicity_at(sq: &Squarefree, enc: &Enclosure) -> Result<usize> {
    Ok(FactorCounter::new(sq)?.multiplicity_at(enc))
}

/// Sign of `g` at the root carried by `root`, refining it as needed. Exact:
/// a common factor is detected through the gcd.
pub fn sign_at_root(root: &mut CertifiedRoot, g: &UniPoly) -> Result<i8> {
    if g.is_zero() {
        return Ok(0);
    }
    if root.is_exact() {
        return Ok(g.sign_at(&root.enclosure.lo));
    }
    let g = g.clone().with_var(root.certifier.var());
    let d = UniPoly::gcd(&root.certifier, &g);
    if d.degree().unwrap_or(0) > 0 {
        let shared = SturmSequence::new(&d)?.count(
            &Bound::At(root.enclosure.lo.clone()),
            &Bound::At(root.enclosure.hi.clone()),
        );
        if shared > 0 {
            return Ok(0);
        }
    }
    let sturm = SturmSequence::new(&g)?;
    let gi = IntPoly::from_uni(&g);
    loop {
        if root.is_exact() {
            return Ok(gi.sign_at(&root.enclosure.lo));
        }
        let lo = &root.enclosure.lo;
        let s_lo = gi.sign_at(lo);
        if s_lo != 0
            && sturm.count(&Bound::At(lo.clone()), &Bound::At(root.enclosure.hi.clone())) == 0
        {
            return Ok(s_lo);
        }
        root.bisect();
    }
}

/// Sign of the root itself.
pub fn root_sign(root: &mut CertifiedRoot) -> Result<i8> {
    let var = root.certifier.var();
    sign_at_root(root, &UniPoly::from_ints(&[0, 1], var))
}

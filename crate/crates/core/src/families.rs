//! Exact constructors for the parametric families, viewed as polynomials in
//! `(x, z)` where `z` is the family parameter.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::rational::{self, frac, int, Rational};
use crate::polycore::{BiPoly, UniPoly, Var};

/// Degrees above this need an explicit opt-in from callers that expose them.
pub const MAX_DEFAULT_N: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Laguerre,
    Gegenbauer,
    GegenbauerModified,
    GegenbauerTilde,
    Charlier,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Laguerre => "laguerre",
            FamilyKind::Gegenbauer => "gegenbauer",
            FamilyKind::GegenbauerModified => "gegenbauer-modified",
            FamilyKind::GegenbauerTilde => "gegenbauer-tilde",
            FamilyKind::Charlier => "charlier",
        }
    }

    pub fn is_gegenbauer(self) -> bool {
        matches!(
            self,
            FamilyKind::Gegenbauer | FamilyKind::GegenbauerModified | FamilyKind::GegenbauerTilde
        )
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "laguerre" => FamilyKind::Laguerre,
            "gegenbauer" => FamilyKind::Gegenbauer,
            "gegenbauer-modified" | "modified" => FamilyKind::GegenbauerModified,
            "gegenbauer-tilde" | "tilde" => FamilyKind::GegenbauerTilde,
            "charlier" => FamilyKind::Charlier,
            other => return Err(Error::Domain(format!("unknown family `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub n: u32,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, n: u32) -> Self {
        Self { kind, n }
    }

    /// The bivariate polynomial for this id. Charlier polynomials depend on
    /// `x0` and have no bivariate form here.
    pub fn poly(&self) -> Result<BiPoly> {
        Ok(match self.kind {
            FamilyKind::Laguerre => laguerre(self.n),
            FamilyKind::Gegenbauer => gegenbauer(self.n),
            FamilyKind::GegenbauerModified => gegenbauer_modified(self.n),
            FamilyKind::GegenbauerTilde => gegenbauer_tilde(self.n)?.reduced,
            FamilyKind::Charlier => {
                return Err(Error::Domain(
                    "charlier polynomials need x0; use `charlier(n, x0)`".into(),
                ))
            }
        })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}]", self.kind, self.n)
    }
}

type Cache = RwLock<HashMap<(FamilyKind, u32), BiPoly>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn memoized(kind: FamilyKind, n: u32, build: impl FnOnce() -> BiPoly) -> BiPoly {
    if let Some(p) = cache().read().expect("cache poisoned").get(&(kind, n)) {
        return p.clone();
    }
    let p = build();
    cache()
        .write()
        .expect("cache poisoned")
        .entry((kind, n))
        .or_insert(p)
        .clone()
}

/// `∏ (z + s)` over the given shifts.
pub fn z_product(shifts: impl IntoIterator<Item = Rational>) -> UniPoly {
    shifts
        .into_iter()
        .fold(UniPoly::constant(Rational::one(), Var::Z), |acc, s| {
            &acc * &UniPoly::new(vec![s, Rational::one()], Var::Z)
        })
}

fn int_shifts(range: std::ops::Range<i64>) -> impl Iterator<Item = Rational> {
    range.map(int)
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(rational::factorial(n))
}

/// Generalized Laguerre `L_n(x, z) = Σ_k (-1)^k ∏_{j=k+1}^{n} (z+j) / (k!(n-k)!) x^k`.
pub fn laguerre(n: u32) -> BiPoly {
    memoized(FamilyKind::Laguerre, n, || {
        let mut out = BiPoly::zero();
        for k in 0..=n {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            let scale = sign / (fact(k) * fact(n - k));
            let zpart = z_product(int_shifts(k as i64 + 1..n as i64 + 1)).scale(&scale);
            out = &out + &BiPoly::from_uni(&zpart).mul_x_pow(k);
        }
        out
    })
}

/// Gegenbauer `G_n(x, z) = Σ_k (-1)^k ∏_{i=0}^{n-k-1} (z+i) / (k!(n-2k)!) (2x)^{n-2k}`.
pub fn gegenbauer(n: u32) -> BiPoly {
    memoized(FamilyKind::Gegenbauer, n, || {
        let mut out = BiPoly::zero();
        for k in 0..=n / 2 {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            let xpow = n - 2 * k;
            let scale = sign * rational::two_pow(xpow as i64) / (fact(k) * fact(xpow));
            let zpart = z_product(int_shifts(0..(n - k) as i64)).scale(&scale);
            out = &out + &BiPoly::from_uni(&zpart).mul_x_pow(xpow);
        }
        out
    })
}

/// Modified Gegenbauer, the equal-parameter Jacobi polynomial `P_n^{(z-1/2, z-1/2)}(x)`:
/// `Σ_k (-1)^k ∏_{i=n-⌊n/2⌋}^{n-k-1}(z+i) ∏_{i=⌊n/2⌋}^{n-1}(z+1/2+i) / (k!(n-2k)!) x^{n-2k} 2^{-2k}`.
pub fn gegenbauer_modified(n: u32) -> BiPoly {
    memoized(FamilyKind::GegenbauerModified, n, || {
        let half = n / 2;
        let common = half_shift_product(half, n);
        let mut out = BiPoly::zero();
        for k in 0..=half {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            let xpow = n - 2 * k;
            let scale = sign * rational::two_pow(-2 * k as i64) / (fact(k) * fact(xpow));
            let zpart = &z_product(int_shifts((n - half) as i64..(n - k) as i64)) * &common;
            out = &out + &BiPoly::from_uni(&zpart.scale(&scale)).mul_x_pow(xpow);
        }
        out
    })
}

/// `∏_{i=lo}^{hi-1} (z + 1/2 + i)`.
fn half_shift_product(lo: u32, hi: u32) -> UniPoly {
    z_product((lo..hi).map(|i| frac(2 * i as i64 + 1, 2)))
}

/// `G_n = ∏_{j<⌈n/2⌉} (z - μ_j) · G̃_n` with `μ_j = -j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeDecomposition {
    pub n: u32,
    /// `μ_j = -j` for `j = 0..⌈n/2⌉`.
    pub constant_roots: Vec<Rational>,
    /// `G̃_n(x, z)`, of degree `⌊n/2⌋` in `z` for `x ≠ 0`.
    pub reduced: BiPoly,
}

impl TildeDecomposition {
    /// Leading `z`-coefficient of `G̃_n(x, ·)`: `(2x)^n / n!`.
    pub fn leading_z_coeff(&self, x: &Rational) -> Rational {
        let two_x = x * int(2);
        let mut p = Rational::one();
        for _ in 0..self.n {
            p *= &two_x;
        }
        p / fact(self.n)
    }

    pub fn constant_factor(&self) -> UniPoly {
        UniPoly::from_roots(&self.constant_roots, Var::Z)
    }

    /// `∏ (z - μ_j) · G̃_n`, which must equal `G_n`.
    pub fn recompose(&self) -> BiPoly {
        self.reduced.mul_z_poly(&self.constant_factor())
    }
}

pub fn gegenbauer_tilde(n: u32) -> Result<TildeDecomposition> {
    if n == 0 {
        return Err(Error::Domain("the reduced Gegenbauer family starts at n = 1".into()));
    }
    let constant_roots: Vec<Rational> = (0..n.div_ceil(2) as i64).map(|j| int(-j)).collect();
    let factor = UniPoly::from_roots(&constant_roots, Var::Z);
    let reduced = gegenbauer(n).exact_div_z(&factor).map_err(|e| {
        Error::InexactDivision(format!("G_{n} does not factor over its constant roots: {e}"))
    })?;
    Ok(TildeDecomposition {
        n,
        constant_roots,
        reduced,
    })
}

/// `Ĝ_n = scale · ∏ (z - r) · G̃_n` with `r = -1/2 - i`, `i = ⌊n/2⌋..n-1`, `scale = 2^-n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModifiedFactorRule {
    pub n: u32,
    pub extra_constant_roots: Vec<Rational>,
    pub scale: Rational,
}

impl ModifiedFactorRule {
    pub fn new(n: u32) -> Self {
        Self {
            n,
            extra_constant_roots: (n / 2..n).map(|i| frac(-(2 * i as i64 + 1), 2)).collect(),
            scale: rational::two_pow(-(n as i64)),
        }
    }

    pub fn apply(&self, tilde: &TildeDecomposition) -> BiPoly {
        let factor = UniPoly::from_roots(&self.extra_constant_roots, Var::Z).scale(&self.scale);
        tilde.reduced.mul_z_poly(&factor)
    }
}

/// `C_n^{(x0)}(z) = (-1)^n / x0^n · n! · L_n(x0, z - n)`.
pub fn charlier(n: u32, x0: &Rational) -> Result<UniPoly> {
    if !x0.is_positive() {
        return Err(Error::Domain(format!(
            "charlier polynomials need x0 > 0, got {}",
            rational::to_exact(x0)
        )));
    }
    let at_x0 = laguerre(n).specialize(Var::X, x0);
    let shifted = at_x0.taylor_shift(&int(-(n as i64)));
    let mut scale = fact(n);
    for _ in 0..n {
        scale /= x0;
    }
    if n % 2 == 1 {
        scale = -scale;
    }
    Ok(shifted.scale(&scale))
}

/// `∂_z^k` of the family polynomial.
pub fn dz_family(id: FamilyId, k: u32) -> Result<BiPoly> {
    Ok(id.poly()?.differentiate(Var::Z, k))
}

/// `(−1)^n` as a rational.
pub fn parity_sign(n: u32) -> Rational {
    if n % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// The exact leading `z`-coefficient of `G_n(x, ·)` as a polynomial in `x`,
/// and the coefficient of `z^{n-1}`.
pub fn gegenbauer_top_z_coefficients(n: u32) -> (UniPoly, UniPoly) {
    let g = gegenbauer(n);
    let lead = g.z_coefficient(n);
    let next = if n == 0 {
        UniPoly::zero(Var::X)
    } else {
        g.z_coefficient(n - 1)
    };
    (lead, next)
}

/// Whether every stored `x`-power has the same parity as `n`.
pub fn has_parity(p: &BiPoly, n: u32) -> bool {
    p.terms().all(|(&(xp, _), _)| (xp + n) % 2 == 0)
}

//! Continuation of the moving roots `γ_i(x)` of `G̃_n(x, ·)` from `x = -1`
//! toward 0 along `dz/dx = -∂_x G̃_n / ∂_z G̃_n`.
//!
//! This is a demonstrator: an f64 Runge–Kutta predictor followed by Newton
//! polishing in fixed 256-bit dyadic arithmetic against the exact
//! specialized polynomial. Certified values come from `rootlab`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{gegenbauer_tilde, gegenbauer_top_z_coefficients, TildeDecomposition};
use crate::polycore::rational::{self, frac, int, Rational};
use crate::polycore::{BiPoly, UniPoly, Var};
use crate::rootlab::{gamma_roots, Enclosure, GammaOrder};

/// Bits kept by the polishing arithmetic.
pub const POLISH_BITS: u32 = 256;

/// Accepted relative residual `|p(γ)| / Σ|c_j||γ|^j` after polishing.
pub const POLISH_TOLERANCE: f64 = 1e-60;

#[derive(Debug, Clone, PartialEq)]
pub struct TraceConfig {
    pub x_start: Rational,
    pub x_end: Rational,
    pub steps: u32,
    /// Sub-steps never exceed `schedule · x²`.
    pub schedule: f64,
    pub min_step: f64,
}

impl TraceConfig {
    pub fn new(x_end: Rational, steps: u32) -> Self {
        Self {
            x_start: int(-1),
            x_end,
            steps,
            schedule: 0.25,
            min_step: 1e-14,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectorySample {
    #[serde(serialize_with = "rational::serialize_exact")]
    pub x: Rational,
    /// `γ_1 > γ_2 > …`, dyadic with [`POLISH_BITS`] fractional bits.
    #[serde(skip)]
    pub gamma: Vec<Rational>,
    pub residual: Vec<f64>,
    /// Largest RK4 sub-step used to reach this sample.
    pub step: f64,
}

impl TrajectorySample {
    pub fn gamma_f64(&self) -> Vec<f64> {
        self.gamma.iter().map(rational::to_f64).collect()
    }
}

/// `(x_powers, z_powers, coefficient)` triples for fast f64 evaluation.
struct FloatPoly(Vec<(i32, i32, f64)>);

impl FloatPoly {
    fn new(p: &BiPoly) -> Self {
        Self(
            p.terms()
                .map(|(&(i, j), c)| (i as i32, j as i32, rational::to_f64(c)))
                .collect(),
        )
    }

    fn eval(&self, x: f64, z: f64) -> f64 {
        self.0.iter().map(|&(i, j, c)| c * x.powi(i) * z.powi(j)).sum()
    }
}

struct Field {
    dx: FloatPoly,
    dz: FloatPoly,
}

impl Field {
    fn new(t: &BiPoly) -> Self {
        Self {
            dx: FloatPoly::new(&t.differentiate(Var::X, 1)),
            dz: FloatPoly::new(&t.differentiate(Var::Z, 1)),
        }
    }

    fn f(&self, x: f64, z: f64) -> f64 {
        -self.dx.eval(x, z) / self.dz.eval(x, z)
    }

    fn rk4(&self, x0: f64, z0: f64, x1: f64, max_h: f64) -> (f64, f64) {
        let mut x = x0;
        let mut z = z0;
        let mut used: f64 = 0.0;
        while x < x1 {
            let h = (x1 - x).min(max_h);
            let k1 = self.f(x, z);
            let k2 = self.f(x + h / 2.0, z + h * k1 / 2.0);
            let k3 = self.f(x + h / 2.0, z + h * k2 / 2.0);
            let k4 = self.f(x + h, z + h * k3);
            z += h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
            x += h;
            used = used.max(h);
        }
        (z, used)
    }
}

fn relative_residual(p: &UniPoly, z: &Rational) -> f64 {
    let mut scale = Rational::zero();
    let mut pow = Rational::one();
    let az = z.abs();
    for c in p.coeffs() {
        scale += c.abs() * &pow;
        pow *= &az;
    }
    if scale.is_zero() {
        return 0.0;
    }
    rational::to_f64(&(p.eval(z).abs() / scale))
}

/// Newton iteration in fixed-point dyadic arithmetic.
fn polish(p: &UniPoly, dp: &UniPoly, start: f64) -> Option<Rational> {
    if !start.is_finite() {
        return None;
    }
    let mut z = rational::round_dyadic(&Rational::from_float(start)?, POLISH_BITS);
    for _ in 0..80 {
        let d = dp.eval(&z);
        if d.is_zero() {
            return None;
        }
        let next = rational::round_dyadic(&(&z - p.eval(&z) / d), POLISH_BITS);
        if next == z {
            break;
        }
        z = next;
    }
    (relative_residual(p, &z) <= POLISH_TOLERANCE).then_some(z)
}

fn initial_values(n: u32, x: &Rational) -> Result<Vec<Rational>> {
    if *x == int(-1) {
        return Ok((0..n / 2).map(|i| frac(-(2 * i as i64 + 1), 2)).collect());
    }
    let g = gamma_roots(n, x, &rational::ten_pow_neg(60))?;
    Ok(g.enclosures(GammaOrder::ValueDescending)
        .iter()
        .map(|e| rational::round_dyadic(&e.mid(), POLISH_BITS))
        .collect())
}

/// Traces every `γ_i`, `i = 1..⌊n/2⌋`, over `steps` equal steps from
/// `x_start` to `x_end`. The first sample is the initial data.
pub fn trace(n: u32, cfg: &TraceConfig) -> Result<Vec<TrajectorySample>> {
    if n < 2 {
        return Err(Error::Domain("trajectories need n ≥ 2".into()));
    }
    if !(cfg.x_start >= int(-1) && cfg.x_start < cfg.x_end && cfg.x_end.is_negative()) {
        return Err(Error::Domain(format!(
            "need -1 ≤ x_start < x_end < 0, got x_start = {}, x_end = {}",
            rational::to_exact(&cfg.x_start),
            rational::to_exact(&cfg.x_end)
        )));
    }
    if cfg.steps == 0 {
        return Err(Error::Domain("steps must be positive".into()));
    }
    let tilde: TildeDecomposition = gegenbauer_tilde(n)?;
    let field = Field::new(&tilde.reduced);
    let h = (&cfg.x_end - &cfg.x_start) / int(cfg.steps as i64);

    let mut gamma = initial_values(n, &cfg.x_start)?;
    let p0 = tilde.reduced.specialize(Var::X, &cfg.x_start);
    let mut samples = vec![TrajectorySample {
        x: cfg.x_start.clone(),
        residual: gamma.iter().map(|g| relative_residual(&p0, g)).collect(),
        gamma: gamma.clone(),
        step: 0.0,
    }];

    for k in 1..=cfg.steps {
        let x_prev = &cfg.x_start + &h * int(k as i64 - 1);
        let x_next = &cfg.x_start + &h * int(k as i64);
        let (xa, xb) = (rational::to_f64(&x_prev), rational::to_f64(&x_next));
        let p = tilde.reduced.specialize(Var::X, &x_next);
        let dp = p.derivative();
        let mut max_h = (xb - xa).min(cfg.schedule * xb * xb);
        let accepted = loop {
            if max_h < cfg.min_step {
                return Err(Error::CollisionOrSingularity {
                    x: rational::to_decimal(&x_next, 20),
                    detail: format!("step fell below {:e} without a valid polish", cfg.min_step),
                });
            }
            let mut next = Vec::with_capacity(gamma.len());
            let mut used = 0.0f64;
            for g in &gamma {
                let (pred, h_used) = field.rk4(xa, rational::to_f64(g), xb, max_h);
                used = used.max(h_used);
                match polish(&p, &dp, pred) {
                    // the polish must stay near the predictor
                    Some(z) if (rational::to_f64(&z) - pred).abs() <= 1e-3 * (1.0 + pred.abs()) => {
                        next.push(z)
                    }
                    _ => break,
                }
            }
            let ordered = next.windows(2).all(|w| w[0] > w[1]);
            if next.len() == gamma.len() && ordered {
                break (next, used);
            }
            max_h /= 2.0;
        };
        gamma = accepted.0;
        samples.push(TrajectorySample {
            residual: gamma.iter().map(|g| relative_residual(&p, g)).collect(),
            x: x_next,
            gamma: gamma.clone(),
            step: accepted.1,
        });
    }
    Ok(samples)
}

/// Rows `x, i, gamma, residual, step` (one per sample and root index).
pub fn csv_rows(samples: &[TrajectorySample]) -> Vec<[String; 5]> {
    let mut rows = Vec::new();
    for s in samples {
        for (i, (g, r)) in s.gamma.iter().zip(&s.residual).enumerate() {
            rows.push([
                rational::to_decimal(&s.x, 20),
                (i + 1).to_string(),
                rational::to_decimal(g, 20),
                format!("{r:.3e}"),
                format!("{:.6e}", s.step),
            ]);
        }
    }
    rows
}

pub const CSV_HEADER: [&str; 5] = ["x", "i", "gamma", "residual", "step"];

/// How far traced values sit from independently certified enclosures.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub samples: usize,
    pub all_inside: bool,
    /// Largest distance (relative to `max(1, |γ|)`) outside an enclosure.
    pub worst_excess: f64,
}

/// Compares every traced `γ_i` with the certified enclosure of the same
/// index (value order) at the same `x`, allowing enclosure width plus the
/// polishing tolerance.
pub fn cross_check(n: u32, samples: &[TrajectorySample]) -> Result<CrossCheck> {
    let tol = rational::ten_pow_neg(40);
    let slack = rational::ten_pow_neg(50);
    let mut all_inside = true;
    let mut worst: f64 = 0.0;
    for s in samples {
        let cert = gamma_roots(n, &s.x, &tol)?.enclosures(GammaOrder::ValueDescending);
        if cert.len() != s.gamma.len() {
            all_inside = false;
            worst = f64::INFINITY;
            continue;
        }
        for (g, e) in s.gamma.iter().zip(&cert) {
            let allowance = &slack * (g.abs() + int(1));
            let widened = Enclosure {
                lo: &e.lo - &allowance,
                hi: &e.hi + &allowance,
            };
            if !widened.contains(g) {
                all_inside = false;
                let d = if g < &e.lo { &e.lo - g } else { g - &e.hi };
                worst = worst.max(rational::to_f64(&(d / (g.abs() + int(1)))));
            }
        }
    }
    Ok(CrossCheck {
        samples: samples.len(),
        all_inside,
        worst_excess: worst,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivergenceRow {
    pub x: Rational,
    /// `γ_1 > γ_2 > …`, certified.
    pub gamma: Vec<Enclosure>,
    /// `-[z^{n-1}] G_n(x, ·) / [z^n] G_n(x, ·) - Σ μ_j`, exact.
    pub expected_gamma_sum: Rational,
    pub sum_identity_holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivergenceReport {
    pub n: u32,
    pub rows: Vec<DivergenceRow>,
    /// Every `γ_i` strictly increases along the probe.
    pub monotone_growth: bool,
}

/// Certified `γ` values along `x → 0⁻`, with the sum-of-roots identity
/// checked at each point.
pub fn divergence_probe(n: u32, xs: &[Rational]) -> Result<DivergenceReport> {
    if n < 2 {
        return Err(Error::Domain("divergence probe needs n ≥ 2".into()));
    }
    if xs.iter().any(|x| !x.is_negative() || x < &int(-1)) {
        return Err(Error::Domain("probe points must lie in [-1, 0)".into()));
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("probe points must approach 0 monotonically".into()));
    }
    let tilde = gegenbauer_tilde(n)?;
    let mu_sum: Rational = tilde.constant_roots.iter().sum();
    let (lead, next) = gegenbauer_top_z_coefficients(n);
    let tol = rational::ten_pow_neg(30);
    let mut rows = Vec::with_capacity(xs.len());
    for x in xs {
        let g = gamma_roots(n, x, &tol)?.enclosures(GammaOrder::ValueDescending);
        let expected = -next.eval(x) / lead.eval(x) - &mu_sum;
        let lo: Rational = g.iter().map(|e| &e.lo).sum();
        let hi: Rational = g.iter().map(|e| &e.hi).sum();
        rows.push(DivergenceRow {
            x: x.clone(),
            sum_identity_holds: lo <= expected && expected <= hi,
            gamma: g,
            expected_gamma_sum: expected,
        });
    }
    let monotone_growth = rows.windows(2).all(|w| {
        w[0].gamma.len() == w[1].gamma.len()
            && w[0].gamma.iter().zip(&w[1].gamma).all(|(a, b)| a.below(b))
    });
    Ok(DivergenceReport {
        n,
        rows,
        monotone_growth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_two_matches_closed_form() {
        let s = trace(2, &TraceConfig::new(frac(-1, 8), 32)).unwrap();
        for sample in &s {
            let x = rational::to_f64(&sample.x);
            let want = 1.0 / (2.0 * x * x) - 1.0;
            assert!((sample.gamma_f64()[0] - want).abs() <= 1e-9 * want.abs().max(1.0));
        }
        let last = s.last().unwrap();
        assert_eq!(last.x, frac(-1, 8));
        assert!((last.gamma_f64()[0] - 31.0).abs() < 1e-9);
    }

    #[test]
    fn preconditions() {
        assert!(trace(2, &TraceConfig::new(int(0), 8)).is_err());
        assert!(trace(2, &TraceConfig::new(int(-2), 8)).is_err());
        assert!(trace(1, &TraceConfig::new(frac(-1, 2), 8)).is_err());
        assert!(trace(2, &TraceConfig::new(frac(-1, 2), 0)).is_err());
    }

    #[test]
    fn probe_for_n_two() {
        let xs = [frac(-1, 2), frac(-1, 4), frac(-1, 8), frac(-1, 16)];
        let r = divergence_probe(2, &xs).unwrap();
        let exact: Vec<Rational> = r.rows.iter().map(|row| row.gamma[0].lo.clone()).collect();
        assert_eq!(exact, vec![int(1), int(7), int(31), int(127)]);
        assert!(r.monotone_growth);
        assert!(r.rows.iter().all(|row| row.sum_identity_holds));
    }

    #[test]
    fn sum_identity_for_four() {
        let r = divergence_probe(4, &[frac(-1, 2)]).unwrap();
        assert!(r.rows[0].sum_identity_holds);
    }

    #[test]
    fn csv_shape() {
        let s = trace(4, &TraceConfig::new(frac(-1, 4), 8)).unwrap();
        let rows = csv_rows(&s);
        assert_eq!(rows.len(), s.len() * 2);
        assert_eq!(rows[0][1], "1");
        assert!(s.iter().all(|x| x.residual.iter().all(|r| *r <= POLISH_TOLERANCE)));
    }
}

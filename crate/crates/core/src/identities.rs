//! Exact residues of the classical identities the families satisfy. Each
//! function returns a bivariate polynomial that is identically zero when the
//! identity holds.

use crate::families::{gegenbauer, laguerre};
use crate::polycore::rational::int;
use crate::polycore::{BiPoly, Var};

fn c(v: i64) -> BiPoly {
    BiPoly::constant(int(v))
}

/// `x L'' + (z + 1 - x) L' + n L` for `L = L_n^{(z)}(x)`.
pub fn kummer_residue(n: u32) -> BiPoly {
    let l = laguerre(n);
    let coeff = &(&BiPoly::z() + &c(1)) - &BiPoly::x();
    &(&(&BiPoly::x() * &l.differentiate(Var::X, 2)) + &(&coeff * &l.differentiate(Var::X, 1)))
        + &(&c(n as i64) * &l)
}

/// `(1 - x²) P'' - (2z + 1) x P' + n(n + 2z) P` for any `P` of degree `n`
/// in the Gegenbauer scale (the classical or the modified normalization).
pub fn hypergeometric_residue(p: &BiPoly, n: u32) -> BiPoly {
    let x = BiPoly::x();
    let one_minus_x2 = &c(1) - &(&x * &x);
    let two_z_plus_1 = &(&c(2) * &BiPoly::z()) + &c(1);
    let n_n_plus_2z = &c(n as i64) * &(&c(n as i64) + &(&c(2) * &BiPoly::z()));
    &(&(&one_minus_x2 * &p.differentiate(Var::X, 2))
        - &(&(&two_z_plus_1 * &x) * &p.differentiate(Var::X, 1)))
        + &(&n_n_plus_2z * p)
}

/// `(1 - x²) ∂_x G_n + n x G_n - (n + 2z - 1) G_{n-1}`, `n ≥ 1`.
pub fn derivative_identity_residue(n: u32) -> BiPoly {
    assert!(n >= 1, "needs n ≥ 1");
    let x = BiPoly::x();
    let g = gegenbauer(n);
    let lhs = &(&c(1) - &(&x * &x)) * &g.differentiate(Var::X, 1);
    let mid = &(&c(n as i64) * &x) * &g;
    let tail = &(&c(n as i64 - 1) + &(&c(2) * &BiPoly::z())) * &gegenbauer(n - 1);
    &(&lhs + &mid) - &tail
}

/// `(n + 1) G_{n+1} - 2(n + z) x G_n + (n + 2z - 1) G_{n-1}`, `n ≥ 1`.
pub fn recurrence_residue(n: u32) -> BiPoly {
    assert!(n >= 1, "needs n ≥ 1");
    let ni = n as i64;
    let lhs = &c(ni + 1) * &gegenbauer(n + 1);
    let a = &(&(&c(2) * &(&c(ni) + &BiPoly::z())) * &BiPoly::x()) * &gegenbauer(n);
    let b = &(&c(ni - 1) + &(&c(2) * &BiPoly::z())) * &gegenbauer(n - 1);
    &(&lhs - &a) + &b
}

/// `∂_x G_n(x, z) - 2z G_{n-1}(x, z + 1)`, `n ≥ 1`.
pub fn parameter_shift_residue(n: u32) -> BiPoly {
    assert!(n >= 1, "needs n ≥ 1");
    &gegenbauer(n).differentiate(Var::X, 1)
        - &(&(&c(2) * &BiPoly::z()) * &gegenbauer(n - 1).shift_z(&int(1)))
}

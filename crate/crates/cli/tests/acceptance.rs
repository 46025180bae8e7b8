//! End-to-end acceptance run: ten criteria, one PASS/FAIL line each.
//! Exits nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use dualroots_core::families::{gegenbauer, gegenbauer_modified, laguerre, FamilyId, FamilyKind};
use dualroots_core::identities::{
    derivative_identity_residue, hypergeometric_residue, kummer_residue, parameter_shift_residue,
    recurrence_residue,
};
use dualroots_core::polycore::rational::{frac, int, ten_pow_neg};
use dualroots_core::rootlab::{check_tolerance, gamma_roots, nonreal_scan};
use dualroots_core::trajectory::{cross_check, trace, TraceConfig};
use dualroots_core::veritas::suite::default_x_grid;
use dualroots_core::veritas::{
    charlier_orthogonality, laguerre_inequality_check, verify_derivative_family,
    verify_dual_interlacing, verify_gamma_monotonicity, verify_root_monotonicity, Direction,
    InequalityVerdict, RootSelector, Verdict,
};
use dualroots_core::{Rational, Var};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_identities() -> Outcome {
    let mut checked = 0;
    for n in 1..=8u32 {
        let residues = [
            ("kummer", kummer_residue(n)),
            ("hypergeometric G", hypergeometric_residue(&gegenbauer(n), n)),
            ("hypergeometric Ĝ", hypergeometric_residue(&gegenbauer_modified(n), n)),
            ("derivative identity", derivative_identity_residue(n)),
            ("three-term recurrence", recurrence_residue(n)),
            ("parameter shift", parameter_shift_residue(n)),
        ];
        for (name, r) in residues {
            ensure(r.is_zero(), || format!("{name} residue nonzero at n={n}: {r}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} residues identically zero, n = 1..8"))
}

fn gamma_initial_data() -> Outcome {
    for n in 2..=12u32 {
        let got = gamma_roots(n, &int(-1), &check_tolerance())
            .map_err(|e| e.to_string())?
            .exact_values()
            .ok_or_else(|| format!("n={n}: initial roots not exact"))?;
        let want: Vec<Rational> = (0..n / 2).map(|i| frac(-(2 * i as i64 + 1), 2)).collect();
        ensure(got == want, || format!("n={n}: got {got:?}"))?;
    }
    Ok("γ_i(-1) = -1/2-(i-1) exactly for n = 2..12".into())
}

fn realrootedness_in_z() -> Outcome {
    let start = Instant::now();
    let lag = [int(0), frac(1, 2), int(1), int(2), int(5)];
    let geg = default_x_grid();
    let mut points = 0;
    for n in 1..=12u32 {
        for p in nonreal_scan(FamilyId::new(FamilyKind::Laguerre, n), &lag) {
            ensure(p.nonreal_deficit == 0 && p.degree == Some(n as usize), || {
                format!("laguerre n={n} x={}: {p:?}", p.x)
            })?;
            points += 1;
        }
        for p in nonreal_scan(FamilyId::new(FamilyKind::Gegenbauer, n), &geg) {
            ensure(p.nonreal_deficit == 0 && p.degree == Some(n as usize), || {
                format!("gegenbauer n={n} x={}: {p:?}", p.x)
            })?;
            points += 1;
        }
        for p in nonreal_scan(FamilyId::new(FamilyKind::GegenbauerModified, n), &geg) {
            // Sturm count of distinct roots equals the degree
            ensure(
                p.nonreal_deficit == 0 && p.all_simple && p.distinct_real == n as usize,
                || format!("modified n={n} x={}: {p:?}", p.x),
            )?;
            points += 1;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("{points} specializations with zero deficit in {t:.1?}"))
}

fn dual_interlacing() -> Outcome {
    let mut count = 0;
    for n in 1..=10u32 {
        for x in default_x_grid() {
            let r = verify_dual_interlacing(n, &x).map_err(|e| e.to_string())?;
            ensure(r.outcome() == Verdict::Pass, || {
                format!("n={n} x={x}: {:?}", r.gegenbauer_report().failures())
            })?;
            ensure(r.modified_simple, || format!("n={n} x={x}: Ĝ has repeated roots"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (n, x) cases certified, n = 1..10"))
}

fn monotonicity() -> Outcome {
    let zs = [int(0), frac(1, 2), int(1), int(2)];
    let gamma_grid: Vec<Rational> = default_x_grid().into_iter().filter(|x| x < &int(0)).collect();
    for n in 1..=10u32 {
        let l = laguerre(n);
        let r = verify_root_monotonicity(
            "laguerre",
            &zs,
            |z| Ok(l.specialize(Var::Z, z)),
            RootSelector::All,
            Direction::Increasing,
        )
        .map_err(|e| e.to_string())?;
        ensure(r.outcome() == Verdict::Pass, || format!("laguerre n={n}: {:?}", r.witness))?;
        let g = gegenbauer_modified(n);
        let r = verify_root_monotonicity(
            "modified",
            &zs,
            |z| Ok(g.specialize(Var::Z, z)),
            RootSelector::Positive,
            Direction::Decreasing,
        )
        .map_err(|e| e.to_string())?;
        ensure(r.outcome() == Verdict::Pass, || format!("modified n={n}: {:?}", r.witness))?;
        if n >= 2 {
            let r = verify_gamma_monotonicity(n, &gamma_grid).map_err(|e| e.to_string())?;
            ensure(r.outcome() == Verdict::Pass, || format!("gamma n={n}: {:?}", r.witness))?;
        }
    }
    Ok("laguerre increasing, Ĝ positive roots decreasing, γ increasing; n ≤ 10".into())
}

fn derivative_families() -> Outcome {
    let mut count = 0;
    for n in 1..=8u32 {
        for (kind, zs) in [
            (FamilyKind::Laguerre, vec![int(0), int(1)]),
            (FamilyKind::GegenbauerModified, vec![int(0), frac(1, 2), int(1)]),
        ] {
            for z in zs {
                let r = verify_derivative_family(kind, n, &z).map_err(|e| e.to_string())?;
                ensure(r.outcome() == Verdict::Pass, || {
                    format!("{kind} n={n} z0={z}: {:?}", r.to_report().failures())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} derivative families with full profiles"))
}

fn laguerre_inequality() -> Outcome {
    let pts = [int(-3), frac(-1, 2), int(0), frac(1, 3), frac(7, 2)];
    for n in 1..=8u32 {
        for x0 in [int(0), int(1), int(2)] {
            let p = laguerre(n).specialize(Var::X, &x0);
            let r = laguerre_inequality_check(&p, &pts).map_err(|e| e.to_string())?;
            ensure(r.verdict == InequalityVerdict::Strict, || {
                format!("n={n} x0={x0}: {:?}", r.witness)
            })?;
        }
    }
    Ok("p''p - p'^2 < 0 exactly at 5 points, n ≤ 8, x0 ∈ {0,1,2}".into())
}

fn charlier() -> Outcome {
    let tol = ten_pow_neg(20);
    let mut count = 0;
    for x0 in [int(1), int(2), frac(5, 2)] {
        for n in 0..=6 {
            for m in 0..=6 {
                let r = charlier_orthogonality(n, m, &x0, &tol).map_err(|e| e.to_string())?;
                ensure(r.error() <= &tol + &r.tail_bound, || {
                    format!("n={n} m={m} x0={x0}: error {}", r.error())
                })?;
                count += 1;
            }
        }
    }
    let r = charlier_orthogonality(1, 1, &int(1), &tol).map_err(|e| e.to_string())?;
    ensure(r.target == int(1) && r.error() <= tol, || {
        format!("n=m=1, x0=1: error {}", r.error())
    })?;
    Ok(format!("{count} pairs within 1e-20 + tail bound; n=m=1 at x0=1 hits 1"))
}

fn trajectory_cross_check() -> Outcome {
    let end = frac(-1, 16);
    let mut samples = 0;
    for n in 2..=6u32 {
        let s = trace(n, &TraceConfig::new(end.clone(), 64)).map_err(|e| e.to_string())?;
        let c = cross_check(n, &s).map_err(|e| e.to_string())?;
        ensure(c.all_inside, || format!("n={n}: worst excess {:e}", c.worst_excess))?;
        samples += c.samples;
        if n == 2 {
            let last = s.last().expect("samples");
            let x = -1.0 / 16.0f64;
            let want = 1.0 / (2.0 * x * x) - 1.0;
            let got = last.gamma_f64()[0];
            ensure((got - want).abs() <= 1e-9, || format!("n=2 endpoint {got} vs {want}"))?;
        }
    }
    Ok(format!("{samples} traced samples inside certified enclosures"))
}

fn full_suite_exit_code() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_dualroots"))
        .args(["verify", "--suite", "paper", "--format", "text"])
        .output()
        .map_err(|e| e.to_string())?;
    let t = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let summary = stdout.lines().last().unwrap_or("").to_string();
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}; {summary}", out.status.code())
    })?;
    ensure(t < Duration::from_secs(600), || format!("took {t:?}"))?;
    Ok(format!("exit 0 in {t:.1?}; {summary}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("exact identities", exact_identities),
        ("gamma initial data", gamma_initial_data),
        ("real-rootedness in z", realrootedness_in_z),
        ("dual interlacing", dual_interlacing),
        ("root monotonicity", monotonicity),
        ("derivative families", derivative_families),
        ("Laguerre inequality", laguerre_inequality),
        ("Charlier orthogonality", charlier),
        ("trajectory cross-check", trajectory_cross_check),
        ("full suite exit code", full_suite_exit_code),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let t = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS criterion {:>2} ({name}): {msg} [{t:.1?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2} ({name}): {msg} [{t:.1?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

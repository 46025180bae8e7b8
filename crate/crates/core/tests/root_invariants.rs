use std::cmp::Ordering;

use dualroots_core::families::gegenbauer_tilde;
use dualroots_core::polycore::rational::{frac, int, ten_pow_neg};
use dualroots_core::polycore::{Bound, Rational, SturmSequence, UniPoly, Var};
use dualroots_core::rootlab::{gamma_roots, isolate, separate, GammaOrder};
use dualroots_core::veritas::{
    check_interlacing, laguerre_inequality_check, verify_gamma_monotonicity,
    verify_root_monotonicity, Direction, InequalityVerdict, InterlaceMode, InterlaceVerdict,
    RootSelector, Verdict,
};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=8).prop_map(|(p, q)| frac(p, q))
}

/// `∏ (z - r_i)^{m_i} · ∏ (z² + a_j)` with `a_j > 0`, plus the expected
/// (distinct real, deficit, excess).
fn structured_poly() -> impl Strategy<Value = (UniPoly, usize, usize, usize)> {
    (
        prop::collection::btree_set(-12i64..=12, 0..5),
        prop::collection::vec(1usize..=3, 5),
        prop::collection::vec(1i64..=9, 0..3),
        1i64..=5,
    )
        .prop_map(|(roots, mults, quads, lead)| {
            let mut p = UniPoly::constant(int(lead), Var::Z);
            let mut excess = 0;
            for (r, m) in roots.iter().zip(&mults) {
                for _ in 0..*m {
                    p = &p * &UniPoly::linear_root(&frac(*r, 2), Var::Z);
                }
                excess += m - 1;
            }
            for a in &quads {
                p = &p * &UniPoly::new(vec![int(*a), int(0), int(1)], Var::Z);
            }
            (p, roots.len(), 2 * quads.len(), excess)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn root_accounting_adds_up((p, distinct, deficit, excess) in structured_poly()) {
        let iso = isolate(&p).unwrap();
        prop_assert_eq!(iso.real_count, distinct);
        prop_assert_eq!(iso.nonreal_deficit, deficit);
        prop_assert_eq!(iso.real_with_multiplicity() - iso.real_count, excess);
        prop_assert_eq!(distinct + deficit + excess, p.degree().unwrap_or(0));
    }

    #[test]
    fn sturm_count_matches_isolation(c in prop::collection::vec(-20i64..=20, 1..9)) {
        let p = UniPoly::from_ints(&c, Var::X);
        prop_assume!(!p.is_zero());
        let s = SturmSequence::new(&p).unwrap();
        let full = s.variations(&Bound::NegInf) - s.variations(&Bound::PosInf);
        prop_assert_eq!(full, isolate(&p).unwrap().real_count);
    }

    #[test]
    fn every_enclosure_carries_its_certificate(c in prop::collection::vec(-20i64..=20, 2..9)) {
        let p = UniPoly::from_ints(&c, Var::X);
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let iso = isolate(&p).unwrap();
        for r in &iso.roots {
            prop_assert!(r.certificate_holds());
            let e = r.enclosure();
            if !e.is_exact() {
                let (a, b) = (r.certifier().sign_at(&e.lo), r.certifier().sign_at(&e.hi));
                prop_assert!(a * b < 0);
            }
        }
    }

    #[test]
    fn refinement_nests_and_keeps_certificates(c in prop::collection::vec(-20i64..=20, 2..8)) {
        let p = UniPoly::from_ints(&c, Var::X);
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let iso = isolate(&p).unwrap();
        for r in &iso.roots {
            let fine = r.refined(&ten_pow_neg(40));
            prop_assert!(fine.certificate_holds());
            prop_assert!(r.enclosure().contains(&fine.enclosure().lo));
            prop_assert!(r.enclosure().contains(&fine.enclosure().hi));
            prop_assert!(fine.enclosure().width() <= ten_pow_neg(40));
        }
    }

    #[test]
    fn laguerre_inequality_on_distinct_linear_products(
        roots in prop::collection::btree_set(-30i64..=30, 1..7),
        pts in prop::collection::vec(rat(), 1..6),
    ) {
        let rs: Vec<Rational> = roots.iter().map(|&r| frac(r, 3)).collect();
        let p = UniPoly::from_roots(&rs, Var::Z);
        let r = laguerre_inequality_check(&p, &pts).unwrap();
        prop_assert_eq!(r.verdict, InequalityVerdict::Strict);
        prop_assert!(r.values.iter().all(|v| *v < int(0)));
    }

    #[test]
    fn laguerre_inequality_is_weak_with_repeated_roots(
        roots in prop::collection::btree_set(-10i64..=10, 1..5),
        pts in prop::collection::vec(rat(), 1..6),
    ) {
        let mut rs: Vec<Rational> = roots.iter().map(|&r| int(r)).collect();
        rs.push(rs[0].clone());
        let p = UniPoly::from_roots(&rs, Var::Z);
        let mut grid = pts.clone();
        grid.push(rs[0].clone());
        let r = laguerre_inequality_check(&p, &grid).unwrap();
        prop_assert_eq!(r.verdict, InequalityVerdict::WeakAtMultipleRoot);
        prop_assert!(r.values.iter().all(|v| *v <= int(0)));
    }
}

fn negative_grid() -> Vec<Rational> {
    (1..=8).rev().map(|k| frac(-k, 8)).collect()
}

#[test]
fn gamma_is_increasing_then_decreasing() {
    let neg = negative_grid();
    let pos: Vec<Rational> = (1..=8).map(|k| frac(k, 8)).collect();
    for n in 2..=12 {
        let r = verify_gamma_monotonicity(n, &neg).unwrap();
        assert_eq!(r.outcome(), Verdict::Pass, "n={n} {:?}", r.witness);
        let r = verify_gamma_monotonicity(n, &pos).unwrap();
        assert_eq!(r.outcome(), Verdict::Pass, "n={n} {:?}", r.witness);
    }
}

#[test]
fn gamma_is_symmetric_in_x() {
    for n in 2..=12 {
        for x in negative_grid() {
            let a = gamma_roots(n, &x, &ten_pow_neg(30)).unwrap();
            let b = gamma_roots(n, &-x.clone(), &ten_pow_neg(30)).unwrap();
            let ea = a.enclosures(GammaOrder::ValueDescending);
            let eb = b.enclosures(GammaOrder::ValueDescending);
            assert_eq!(ea.len(), eb.len());
            assert!(ea.iter().zip(&eb).all(|(p, q)| p.overlaps(q)), "n={n} x={x}");
        }
    }
}

#[test]
fn gamma_blows_up_toward_the_origin() {
    let at = |x: Rational| gamma_roots(2, &x, &ten_pow_neg(30)).unwrap().exact_values().unwrap()[0].clone();
    assert_eq!(at(frac(-1, 2)), int(1));
    assert_eq!(at(frac(-1, 64)), int(2047));
    for n in [2u32, 4, 6] {
        let vals: Vec<_> = (1..=6)
            .map(|k| gamma_roots(n, &frac(-1, 1 << k), &ten_pow_neg(30)).unwrap())
            .map(|g| g.enclosures(GammaOrder::ValueDescending)[(n / 2 - 1) as usize].clone())
            .collect();
        assert!(vals.windows(2).all(|w| w[0].below(&w[1])), "n={n}");
    }
}

#[test]
fn gamma_chains_across_degrees() {
    // γ_i^n > γ_i^{n-1} > γ_{i+1}^n on (-1, 0)
    let grid: Vec<Rational> = negative_grid().into_iter().skip(1).collect();
    for n in 3..=10u32 {
        for x in &grid {
            let cur = gamma_roots(n, x, &ten_pow_neg(30)).unwrap().ordered(GammaOrder::ValueDescending);
            let prev = gamma_roots(n - 1, x, &ten_pow_neg(30)).unwrap().ordered(GammaOrder::ValueDescending);
            for (i, p) in prev.iter().enumerate() {
                let mut hi = cur[i].clone();
                let mut mid = p.clone();
                assert_eq!(separate(&mut mid, &mut hi), Some(Ordering::Less), "n={n} x={x} i={i}");
                if let Some(lo) = cur.get(i + 1) {
                    let mut lo = lo.clone();
                    assert_eq!(separate(&mut lo, &mut mid), Some(Ordering::Less), "n={n} x={x} i={i}");
                }
            }
        }
    }
}

#[test]
fn reduced_shift_pair_interlaces_strictly() {
    for n in 2..=10u32 {
        let t = gegenbauer_tilde(n).unwrap().reduced;
        let t1 = gegenbauer_tilde(n - 1).unwrap().reduced.shift_z(&int(1));
        for x in negative_grid().into_iter().skip(1) {
            let r = check_interlacing(
                &t.specialize(Var::X, &x),
                &t1.specialize(Var::X, &x),
                InterlaceMode::Strict,
            )
            .unwrap();
            assert_eq!(r.verdict, InterlaceVerdict::StrictInterlace, "n={n} x={x}");
            assert!(r.recheck());
        }
    }
}

#[test]
fn monotone_pass_survives_further_refinement() {
    let zs = [int(0), frac(1, 2), int(1), int(2)];
    for n in 2..=6 {
        let l = dualroots_core::families::laguerre(n);
        let r = verify_root_monotonicity(
            "laguerre",
            &zs,
            |z| Ok(l.specialize(Var::Z, z)),
            RootSelector::All,
            Direction::Increasing,
        )
        .unwrap();
        assert_eq!(r.outcome(), Verdict::Pass);
        for (z, encs) in zs.iter().zip(&r.values) {
            let fine = isolate(&l.specialize(Var::Z, z)).unwrap().refined(&ten_pow_neg(60));
            for (coarse, f) in encs.iter().zip(&fine.roots) {
                assert!(coarse.contains(&f.enclosure().lo) && coarse.contains(&f.enclosure().hi));
            }
        }
        for w in r.values.windows(2) {
            assert!(w[0].iter().zip(&w[1]).all(|(a, b)| a.below(b)));
        }
    }
}

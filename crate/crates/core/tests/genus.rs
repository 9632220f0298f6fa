use heawood_core::genus::*;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Largest `h` with `(h-3)(h-4) <= 6ε`, found by scanning upward.
fn heawood_by_scan(eps: i64) -> i64 {
    let mut h = 4;
    while (h - 2) * (h - 3) <= 6 * eps {
        h += 1;
    }
    h
}

#[test]
fn heawood_matches_scan_for_small_genus() {
    for eps in 1..=5000 {
        assert_eq!(heawood_number(&eps).unwrap(), heawood_by_scan(eps), "eps={eps}");
    }
}

#[test]
fn windows_tile_the_genus_line() {
    let mut eps = 1i64;
    while eps < 20_000 {
        let w = genus_window(&eps).unwrap();
        assert_eq!(w.eps_lo, eps);
        for e in [w.eps_lo, w.eps_hi] {
            assert_eq!(heawood_number(&e).unwrap(), w.heawood);
        }
        if w.eps_lo > 1 {
            assert_eq!(heawood_number(&(w.eps_lo - 1)).unwrap(), w.heawood - 1);
        }
        assert_eq!(heawood_number(&(w.eps_hi + 1)).unwrap(), w.heawood + 1);
        eps = w.eps_hi + 1;
    }
}

#[test]
fn special_cases_are_exactly_the_triangular_genera() {
    let specials: Vec<i64> = (1..=2000).filter(is_special_case).collect();
    let expected: Vec<i64> = (1..).map(|i: i64| 3 * i * (i + 1) / 2).take_while(|&e| e <= 2000).collect();
    assert_eq!(specials, expected);
}

#[test]
fn min_genus_of_complete_graphs_fits_heawood() {
    for n in 5i64..300 {
        let (eps, _) = min_genus_complete(&n).unwrap();
        assert!(heawood_number(&eps).unwrap() >= n, "n={n}");
        if eps > 1 {
            assert!(heawood_number(&(eps - 1)).unwrap() < n, "n={n} not minimal");
        }
    }
}

proptest! {
    #[test]
    fn bigint_agrees_with_i64(eps in 1i64..1_000_000_000) {
        let a = genus_window(&eps).unwrap();
        let b = genus_window(&BigInt::from(eps)).unwrap();
        prop_assert_eq!(BigInt::from(a.heawood), b.heawood);
        prop_assert_eq!(BigInt::from(a.eps_lo), b.eps_lo);
        prop_assert_eq!(BigInt::from(a.eps_hi), b.eps_hi);
        prop_assert_eq!(a.case, b.case);
        prop_assert_eq!(a.special, b.special);
    }

    #[test]
    fn window_contains_its_genus(eps in 1i64..10_000_000) {
        let w = genus_window(&eps).unwrap();
        prop_assert!(w.contains(&eps));
        prop_assert_eq!(window_bounds(&w.i, w.case), (w.eps_lo, w.eps_hi));
    }

    #[test]
    fn heawood_is_monotone(eps in 1i64..100_000_000) {
        let h0 = heawood_number(&eps).unwrap();
        let h1 = heawood_number(&(eps + 1)).unwrap();
        prop_assert!(h1 == h0 || h1 == h0 + 1);
    }

    #[test]
    fn isqrt_brackets(m in 0i64..i64::MAX / 4) {
        let r = isqrt(&m);
        prop_assert!(r * r <= m);
        prop_assert!((r + 1) * (r + 1) > m);
    }
}

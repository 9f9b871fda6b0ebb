use bounded_catalan::combinatorics::{block_construction_count, brute_force_count, c_kp, catalan, DEFAULT_ORACLE_CAP};
use bounded_catalan::growth::{spectral_radius_at, DEFAULT_TOL};
use bounded_catalan::poly::{fraction_free_solve, int_determinant, poly_gcd, real_roots_positive, rf_reduce, ExactPoly, IntPoly};
use bounded_catalan::solver::{dp_counts, generating_function};
use bounded_catalan::system::build_system;
use bounded_catalan::threshold::{StatePair, Threshold};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn small_poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(-6i64..=6, 0..max_len).prop_map(|cs| ExactPoly::from_integers(&cs))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    small_poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// A polynomial with constant term 1, so its power series exists.
fn unit_poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(-4i64..=4, 0..max_len).prop_map(|mut cs| {
        cs.insert(0, 1);
        ExactPoly::from_integers(&cs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(6), b in small_poly(6), c in small_poly(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_identity(a in small_poly(8), b in nonzero_poly(5)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_and_contains_common_factor(a in nonzero_poly(5), b in nonzero_poly(5), c in nonzero_poly(4)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = poly_gcd(&ac, &bc).unwrap();
        prop_assert!(ac.div_rem(&g).1.is_zero());
        prop_assert!(bc.div_rem(&g).1.is_zero());
        prop_assert!(g.div_rem(&c.monic()).1.is_zero());
        prop_assert_eq!(g.leading().cloned(), Some(BigRational::from_integer(1.into())));
    }

    #[test]
    fn reduction_preserves_series(num in small_poly(6), den in unit_poly(5), c in unit_poly(4)) {
        let plain = rf_reduce(&num, &den).unwrap();
        let padded = rf_reduce(&(&num * &c), &(&den * &c)).unwrap();
        prop_assert_eq!(&plain, &padded);
        // den · series(num / den) agrees with num up to the truncation order
        let s = ExactPoly::from_coeffs(padded.series(15).unwrap());
        let back = &s * &den;
        for i in 0..=15 {
            prop_assert_eq!(back.coeff(i), num.coeff(i));
        }
    }

    #[test]
    fn series_satisfies_convolution(num in small_poly(6), den in unit_poly(5)) {
        let f = rf_reduce(&num, &den).unwrap();
        let n = 20;
        let s = ExactPoly::from_coeffs(f.series(n).unwrap());
        let lhs = &s * f.den();
        for i in 0..=n {
            prop_assert_eq!(lhs.coeff(i), f.num().coeff(i));
        }
    }

    #[test]
    fn determinant_is_multiplicative(
        a in prop::collection::vec(-3i64..=3, 18),
        b in prop::collection::vec(-3i64..=3, 18),
    ) {
        let mat = |v: &[i64]| -> Vec<Vec<IntPoly>> {
            (0..3).map(|i| (0..3).map(|j| IntPoly::from_i64s(&v[(3 * i + j) * 2..(3 * i + j) * 2 + 2])).collect()).collect()
        };
        let (ma, mb) = (mat(&a), mat(&b));
        let prod: Vec<Vec<IntPoly>> = (0..3)
            .map(|i| (0..3).map(|j| (0..3).fold(IntPoly::zero(), |acc, k| &acc + &(&ma[i][k] * &mb[k][j]))).collect())
            .collect();
        prop_assert_eq!(int_determinant(prod), &int_determinant(ma) * &int_determinant(mb));
    }

    #[test]
    fn fraction_free_solve_solves(v in prop::collection::vec(-3i64..=3, 12)) {
        // I - x·B is invertible over Q(x) for any B
        let a: Vec<Vec<IntPoly>> = (0..3)
            .map(|i| (0..3).map(|j| {
                let diag = if i == j { 1 } else { 0 };
                IntPoly::from_i64s(&[diag, -v[3 * i + j]])
            }).collect())
            .collect();
        let b: Vec<IntPoly> = (0..3).map(|i| IntPoly::from_i64s(&[v[9 + i], 1])).collect();
        let (d, ys) = fraction_free_solve(a.clone(), b.clone()).unwrap();
        for i in 0..3 {
            let lhs = (0..3).fold(IntPoly::zero(), |acc, j| &acc + &(&a[i][j] * &ys[j]));
            prop_assert_eq!(lhs, &d * &b[i]);
        }
    }

    #[test]
    fn isolates_distinct_rational_roots(mut ks in prop::collection::btree_set(1i64..40, 1..5)) {
        // product of (40 x - k) has roots k/40 in (0, 1)
        let roots: Vec<i64> = std::mem::take(&mut ks).into_iter().collect();
        let p = roots.iter().fold(ExactPoly::one(), |acc, &k| &acc * &ExactPoly::from_integers(&[-k, 40]));
        let found = real_roots_positive(&p, 0.0, 1.0, 1e-12);
        prop_assert_eq!(found.len(), roots.len());
        for (b, k) in found.iter().zip(&roots) {
            prop_assert!((b.midpoint() - *k as f64 / 40.0).abs() < 1e-10);
        }
    }

    #[test]
    fn counts_sit_between_blocks_and_catalan(m in 1u32..=4, n in 1usize..=8) {
        let a = brute_force_count(m, n, Threshold::Infinite, Threshold::Infinite, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert!(a <= catalan(n as u32));
        prop_assert!(a >= block_construction_count(m, n));
        let wider = brute_force_count(m + 1, n, Threshold::Infinite, Threshold::Infinite, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert!(a <= wider);
    }

    #[test]
    fn dp_matches_oracle_on_states(m in 1u32..=4, n in 1usize..=8, pi in 0u32..=4, qi in 0u32..=4) {
        let t = |i: u32| if i >= m { Threshold::Infinite } else { Threshold::Finite(i) };
        let s = StatePair::new(t(pi), t(qi));
        let dp = dp_counts(m, n).unwrap();
        let want = brute_force_count(m, n, s.p, s.q, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert_eq!(dp.get(s, n), Some(&want));
    }

    #[test]
    fn counts_monotone_in_thresholds(m in 2u32..=5, n in 1usize..=30, p in 0u32..5, q in 0u32..5) {
        let (p, q) = (p.min(m - 1), q.min(m - 1));
        let dp = dp_counts(m, n).unwrap();
        let at = |a: Threshold, b: Threshold| dp.get(StatePair::new(a, b), n).cloned().unwrap();
        let base = at(Threshold::Finite(p), Threshold::Finite(q));
        prop_assert!(base <= at(Threshold::Infinite, Threshold::Finite(q)));
        prop_assert!(base <= at(Threshold::Finite(p), Threshold::Infinite));
        if p + 1 < m {
            prop_assert!(base <= at(Threshold::Finite(p + 1), Threshold::Finite(q)));
        }
    }

    #[test]
    fn left_blocks_monotone(k in 1u32..=12, p in 0u32..12) {
        prop_assert!(c_kp(k, Threshold::Finite(p)) <= c_kp(k, Threshold::Finite(p + 1)));
        prop_assert!(c_kp(k, Threshold::Finite(p)) <= catalan(k - 1));
    }

    #[test]
    fn perron_root_increasing(m in 2u32..=7, x1 in 0.02f64..0.98, dx in 0.01f64..0.5) {
        let x2 = (x1 + dx).min(1.0);
        let sys = build_system(m).unwrap();
        for c in sys.cyclic_components() {
            let a = spectral_radius_at(&sys, c, x1, 1e-12).unwrap();
            let b = spectral_radius_at(&sys, c, x2, 1e-12).unwrap();
            prop_assert!(a < b + DEFAULT_TOL, "m={} {}: {} vs {}", m, c.tag, a, b);
        }
    }
}

#[test]
fn independent_oracle_fixture() {
    let text = include_str!("fixtures/oracle.json");
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    for (m, seq) in v["counts"].as_object().unwrap() {
        let m: u32 = m.parse().unwrap();
        let want: Vec<BigInt> = seq.as_array().unwrap().iter().map(|x| BigInt::from(x.as_u64().unwrap())).collect();
        let n = want.len() - 1;
        let series = generating_function(m).unwrap().series_integers(n).unwrap();
        assert_eq!(series, want, "m={m}");
    }
    let den2: Vec<i64> = v["m2_denominator"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(generating_function(2).unwrap().den(), &ExactPoly::from_integers(&den2));
    for (m, d) in v["d_m"].as_object().unwrap() {
        assert_eq!(bounded_catalan::solver::recurrence_order_bound(m.parse().unwrap()), d.as_u64().unwrap());
    }
}

#[test]
fn state_series_are_counting_series() {
    for m in 1..=4 {
        let sys = build_system(m).unwrap();
        let all = bounded_catalan::solver::solve_system(&sys).unwrap();
        let dp = dp_counts(m, 100).unwrap();
        for (s, f) in &all {
            let series = f.series_integers(100).unwrap();
            assert_eq!(series[0], BigInt::from(0));
            for (n, c) in series.iter().enumerate().skip(1) {
                assert_eq!(Some(c), dp.get(*s, n).map(|x| BigInt::from(x.clone())).as_ref(), "m={m} {s} n={n}");
            }
        }
    }
}

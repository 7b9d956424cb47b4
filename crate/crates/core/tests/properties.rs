//! Property-based invariants spanning the whole pipeline.

use proptest::prelude::*;

use ulrich_core::classify;
use ulrich_core::hj::{GroupParams, HjExpansion};
use ulrich_core::oracle;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Evaluate [alpha_1, ..., alpha_r] back-to-front with exact arithmetic,
/// independently of the library code.
fn continued_fraction_value(alphas: &[i64]) -> (i128, i128) {
    let mut num: i128 = 1;
    let mut den: i128 = 0;
    for &alpha in alphas.iter().rev() {
        let next = alpha as i128 * num - den;
        den = num;
        num = next;
    }
    (num, den)
}

fn coprime_pair(max_n: i64) -> impl Strategy<Value = (i64, i64)> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_filter("coprime", |&(n, a)| gcd(n, a) == 1)
}

#[test]
fn expansion_reconstructs_every_fraction_up_to_120() {
    for n in 2..=120 {
        for a in 1..n {
            if gcd(n, a) != 1 {
                continue;
            }
            let hj = HjExpansion::new(GroupParams::new(n, a).unwrap());
            assert_eq!(
                continued_fraction_value(hj.alphas()),
                (n as i128, a as i128),
                "1/{n}(1,{a})"
            );
        }
    }
}

#[test]
fn extreme_weights_have_the_expected_expansions() {
    for n in 2..=40 {
        let ones = HjExpansion::new(GroupParams::new(n, 1).unwrap());
        assert_eq!(ones.alphas(), &[n]);
        assert_eq!(ones.multiplicity(), n);
        if n >= 3 {
            let top = HjExpansion::new(GroupParams::new(n, n - 1).unwrap());
            assert_eq!(top.alphas(), &vec![2; (n - 1) as usize][..]);
            assert_eq!(top.multiplicity(), 2);
        }
    }
}

proptest! {
    #[test]
    fn series_satisfy_the_determinant_identity((n, a) in coprime_pair(2000)) {
        let hj = HjExpansion::new(GroupParams::new(n, a).unwrap());
        let i = hj.i_series();
        let j = hj.j_series();
        prop_assert!(i.windows(2).all(|w| w[0] > w[1]));
        prop_assert!(j.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!((i[0], i[1], i[i.len() - 2], i[i.len() - 1]), (n, a, 1, 0));
        prop_assert_eq!((j[0], j[1], j[j.len() - 1]), (0, 1, n));
        for t in 1..i.len() {
            prop_assert_eq!(i[t - 1] * j[t] - i[t] * j[t - 1], n);
        }
        prop_assert!(hj.alphas().iter().all(|&x| x >= 2));
    }

    #[test]
    fn decompose_and_recompose_are_inverse((n, a) in coprime_pair(500)) {
        let hj = HjExpansion::new(GroupParams::new(n, a).unwrap());
        for t in 0..n {
            let d = classify::decompose(&hj, t);
            prop_assert!(classify::is_valid_sequence(&hj, d.coefficients()));
            prop_assert_eq!(classify::recompose(&hj, d.coefficients()), Ok(t));
        }
    }

    #[test]
    fn enumeration_bijects_onto_the_index_range((n, a) in coprime_pair(150)) {
        let hj = HjExpansion::new(GroupParams::new(n, a).unwrap());
        let seqs = classify::enumerate_valid_sequences(&hj);
        prop_assert_eq!(seqs.len() as i64, n);
        let mut values: Vec<i64> = seqs
            .iter()
            .map(|d| classify::recompose(&hj, d.coefficients()).unwrap())
            .collect();
        values.sort_unstable();
        prop_assert_eq!(values, (0..n).collect::<Vec<_>>());
    }

    #[test]
    fn generator_count_stays_within_the_multiplicity((n, a) in coprime_pair(500)) {
        let hj = HjExpansion::new(GroupParams::new(n, a).unwrap());
        let e = hj.multiplicity();
        for t in 0..n {
            let m = classify::mu(&hj, t);
            prop_assert!(1 <= m && m <= e);
            prop_assert_eq!(m == 1, t == 0);
        }
    }

    #[test]
    fn staircase_and_naive_generators_agree((n, a) in coprime_pair(60)) {
        let g = GroupParams::new(n, a).unwrap();
        for t in 0..n {
            prop_assert_eq!(
                oracle::minimal_generators(&g, t),
                oracle::minimal_generators_naive(&g, t)
            );
        }
    }

    #[test]
    fn full_cross_check_passes((n, a) in coprime_pair(100)) {
        let report = oracle::cross_check(&GroupParams::new(n, a).unwrap());
        prop_assert!(report.passed(), "{}", report);
    }
}

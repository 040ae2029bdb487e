mod common;

use common::*;
use tmrec::recmat::builtin;
use tmrec::thuemorse::{
    beta_coeffs, fold, folding_product, gamma_coeffs, hankel, hankel_determinants, i_tau,
    in_small_alphabet, series_product, tau,
};
use tmrec::{GaussianRational, SeriesTruncation, SignSequence};

/// The reflection recursion written out directly.
fn fold_oracle(k: u64) -> i8 {
    let mut j = 0;
    while (1u64 << (j + 1)) <= k {
        j += 1;
    }
    let base = 1u64 << j;
    if k == base {
        1
    } else {
        -fold_oracle(2 * base - k)
    }
}

#[test]
fn digit_sum_recurrences() {
    for n in 0..(1u64 << 16) {
        assert_eq!(tau(2 * n), tau(n));
        assert_eq!(tau(2 * n + 1), tau(n) + 1);
        assert_eq!(tau(n), digit_sum(n));
    }
}

#[test]
fn regular_folding_pattern() {
    let sigma = SignSequence::regular();
    for n in 0..(1u64 << 12) {
        assert_eq!(fold(4 * n + 1, &sigma).unwrap(), 1);
        assert_eq!(fold(4 * n + 3, &sigma).unwrap(), -1);
        if n >= 1 {
            assert_eq!(fold(2 * n, &sigma).unwrap(), fold(n, &sigma).unwrap());
            assert_eq!(fold(n, &sigma).unwrap(), fold_oracle(n));
        }
    }
    assert!(fold(0, &sigma).is_err());
}

#[test]
fn generalized_folding_uses_signs_at_powers_of_two() {
    let sigma: SignSequence = "+-+--".parse().unwrap();
    for j in 0..8u32 {
        assert_eq!(fold(1 << j, &sigma).unwrap(), sigma.get(j as usize + 1));
    }
    for k in 1..512u64 {
        let j = 63 - k.leading_zeros();
        let a = k - (1 << j);
        if a > 0 {
            assert_eq!(
                fold(k, &sigma).unwrap(),
                -fold((1 << j) - a, &sigma).unwrap()
            );
        }
    }
}

#[test]
fn thue_morse_series() {
    let s = series_product(&SignSequence::regular(), 1024);
    assert_eq!(s.order(), 1024);
    for n in 0..=1024u64 {
        assert_eq!(s.coefficient(n as usize), &i_pow(digit_sum(n)));
    }
}

#[test]
fn signed_series_matches_naive_product() {
    let sigma: SignSequence = "-+-".parse().unwrap();
    let order = 40;
    let mut naive = SeriesTruncation::one(order);
    for k in 0..6 {
        let mut terms = vec![g(0, 0); (1 << k) + 1];
        terms[0] = g(1, 0);
        terms[1 << k] = g(0, i64::from(sigma.get(k)));
        naive = naive.mul(&SeriesTruncation::polynomial(&terms, order));
    }
    assert_eq!(series_product(&sigma, order), naive);
}

#[test]
fn beta_and_gamma_closed_forms_and_alphabet() {
    let n_max = 1024;
    let beta = beta_coeffs(n_max);
    let gamma = gamma_coeffs(n_max);
    let d = g(-1, 1);
    for n in 1..=n_max as u64 {
        let b = (i_pow(digit_sum(n)) - i_pow(digit_sum(n - 1)))
            .checked_div(&d)
            .unwrap();
        assert_eq!(beta.coefficient(n as usize), &b);
        assert!(in_small_alphabet(&b), "beta {n} = {b}");
        if n >= 2 {
            let c = (i_pow(digit_sum(n)) - i_pow(digit_sum(n - 2)))
                .checked_div(&d)
                .unwrap();
            assert_eq!(gamma.coefficient(n as usize), &c);
            assert!(in_small_alphabet(&c), "gamma {n} = {c}");
        }
    }
    assert_eq!(beta.coefficient(1), &g(1, 0));
    assert_eq!(beta.coefficient(3), &g(0, 1));
    assert_eq!(gamma.coefficient(2), &g(1, 0));
}

#[test]
fn hankel_of_moments_is_unfolded_fixture() {
    let h = builtin("H").unwrap();
    for k in 0..=6 {
        let n = 1usize << k;
        assert_eq!(hankel(|m| i_tau(m as u64), 0, n), h.unfold(k));
    }
}

#[test]
fn determinant_table_matches_folding_products() {
    let coeffs: Vec<_> = (0..130u64).map(i_tau).collect();
    let dets = hankel_determinants(&coeffs, 0, 65);
    let sigma = SignSequence::regular();
    for n in 0..=64 {
        assert_eq!(
            dets[n + 1],
            folding_product(n as u64, &sigma),
            "order {}",
            n + 1
        );
    }
    for n in 0..=6 {
        let m = hankel(|k| coeffs[k].clone(), 0, n);
        assert_eq!(dets[n], cofactor_det(&m));
    }
}

#[test]
fn small_alphabet_membership() {
    for (re, im) in [(0, 0), (1, 0), (-1, 1), (1, -1), (0, -1)] {
        assert!(in_small_alphabet(&g(re, im)));
    }
    assert!(!in_small_alphabet(&g(2, 0)));
    let half = GaussianRational::new(tmrec::Rational::new(1, 2).unwrap(), tmrec::Rational::zero());
    assert!(!in_small_alphabet(&half));
}

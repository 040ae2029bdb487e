//! Oracles and generators shared by the integration tests. Nothing here goes
//! through the elimination or presentation code it is used to check.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tmrec::{DenseMatrix, GaussianRational, Presentation, Rational, WordPair};

pub fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// One of `0, ±1, ±i`.
pub fn small_unit_or_zero(rng: &mut StdRng) -> GaussianRational {
    match rng.gen_range(0..5) {
        0 => g(0, 0),
        1 => g(1, 0),
        2 => g(-1, 0),
        3 => g(0, 1),
        _ => g(0, -1),
    }
}

pub fn small_gaussian_int(rng: &mut StdRng, bound: i64) -> GaussianRational {
    g(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn random_gaussian_rational(rng: &mut StdRng) -> GaussianRational {
    let mut r = || Rational::new(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=12)).unwrap();
    GaussianRational::new(r(), r())
}

pub fn random_int_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| small_gaussian_int(rng, bound))
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &DenseMatrix) -> GaussianRational {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return g(1, 0);
    }
    let mut acc = g(0, 0);
    for j in 0..n {
        let minor = DenseMatrix::from_fn(n - 1, n - 1, |r, c| {
            m[(r + 1, if c < j { c } else { c + 1 })].clone()
        });
        let term = &m[(0, j)] * &cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Presentation with entries in `{0, ±1, ±i}`.
pub fn random_presentation(rng: &mut StdRng, p: usize, q: usize, dim: usize) -> Presentation {
    let init = (0..dim).map(|_| small_unit_or_zero(rng)).collect();
    let shifts = (0..p * q)
        .map(|_| DenseMatrix::from_fn(dim, dim, |_, _| small_unit_or_zero(rng)))
        .collect();
    Presentation::unlabeled(p, q, init, shifts).unwrap()
}

/// Brute-force convolution: sum over every splitting of the word pair.
pub fn convolution_oracle(a: &Presentation, b: &Presentation, wp: &WordPair) -> GaussianRational {
    (0..=wp.len())
        .map(|k| {
            let (left, right) = wp.split_at(k);
            a.evaluate(&left).unwrap() * b.evaluate(&right).unwrap()
        })
        .sum()
}

/// Binary digit sum by repeated halving.
pub fn digit_sum(mut n: u64) -> u32 {
    let mut s = 0;
    while n > 0 {
        s += (n % 2) as u32;
        n /= 2;
    }
    s
}

pub fn i_pow(k: u32) -> GaussianRational {
    [g(1, 0), g(0, 1), g(-1, 0), g(0, -1)][(k % 4) as usize].clone()
}

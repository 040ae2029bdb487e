//! Thue-Morse and paperfolding sequences, truncated series and Hankel
//! matrices built from them.

use std::fmt;
use std::str::FromStr;

use crate::exactnum::{GaussianRational, Rational};
use crate::linalg::DenseMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("the folding sequence is indexed from 1")]
    ZeroIndex,
    #[error("invalid sign {found:?} at position {position}; expected '+' or '-'")]
    BadSign { position: usize, found: char },
    #[error("series has no inverse: constant term is zero")]
    NotInvertible,
}

/// Binary digit sum.
pub fn tau(n: u64) -> u32 {
    n.count_ones()
}

/// `i^τ(n)`, the Thue-Morse moment sequence.
pub fn i_tau(n: u64) -> GaussianRational {
    GaussianRational::pow_i(i64::from(tau(n)))
}

/// Signs `σ_0, σ_1, …`; positions past the given prefix are `+1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignSequence {
    signs: Vec<i8>,
}

impl SignSequence {
    /// The constant `+1` sequence: regular folding and the plain product.
    pub fn regular() -> Self {
        SignSequence::default()
    }

    /// Panics if any entry is not `±1`.
    pub fn from_signs(signs: Vec<i8>) -> Self {
        assert!(
            signs.iter().all(|s| *s == 1 || *s == -1),
            "signs must be ±1"
        );
        SignSequence { signs }
    }

    pub fn get(&self, k: usize) -> i8 {
        self.signs.get(k).copied().unwrap_or(1)
    }

    pub fn prefix(&self) -> &[i8] {
        &self.signs
    }
}

impl FromStr for SignSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, SequenceError> {
        let signs = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '+' => Ok(1),
                '-' | '\u{2212}' => Ok(-1),
                found => Err(SequenceError::BadSign { position, found }),
            })
            .collect::<Result<_, _>>()?;
        Ok(SignSequence { signs })
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            f.write_str(if *s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// Folding sequence: `f(2^j) = σ_{j+1}` and `f(2^j + a) = -f(2^j - a)` for
/// `1 ≤ a < 2^j`. With all signs `+1` this is the regular paperfolding
/// sequence.
pub fn fold(k: u64, sigma: &SignSequence) -> Result<i8, SequenceError> {
    if k == 0 {
        return Err(SequenceError::ZeroIndex);
    }
    let mut k = k;
    let mut sign = 1i8;
    loop {
        let j = 63 - k.leading_zeros() as usize;
        let base = 1u64 << j;
        if k == base {
            return Ok(sign * sigma.get(j + 1));
        }
        k = 2 * base - k;
        sign = -sign;
    }
}

/// `∏_{k=1}^n (1 + i·f(k))`.
pub fn folding_product(n: u64, sigma: &SignSequence) -> GaussianRational {
    (1..=n)
        .map(|k| {
            let f = fold(k, sigma).expect("k >= 1");
            GaussianRational::from_ints(1, i64::from(f))
        })
        .product()
}

/// The `order × order` matrix with entry `(s, t) = seq(offset + s + t)`.
pub fn hankel(seq: impl Fn(usize) -> GaussianRational, offset: usize, order: usize) -> DenseMatrix {
    DenseMatrix::from_fn(order, order, |s, t| seq(offset + s + t))
}

/// Determinants of the Hankel matrices of orders `0..=max_order` built from
/// `coeffs` starting at `offset`.
///
/// Uses one fraction-free pass for all leading minors when the entries are
/// Gaussian integers and no minor vanishes; otherwise falls back to one
/// determinant per order.
pub fn hankel_determinants(
    coeffs: &[GaussianRational],
    offset: usize,
    max_order: usize,
) -> Vec<GaussianRational> {
    assert!(
        offset + 2 * max_order <= coeffs.len() + 1,
        "not enough coefficients for order {max_order} at offset {offset}"
    );
    let full = hankel(|n| coeffs[n].clone(), offset, max_order);
    let mut dets = vec![GaussianRational::one()];
    let minors = full.leading_minors_bareiss().unwrap_or_default();
    let trusted = match minors.last() {
        Some(m) if m.is_zero() => minors.len() - 1,
        _ => minors.len(),
    };
    dets.extend(minors.into_iter().take(trusted));
    for order in dets.len()..=max_order {
        let h = hankel(|n| coeffs[n].clone(), offset, order);
        let det = h.det_bareiss().or_else(|_| h.det_field()).expect("square");
        dets.push(det);
    }
    dets
}

/// Power series truncated after `x^N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesTruncation {
    coeffs: Vec<GaussianRational>,
}

impl SeriesTruncation {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<GaussianRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncation keeps at least x^0");
        SeriesTruncation { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesTruncation::new(vec![GaussianRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = SeriesTruncation::zero(order);
        s.coeffs[0] = GaussianRational::one();
        s
    }

    /// `Σ_k terms[k] x^k`, truncated at `order`.
    pub fn polynomial(terms: &[GaussianRational], order: usize) -> Self {
        let mut s = SeriesTruncation::zero(order);
        for (k, c) in terms.iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, n: usize) -> &GaussianRational {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<GaussianRational> {
        self.coeffs
    }

    fn check_order(&self, rhs: &SeriesTruncation) {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
    }

    pub fn add(&self, rhs: &SeriesTruncation) -> SeriesTruncation {
        self.check_order(rhs);
        SeriesTruncation::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &SeriesTruncation) -> SeriesTruncation {
        self.check_order(rhs);
        SeriesTruncation::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &GaussianRational) -> SeriesTruncation {
        SeriesTruncation::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, rhs: &SeriesTruncation) -> SeriesTruncation {
        self.check_order(rhs);
        let n = self.order();
        let mut out = SeriesTruncation::zero(n);
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs[..=n - j].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[j + k] += a * b;
                }
            }
        }
        out
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<SeriesTruncation, SequenceError> {
        let c0inv = self.coeffs[0]
            .inv()
            .map_err(|_| SequenceError::NotInvertible)?;
        let n = self.order();
        let mut out = SeriesTruncation::zero(n);
        out.coeffs[0] = c0inv.clone();
        for k in 1..=n {
            let mut acc = GaussianRational::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &out.coeffs[k - j];
                }
            }
            out.coeffs[k] = -(acc * &c0inv);
        }
        Ok(out)
    }
}

/// `∏_{k : 2^k ≤ N} (1 + σ_k·i·x^{2^k})` truncated at `N`.
pub fn series_product(sigma: &SignSequence, order: usize) -> SeriesTruncation {
    let mut coeffs = vec![GaussianRational::zero(); order + 1];
    coeffs[0] = GaussianRational::one();
    let mut k = 0;
    while (1usize << k) <= order {
        let step = 1usize << k;
        let factor = GaussianRational::from_ints(0, i64::from(sigma.get(k)));
        for n in (step..=order).rev() {
            if !coeffs[n - step].is_zero() {
                let add = &factor * &coeffs[n - step];
                coeffs[n] += add;
            }
        }
        k += 1;
    }
    SeriesTruncation::new(coeffs)
}

/// `p(x)/(i-1) · ∏(1 + i x^{2^k})`.
fn scaled_thue_morse(numerator: &[GaussianRational], order: usize) -> SeriesTruncation {
    let denom = GaussianRational::from_ints(-1, 1).inv().expect("nonzero");
    SeriesTruncation::polynomial(numerator, order)
        .scale(&denom)
        .mul(&series_product(&SignSequence::regular(), order))
}

/// Coefficients of `(1 - x)/(i - 1) · ∏(1 + i x^{2^k})` through `x^N`.
///
/// The sequence proper starts at `β_1`; `β_0 = 1/(i-1)` is kept so that
/// indices match powers of `x`.
pub fn beta_coeffs(order: usize) -> SeriesTruncation {
    scaled_thue_morse(&[GaussianRational::one(), -GaussianRational::one()], order)
}

/// Coefficients of `(1 - x²)/(i - 1) · ∏(1 + i x^{2^k})` through `x^N`.
///
/// The sequence proper starts at `γ_2`.
pub fn gamma_coeffs(order: usize) -> SeriesTruncation {
    scaled_thue_morse(
        &[
            GaussianRational::one(),
            GaussianRational::zero(),
            -GaussianRational::one(),
        ],
        order,
    )
}

/// The nine values `0, ±1, ±i, ±1±i`.
pub fn in_small_alphabet(x: &GaussianRational) -> bool {
    let small = |r: &Rational| r.is_integer() && r.abs() <= Rational::one();
    small(x.re()) && small(x.im())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn regular(k: u64) -> i8 {
        fold(k, &SignSequence::regular()).unwrap()
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(0), 0);
        assert_eq!(tau(5), 2);
        assert_eq!(tau(7), 3);
    }

    #[test]
    fn fold_examples() {
        assert_eq!(regular(1), 1);
        assert_eq!(regular(3), -1);
        assert_eq!(regular(6), -1);
        assert_eq!(
            fold(0, &SignSequence::regular()),
            Err(SequenceError::ZeroIndex)
        );
    }

    #[test]
    fn generalized_fold_uses_shifted_signs() {
        let sigma: SignSequence = "+-+".parse().unwrap();
        assert_eq!(fold(1, &sigma).unwrap(), -1);
        assert_eq!(fold(2, &sigma).unwrap(), 1);
        assert_eq!(fold(3, &sigma).unwrap(), 1);
        assert_eq!(fold(4, &sigma).unwrap(), 1);
    }

    #[test]
    fn sign_strings() {
        let s: SignSequence = "+\u{2212}-".parse().unwrap();
        assert_eq!(s.prefix(), &[1, -1, -1]);
        assert_eq!(s.get(10), 1);
        assert_eq!(s.to_string(), "+--");
        assert_eq!(
            "+x".parse::<SignSequence>(),
            Err(SequenceError::BadSign {
                position: 1,
                found: 'x'
            })
        );
    }

    #[test]
    fn folding_product_examples() {
        let r = SignSequence::regular();
        assert_eq!(folding_product(0, &r), g(1, 0));
        assert_eq!(folding_product(1, &r), g(1, 1));
        assert_eq!(folding_product(3, &r), g(2, 2));
    }

    #[test]
    fn hankel_examples() {
        let h = hankel(|n| i_tau(n as u64), 0, 2);
        assert_eq!(
            h,
            DenseMatrix::from_rows(vec![vec![g(1, 0), g(0, 1)], vec![g(0, 1), g(0, 1)]])
        );
        let empty = hankel(|n| i_tau(n as u64), 0, 0);
        assert_eq!(empty.det_bareiss().unwrap(), g(1, 0));
        let beta = beta_coeffs(4);
        let b = hankel(|n| beta.coefficient(n).clone(), 1, 1);
        assert_eq!(b[(0, 0)], g(1, 0));
    }

    #[test]
    fn series_product_examples() {
        let r = SignSequence::regular();
        assert_eq!(
            series_product(&r, 3).coefficients(),
            &[g(1, 0), g(0, 1), g(0, 1), g(-1, 0)]
        );
        assert_eq!(series_product(&r, 0).coefficients(), &[g(1, 0)]);
        let s: SignSequence = "-".parse().unwrap();
        assert_eq!(
            series_product(&s, 2).coefficients(),
            &[g(1, 0), g(0, -1), g(0, 1)]
        );
    }

    #[test]
    fn beta_gamma_examples() {
        let b = beta_coeffs(8);
        assert_eq!(b.coefficient(1), &g(1, 0));
        assert_eq!(b.coefficient(3), &g(0, 1));
        let c = gamma_coeffs(8);
        assert_eq!(c.coefficient(2), &g(1, 0));
    }

    #[test]
    fn series_inverse() {
        let s = series_product(&SignSequence::regular(), 12);
        let inv = s.inverse().unwrap();
        assert_eq!(s.mul(&inv), SeriesTruncation::one(12));
        assert_eq!(
            SeriesTruncation::zero(3).inverse(),
            Err(SequenceError::NotInvertible)
        );
    }

    #[test]
    fn hankel_determinants_fall_back_on_zero_minor() {
        // 1, 0, 1, 0, ...: order-2 minor is 1, the order-1 minor of the shifted
        // sequence is 0
        let coeffs: Vec<_> = (0..12).map(|n| g(((n + 1) % 2) as i64, 0)).collect();
        let dets = hankel_determinants(&coeffs, 1, 4);
        for (order, det) in dets.iter().enumerate() {
            let h = hankel(|n| coeffs[n].clone(), 1, order);
            assert_eq!(det, &h.det_field().unwrap());
        }
    }

    #[test]
    fn small_alphabet() {
        assert!(in_small_alphabet(&g(-1, 1)));
        assert!(in_small_alphabet(&g(0, 0)));
        assert!(!in_small_alphabet(&g(2, 0)));
        assert!(!in_small_alphabet(&"1/2".parse().unwrap()));
    }
}

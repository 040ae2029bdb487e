//! Recurrence matrices over Q(i).
//!
//! A recurrence matrix is a function `A[U, W]` on pairs of equal-length
//! words `U ∈ {0..p-1}^l`, `W ∈ {0..q-1}^l` whose orbit under the shift
//! action `(ρ(s,t)A)[U, W] = A[Us, Wt]` spans a finite-dimensional space.
//! It is handled through a [`Presentation`]: a basis `A_1 = A, …, A_a` of
//! that space, the values `A_h[∅, ∅]`, and one `a × a` matrix per letter
//! pair describing the shift action on the basis.
//!
//! Shift matrices act by columns: entry `(k, j)` of `shift(s, t)` is the
//! coefficient of `A_k` in `ρ(s,t)A_j`. So evaluation at
//! `(s_1…s_n, t_1…t_n)` applies the transposed shift for `(s_1, t_1)` first.
//!
//! Unfoldings index word pairs by integers with the first letter as the
//! least significant digit, which makes the unfolding of the Thue-Morse
//! fixture equal the Hankel matrix `(i^τ(r+c))`.

mod fixtures;
mod io;
mod minimize;
mod ops;

use std::fmt;

use crate::exactnum::{GaussianRational, ParseError};
use crate::linalg::DenseMatrix;

pub use fixtures::{builtin, BUILTIN_NAMES};
pub use io::{from_json, to_json};
pub use minimize::{
    complexity, minimize, observation_space, restriction_matrix, saturation_level,
    shift_hankel_rank,
};
pub use ops::{rec_convolution, rec_hadamard, rec_product, rec_scale, rec_sum, rec_transpose};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecError {
    #[error("alphabet mismatch: expected {expected:?}, got {got:?}")]
    AlphabetMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("inner alphabets differ: left has q={left_q}, right has p={right_p}")]
    InnerAlphabetMismatch { left_q: usize, right_p: usize },
    #[error("invalid word pair: {0}")]
    InvalidWord(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("unknown builtin presentation {0:?}")]
    UnknownBuiltin(String),
    #[error("presentation file: {0}")]
    Format(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A pair of equal-length words over `{0..p-1}` and `{0..q-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WordPair {
    p: usize,
    q: usize,
    row: Vec<usize>,
    col: Vec<usize>,
}

impl WordPair {
    pub fn new(p: usize, q: usize, row: Vec<usize>, col: Vec<usize>) -> Result<Self, RecError> {
        if row.len() != col.len() {
            return Err(RecError::InvalidWord(format!(
                "row word has length {}, column word has length {}",
                row.len(),
                col.len()
            )));
        }
        if let Some(&s) = row.iter().find(|&&s| s >= p) {
            return Err(RecError::InvalidWord(format!(
                "row letter {s} outside 0..{p}"
            )));
        }
        if let Some(&t) = col.iter().find(|&&t| t >= q) {
            return Err(RecError::InvalidWord(format!(
                "column letter {t} outside 0..{q}"
            )));
        }
        Ok(WordPair { p, q, row, col })
    }

    pub fn empty(p: usize, q: usize) -> Self {
        WordPair {
            p,
            q,
            row: Vec::new(),
            col: Vec::new(),
        }
    }

    /// Parses digit strings, letter 1 leftmost: `("11", "01")`.
    pub fn parse(p: usize, q: usize, row: &str, col: &str) -> Result<Self, RecError> {
        fn digits(s: &str) -> Result<Vec<usize>, RecError> {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| RecError::InvalidWord(format!("{c:?} is not a digit")))
                })
                .collect()
        }
        WordPair::new(p, q, digits(row)?, digits(col)?)
    }

    /// The word pair of length `len` encoding `(r, c)`, least significant digit first.
    pub fn from_indices(p: usize, q: usize, mut r: usize, mut c: usize, len: usize) -> Self {
        let mut row = Vec::with_capacity(len);
        let mut col = Vec::with_capacity(len);
        for _ in 0..len {
            row.push(r % p);
            col.push(c % q);
            r /= p;
            c /= q;
        }
        WordPair { p, q, row, col }
    }

    pub fn to_indices(&self) -> (usize, usize) {
        let r = self.row.iter().rev().fold(0, |acc, &s| acc * self.p + s);
        let c = self.col.iter().rev().fold(0, |acc, &t| acc * self.q + t);
        (r, c)
    }

    pub fn alphabets(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn len(&self) -> usize {
        self.row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row.is_empty()
    }

    pub fn row_word(&self) -> &[usize] {
        &self.row
    }

    pub fn col_word(&self) -> &[usize] {
        &self.col
    }

    pub fn letters(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.row.iter().copied().zip(self.col.iter().copied())
    }

    /// Monoid product `(U, W)(U', W') = (UU', WW')`.
    pub fn concat(&self, other: &WordPair) -> WordPair {
        assert_eq!(self.alphabets(), other.alphabets(), "alphabet mismatch");
        let mut out = self.clone();
        out.row.extend_from_slice(&other.row);
        out.col.extend_from_slice(&other.col);
        out
    }

    /// `(U[..k], W[..k])` and `(U[k..], W[k..])`.
    pub fn split_at(&self, k: usize) -> (WordPair, WordPair) {
        let (r1, r2) = self.row.split_at(k);
        let (c1, c2) = self.col.split_at(k);
        (
            WordPair::new(self.p, self.q, r1.to_vec(), c1.to_vec()).unwrap(),
            WordPair::new(self.p, self.q, r2.to_vec(), c2.to_vec()).unwrap(),
        )
    }

    /// Every word pair of length `len`, in unfolding order (row index major).
    pub fn all_of_length(p: usize, q: usize, len: usize) -> impl Iterator<Item = WordPair> {
        let rows = p.pow(len as u32);
        let cols = q.pow(len as u32);
        (0..rows * cols).map(move |k| WordPair::from_indices(p, q, k / cols, k % cols, len))
    }
}

impl fmt::Display for WordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<String>();
        write!(f, "({:?}, {:?})", w(&self.row), w(&self.col))
    }
}

/// A recurrence matrix given by initial values and shift matrices over a
/// basis of its recursive closure. Generator 0 is the represented function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    p: usize,
    q: usize,
    labels: Vec<String>,
    init: Vec<GaussianRational>,
    shifts: Vec<DenseMatrix>,
}

impl Presentation {
    /// `shifts` is indexed by `s * q + t`.
    pub fn new(
        p: usize,
        q: usize,
        labels: Vec<String>,
        init: Vec<GaussianRational>,
        shifts: Vec<DenseMatrix>,
    ) -> Result<Self, RecError> {
        let dim = init.len();
        if p == 0 || q == 0 {
            return Err(RecError::InvalidPresentation(
                "alphabets must be nonempty".into(),
            ));
        }
        if labels.len() != dim {
            return Err(RecError::InvalidPresentation(format!(
                "{} labels for dimension {dim}",
                labels.len()
            )));
        }
        if shifts.len() != p * q {
            return Err(RecError::InvalidPresentation(format!(
                "{} shift matrices, expected {}",
                shifts.len(),
                p * q
            )));
        }
        if let Some(m) = shifts.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(RecError::InvalidPresentation(format!(
                "shift matrix is {}x{}, expected {dim}x{dim}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Presentation {
            p,
            q,
            labels,
            init,
            shifts,
        })
    }

    /// Generic labels `A1, A2, …`.
    pub fn unlabeled(
        p: usize,
        q: usize,
        init: Vec<GaussianRational>,
        shifts: Vec<DenseMatrix>,
    ) -> Result<Self, RecError> {
        let labels = default_labels("A", init.len());
        Presentation::new(p, q, labels, init, shifts)
    }

    /// The zero function, with an empty basis.
    pub fn zero(p: usize, q: usize) -> Self {
        Presentation {
            p,
            q,
            labels: Vec::new(),
            init: Vec::new(),
            shifts: vec![DenseMatrix::zeros(0, 0); p * q],
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn alphabets(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn dim(&self) -> usize {
        self.init.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn init(&self) -> &[GaussianRational] {
        &self.init
    }

    pub fn shift(&self, s: usize, t: usize) -> &DenseMatrix {
        assert!(
            s < self.p && t < self.q,
            "letter pair ({s}, {t}) out of range"
        );
        &self.shifts[s * self.q + t]
    }

    pub fn shifts(&self) -> &[DenseMatrix] {
        &self.shifts
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, RecError> {
        if labels.len() != self.dim() {
            return Err(RecError::InvalidPresentation(format!(
                "{} labels for dimension {}",
                labels.len(),
                self.dim()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    fn check_word(&self, wp: &WordPair) -> Result<(), RecError> {
        if wp.alphabets() != self.alphabets() {
            return Err(RecError::AlphabetMismatch {
                expected: self.alphabets(),
                got: wp.alphabets(),
            });
        }
        Ok(())
    }

    /// Values of every generator at `wp`.
    pub fn evaluate_all(&self, wp: &WordPair) -> Result<Vec<GaussianRational>, RecError> {
        self.check_word(wp)?;
        let mut v = self.init.clone();
        for (s, t) in wp.letters() {
            v = self.shift(s, t).vec_mul(&v);
        }
        Ok(v)
    }

    /// `A[U, W]` for the represented function `A`.
    pub fn evaluate(&self, wp: &WordPair) -> Result<GaussianRational, RecError> {
        Ok(self
            .evaluate_all(wp)?
            .into_iter()
            .next()
            .unwrap_or_else(GaussianRational::zero))
    }

    /// Generator values at every word pair of length `n`, indexed `r * q^n + c`.
    pub(crate) fn layer(&self, n: usize) -> Vec<Vec<GaussianRational>> {
        let mut layer = vec![self.init.clone()];
        let (mut rows, mut cols) = (1usize, 1usize);
        for _ in 0..n {
            let (nrows, ncols) = (rows * self.p, cols * self.q);
            let mut next = vec![Vec::new(); nrows * ncols];
            for s in 0..self.p {
                for t in 0..self.q {
                    let shift = self.shift(s, t);
                    for r in 0..rows {
                        for c in 0..cols {
                            let v = shift.vec_mul(&layer[r * cols + c]);
                            next[(r + s * rows) * ncols + c + t * cols] = v;
                        }
                    }
                }
            }
            layer = next;
            rows = nrows;
            cols = ncols;
        }
        layer
    }

    /// The `p^n × q^n` matrix of values at all length-`n` word pairs.
    pub fn unfold(&self, n: usize) -> DenseMatrix {
        let rows = self.p.pow(n as u32);
        let cols = self.q.pow(n as u32);
        if self.dim() == 0 {
            return DenseMatrix::zeros(rows, cols);
        }
        let layer = self.layer(n);
        DenseMatrix::from_fn(rows, cols, |r, c| layer[r * cols + c][0].clone())
    }
}

pub(crate) fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn h() -> Presentation {
        builtin("H").unwrap()
    }

    #[test]
    fn word_pairs() {
        assert!(WordPair::parse(2, 2, "10", "1").is_err());
        assert!(WordPair::parse(2, 2, "12", "10").is_err());
        let wp = WordPair::parse(2, 2, "11", "01").unwrap();
        assert_eq!(wp.to_indices(), (3, 2));
        assert_eq!(WordPair::from_indices(2, 2, 3, 2, 2), wp);
        let (a, b) = wp.split_at(1);
        assert_eq!(a.concat(&b), wp);
    }

    #[test]
    fn evaluate_fixture_h() {
        let h = h();
        assert_eq!(h.evaluate(&WordPair::empty(2, 2)).unwrap(), g(1, 0));
        assert_eq!(
            h.evaluate(&WordPair::parse(2, 2, "1", "1").unwrap())
                .unwrap(),
            g(0, 1)
        );
        assert_eq!(
            h.evaluate(&WordPair::parse(2, 2, "11", "01").unwrap())
                .unwrap(),
            g(-1, 0)
        );
        let err = h.evaluate(&WordPair::empty(3, 2)).unwrap_err();
        assert!(matches!(err, RecError::AlphabetMismatch { .. }));
    }

    #[test]
    fn unfold_examples() {
        let h = h();
        assert_eq!(h.unfold(0), DenseMatrix::from_rows(vec![vec![g(1, 0)]]));
        assert_eq!(
            h.unfold(1),
            DenseMatrix::from_rows(vec![vec![g(1, 0), g(0, 1)], vec![g(0, 1), g(0, 1)]])
        );
        let l = builtin("L").unwrap();
        assert_eq!(
            l.unfold(1),
            DenseMatrix::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(0, 1), g(1, 0)]])
        );
        let d = builtin("D").unwrap();
        assert_eq!(d.unfold(1), DenseMatrix::diagonal_from(&[g(1, 0), g(1, 1)]));
    }

    #[test]
    fn evaluate_matches_unfold() {
        let l = builtin("L").unwrap();
        for n in 0..=3 {
            let u = l.unfold(n);
            for wp in WordPair::all_of_length(2, 2, n) {
                let (r, c) = wp.to_indices();
                assert_eq!(l.evaluate(&wp).unwrap(), u[(r, c)]);
            }
        }
    }

    #[test]
    fn rejects_malformed() {
        let err = Presentation::new(2, 2, vec!["a".into()], vec![g(1, 0)], vec![]).unwrap_err();
        assert!(matches!(err, RecError::InvalidPresentation(_)));
        let shifts = vec![DenseMatrix::zeros(2, 2); 4];
        assert!(Presentation::unlabeled(2, 2, vec![g(1, 0)], shifts).is_err());
    }

    #[test]
    fn zero_dim_is_zero_function() {
        let z = Presentation::zero(2, 3);
        assert!(z.unfold(2).is_zero());
        assert_eq!(z.unfold(2).shape(), (4, 9));
        assert_eq!(z.evaluate(&WordPair::empty(2, 3)).unwrap(), g(0, 0));
    }
}

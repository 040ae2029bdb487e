//! Minimal presentations and saturation.
//!
//! `minimize` works in the coordinates of a presentation. The forward span
//! is the smallest shift-invariant subspace containing generator 0; the
//! observation span is generated by the row functional of initial values
//! under right multiplication by shift matrices (the row for `(Us, Wt)` is
//! the row for `(U, W)` times `shift(s, t)`). Both orbits stabilise after at
//! most `dim` rounds because the kernels of successive restrictions form a
//! decreasing chain that is constant once two consecutive terms agree.
//! Quotienting the forward span by the common kernel of the observations
//! leaves a basis of the recursive closure.

use super::{Presentation, WordPair};
use crate::exactnum::GaussianRational;
use crate::linalg::DenseMatrix;

/// Incrementally maintained basis with a reduced copy for membership tests.
struct SpanBuilder {
    reduced: Vec<(usize, Vec<GaussianRational>)>,
    originals: Vec<Vec<GaussianRational>>,
}

impl SpanBuilder {
    fn new() -> Self {
        SpanBuilder {
            reduced: Vec::new(),
            originals: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Adds `v` if it is independent of the current basis.
    fn insert(&mut self, v: Vec<GaussianRational>) -> bool {
        let mut w = v.clone();
        for (pivot, b) in &self.reduced {
            if w[*pivot].is_zero() {
                continue;
            }
            let f = w[*pivot].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pivot].inv().expect("nonzero pivot");
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.reduced.push((pivot, w));
        self.originals.push(v);
        true
    }
}

/// Orbit closure of `start` under `step`, returned as independent vectors
/// with the surviving members of `start` first.
fn orbit_span(
    start: Vec<Vec<GaussianRational>>,
    maps: &[DenseMatrix],
    step: impl Fn(&DenseMatrix, &[GaussianRational]) -> Vec<GaussianRational>,
) -> Vec<Vec<GaussianRational>> {
    let mut span = SpanBuilder::new();
    let mut frontier = Vec::new();
    for v in start {
        if span.insert(v.clone()) {
            frontier.push(v);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for m in maps {
                let w = step(m, v);
                if span.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    span.originals
}

fn columns_to_matrix(rows: usize, cols: &[Vec<GaussianRational>]) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
}

/// Coordinates with respect to the columns of a full-column-rank matrix,
/// for vectors known to lie in its span.
struct Coordinates {
    rows: Vec<usize>,
    inv: DenseMatrix,
}

impl Coordinates {
    fn new(basis: &DenseMatrix) -> Self {
        let rows = basis.transpose().rref().pivot_cols;
        let square =
            DenseMatrix::from_fn(rows.len(), basis.cols(), |r, c| basis[(rows[r], c)].clone());
        let inv = square
            .inverse()
            .expect("square")
            .expect("independent columns");
        Coordinates { rows, inv }
    }

    fn of(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        let picked: Vec<_> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inv.mul_vec(&picked)
    }
}

/// Restriction of `p` to the smallest shift-invariant subspace containing
/// generator 0, which stays generator 0.
fn restrict_to_forward_span(p: &Presentation) -> Presentation {
    let dim = p.dim();
    let mut e0 = vec![GaussianRational::zero(); dim];
    e0[0] = GaussianRational::one();
    let span = orbit_span(vec![e0], p.shifts(), |m, v| m.mul_vec(v));
    let basis = columns_to_matrix(dim, &span);
    let coords = Coordinates::new(&basis);
    let shifts = p
        .shifts()
        .iter()
        .map(|s| {
            let images: Vec<_> = span.iter().map(|b| coords.of(&s.mul_vec(b))).collect();
            columns_to_matrix(span.len(), &images)
        })
        .collect();
    let init = basis.vec_mul(p.init());
    Presentation::unlabeled(p.p(), p.q(), init, shifts).expect("consistent shapes")
}

/// Reduced row-echelon basis (nonzero rows only) of the observation span.
pub fn observation_space(p: &Presentation) -> DenseMatrix {
    if p.dim() == 0 {
        return DenseMatrix::zeros(0, 0);
    }
    let rows = orbit_span(vec![p.init().to_vec()], p.shifts(), |m, v| m.vec_mul(v));
    let rr = DenseMatrix::from_rows(rows).rref();
    DenseMatrix::from_fn(rr.rank, p.dim(), |r, c| rr.matrix[(r, c)].clone())
}

/// A presentation of the same function whose dimension is its complexity.
pub fn minimize(p: &Presentation) -> Presentation {
    if p.dim() == 0 {
        return Presentation::zero(p.p(), p.q());
    }
    let forward = restrict_to_forward_span(p);
    let obs = observation_space(&forward);
    let rank = obs.rows();
    if rank == 0 {
        return Presentation::zero(p.p(), p.q());
    }
    // obs is in rref, so its pivot columns give a right inverse.
    let pivots = obs.rref().pivot_cols;
    let right_inv = DenseMatrix::from_fn(forward.dim(), rank, |r, c| {
        if pivots[c] == r {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    });
    let shifts = forward
        .shifts()
        .iter()
        .map(|s| obs.mul(&s.mul(&right_inv).unwrap()).unwrap())
        .collect();
    let init = right_inv.vec_mul(forward.init());
    // column 0 of an rref matrix is either zero or the first unit vector,
    // and it is nonzero here since generator 0 spans the forward orbit
    debug_assert!(obs[(0, 0)].is_one());
    let mut labels = vec![p.labels()[0].clone()];
    labels.extend((2..=rank).map(|k| format!("{}_{k}", p.labels()[0])));
    Presentation::new(p.p(), p.q(), labels, init, shifts).expect("consistent shapes")
}

/// Dimension of the recursive closure of the represented function.
pub fn complexity(p: &Presentation) -> usize {
    minimize(p).dim()
}

/// Generator values at every word pair of length at most `depth`, one row
/// per word pair, shortest words first.
pub fn restriction_matrix(p: &Presentation, depth: usize) -> DenseMatrix {
    let rows: Vec<Vec<GaussianRational>> = (0..=depth).flat_map(|n| p.layer(n)).collect();
    DenseMatrix::from_fn(rows.len(), p.dim(), |r, c| rows[r][c].clone())
}

/// Smallest `N ≤ cap` such that restricting the span of the generators to
/// word pairs of length `≤ N + 1` gives the same dimension as length `≤ N`.
///
/// Enumerates all `(pq)^ℓ` word pairs of each length, so only for small caps.
pub fn saturation_level(p: &Presentation, cap: usize) -> Option<usize> {
    let mut span = SpanBuilder::new();
    let mut prev_rank = None;
    for n in 0..=cap + 1 {
        if span.rank() < p.dim() {
            for v in p.layer(n) {
                span.insert(v);
            }
        }
        let rank = span.rank();
        if prev_rank == Some(rank) {
            return Some(n - 1);
        }
        prev_rank = Some(rank);
    }
    None
}

/// Rank of the block `[f(US, WT)]` with shift words `(S, T)` as rows and
/// evaluation words `(U, W)` as columns, both of length at most `depth`.
///
/// For a recurrence matrix this is bounded by its complexity at every depth.
pub fn shift_hankel_rank(
    p: usize,
    q: usize,
    depth: usize,
    f: impl Fn(&WordPair) -> GaussianRational,
) -> usize {
    let words: Vec<WordPair> = (0..=depth)
        .flat_map(|n| WordPair::all_of_length(p, q, n))
        .collect();
    let mut span = SpanBuilder::new();
    for shift in &words {
        let row = words.iter().map(|w| f(&w.concat(shift))).collect();
        span.insert(row);
    }
    span.rank()
}

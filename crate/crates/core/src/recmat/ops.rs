//! Sum, scaling, the matrix, entrywise and convolution products, and transpose.
//!
//! None of these minimize their result.

use super::{Presentation, RecError};
use crate::exactnum::GaussianRational;
use crate::linalg::DenseMatrix;

fn same_shape(a: &Presentation, b: &Presentation) -> Result<(), RecError> {
    if a.alphabets() != b.alphabets() {
        return Err(RecError::AlphabetMismatch {
            expected: a.alphabets(),
            got: b.alphabets(),
        });
    }
    Ok(())
}

fn kron_vec(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

fn pair_labels(a: &Presentation, b: &Presentation, op: &str) -> Vec<String> {
    a.labels()
        .iter()
        .flat_map(|la| b.labels().iter().map(move |lb| format!("{la}{op}{lb}")))
        .collect()
}

/// Re-expresses a presentation in the basis given by the columns of `basis`
/// (coordinates in the old basis). `basis` must be invertible.
pub(crate) fn change_basis(
    p: &Presentation,
    basis: &DenseMatrix,
    labels: Vec<String>,
) -> Presentation {
    let inv = basis
        .inverse()
        .expect("square basis")
        .expect("invertible basis");
    let init = basis.vec_mul(p.init());
    let shifts = p
        .shifts()
        .iter()
        .map(|s| inv.mul(&s.mul(basis).unwrap()).unwrap())
        .collect();
    Presentation::new(p.p(), p.q(), labels, init, shifts).expect("shapes preserved")
}

/// Matrix product `(A·B)[U, W] = Σ_V A[U, V] B[V, W]`.
///
/// Generators are the formal products `A_i·B_j`, index `i * dim(B) + j`, and
/// `shift(s, t) = Σ_v shift_A(s, v) ⊗ shift_B(v, t)`.
pub fn rec_product(a: &Presentation, b: &Presentation) -> Result<Presentation, RecError> {
    if a.q() != b.p() {
        return Err(RecError::InnerAlphabetMismatch {
            left_q: a.q(),
            right_p: b.p(),
        });
    }
    let (p, r, q) = (a.p(), a.q(), b.q());
    if a.dim() == 0 || b.dim() == 0 {
        return Ok(Presentation::zero(p, q));
    }
    let dim = a.dim() * b.dim();
    let mut shifts = Vec::with_capacity(p * q);
    for s in 0..p {
        for t in 0..q {
            let mut acc = DenseMatrix::zeros(dim, dim);
            for v in 0..r {
                acc = acc.add(&a.shift(s, v).kronecker(b.shift(v, t))).unwrap();
            }
            shifts.push(acc);
        }
    }
    Presentation::new(
        p,
        q,
        pair_labels(a, b, "."),
        kron_vec(a.init(), b.init()),
        shifts,
    )
}

/// Entrywise product `A[U, W]·B[U, W]`.
pub fn rec_hadamard(a: &Presentation, b: &Presentation) -> Result<Presentation, RecError> {
    same_shape(a, b)?;
    if a.dim() == 0 || b.dim() == 0 {
        return Ok(Presentation::zero(a.p(), a.q()));
    }
    let shifts = a
        .shifts()
        .iter()
        .zip(b.shifts())
        .map(|(x, y)| x.kronecker(y))
        .collect();
    Presentation::new(
        a.p(),
        a.q(),
        pair_labels(a, b, "&"),
        kron_vec(a.init(), b.init()),
        shifts,
    )
}

/// Direct sum of the two bases, with generator 0 replaced by `A_1 + B_1`.
pub fn rec_sum(a: &Presentation, b: &Presentation) -> Result<Presentation, RecError> {
    same_shape(a, b)?;
    if a.dim() == 0 {
        return Ok(b.clone());
    }
    if b.dim() == 0 {
        return Ok(a.clone());
    }
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let block = |x: &DenseMatrix, y: &DenseMatrix| {
        DenseMatrix::from_fn(dim, dim, |r, c| match (r < da, c < da) {
            (true, true) => x[(r, c)].clone(),
            (false, false) => y[(r - da, c - da)].clone(),
            _ => GaussianRational::zero(),
        })
    };
    let shifts = a
        .shifts()
        .iter()
        .zip(b.shifts())
        .map(|(x, y)| block(x, y))
        .collect();
    let mut init = a.init().to_vec();
    init.extend_from_slice(b.init());
    let direct = Presentation::new(a.p(), a.q(), vec![String::new(); dim], init, shifts)?;

    let mut basis = DenseMatrix::identity(dim);
    basis[(da, 0)] = GaussianRational::one();
    let mut labels = vec![format!("{}+{}", a.labels()[0], b.labels()[0])];
    labels.extend(a.labels()[1..].iter().cloned());
    labels.extend(b.labels().iter().cloned());
    Ok(change_basis(&direct, &basis, labels))
}

/// `c·A`.
pub fn rec_scale(c: &GaussianRational, a: &Presentation) -> Presentation {
    let init = a.init().iter().map(|x| x * c).collect();
    Presentation::new(a.p(), a.q(), a.labels().to_vec(), init, a.shifts().to_vec())
        .expect("shape unchanged")
}

/// Convolution `(A*B)[U, W] = Σ A[U₁, W₁]·B[U₂, W₂]` over all splittings
/// `(U, W) = (U₁, W₁)(U₂, W₂)`.
///
/// Generators are `A_i*B_j` (index `i * dim(B) + j`) followed by the `A_i`,
/// using `ρ(s,t)(A*B) = (ρ(s,t)A)·B[∅,∅] + A*(ρ(s,t)B)`.
pub fn rec_convolution(a: &Presentation, b: &Presentation) -> Result<Presentation, RecError> {
    same_shape(a, b)?;
    if a.dim() == 0 || b.dim() == 0 {
        return Ok(Presentation::zero(a.p(), a.q()));
    }
    let (da, db) = (a.dim(), b.dim());
    let prod = da * db;
    let dim = prod + da;
    let shifts = a
        .shifts()
        .iter()
        .zip(b.shifts())
        .map(|(sa, sb)| {
            let mut m = DenseMatrix::zeros(dim, dim);
            for i in 0..da {
                for j in 0..db {
                    let col = i * db + j;
                    // A_i * (ρB_j)
                    for l in 0..db {
                        m[(i * db + l, col)] = sb[(l, j)].clone();
                    }
                    // (ρA_i)·B_j[∅,∅]
                    for k in 0..da {
                        m[(prod + k, col)] = &sa[(k, i)] * &b.init()[j];
                    }
                }
                for k in 0..da {
                    m[(prod + k, prod + i)] = sa[(k, i)].clone();
                }
            }
            m
        })
        .collect();
    let mut init = kron_vec(a.init(), b.init());
    init.extend_from_slice(a.init());
    let mut labels = pair_labels(a, b, "*");
    labels.extend(a.labels().iter().cloned());
    Presentation::new(a.p(), a.q(), labels, init, shifts)
}

/// `Aᵗ[V, W] = A[W, V]`.
pub fn rec_transpose(a: &Presentation) -> Presentation {
    let (p, q) = (a.q(), a.p());
    let mut shifts = Vec::with_capacity(p * q);
    for s in 0..p {
        for t in 0..q {
            shifts.push(a.shift(t, s).clone());
        }
    }
    let labels = a.labels().iter().map(|l| format!("{l}'")).collect();
    Presentation::new(p, q, labels, a.init().to_vec(), shifts).expect("shape preserved")
}

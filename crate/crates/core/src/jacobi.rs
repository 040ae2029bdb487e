//! Jacobi continued fractions
//!
//! ```text
//! c_0 / (1 - u_0 x - v_1 x² / (1 - u_1 x - v_2 x² / (1 - …)))
//! ```
//!
//! computed from moment sequences with the modified Chebyshev recurrence on
//! mixed moments `σ_{k,l}`, plus the closed rules for the Thue-Morse moments
//! `i^τ(n)`.

use crate::exactnum::GaussianRational;
use crate::thuemorse::SeriesTruncation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JacobiError {
    #[error("depth {depth} needs {needed} moments, got {got}")]
    InsufficientMoments {
        depth: usize,
        needed: usize,
        got: usize,
    },
    /// The Hankel determinant of this order vanishes.
    #[error("degenerate at level {level}: Hankel determinant of order {level} is zero")]
    Degenerate { level: usize },
    #[error("re-expanded continued fraction differs from the moments at x^{order}")]
    ExpansionMismatch { order: usize },
    #[error("v is indexed from 1")]
    ZeroIndex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFraction {
    /// `c_0`, the numerator of the outermost level.
    pub scale: GaussianRational,
    /// `u_0, u_1, …`
    pub u: Vec<GaussianRational>,
    /// `v_1, v_2, …`; `v[k]` holds `v_{k+1}`.
    pub v: Vec<GaussianRational>,
}

impl JFraction {
    pub fn depth(&self) -> usize {
        self.v.len()
    }

    /// `v_n` for `n ≥ 1`.
    pub fn v_at(&self, n: usize) -> Option<&GaussianRational> {
        n.checked_sub(1).and_then(|k| self.v.get(k))
    }

    /// Power-series coefficients `c_0 … c_{count-1}`, summing weighted
    /// Motzkin paths: up steps weigh 1, level steps at height `k` weigh
    /// `u_k`, down steps from height `k` weigh `v_k`.
    ///
    /// Exact for `count ≤ 2·depth + 1`.
    pub fn moments(&self, count: usize) -> Vec<GaussianRational> {
        let height = self.depth() + 1;
        let mut paths = vec![GaussianRational::zero(); height + 1];
        paths[0] = GaussianRational::one();
        let mut out = Vec::with_capacity(count);
        for n in 0..count {
            out.push(&paths[0] * &self.scale);
            if n + 1 == count {
                break;
            }
            let mut next = vec![GaussianRational::zero(); height + 1];
            for (k, slot) in next.iter_mut().enumerate().take(height) {
                let mut acc = GaussianRational::zero();
                if k > 0 && !paths[k - 1].is_zero() {
                    acc += &paths[k - 1];
                }
                if let Some(u) = self.u.get(k) {
                    if !paths[k].is_zero() {
                        acc += u * &paths[k];
                    }
                }
                if let Some(v) = self.v.get(k) {
                    if !paths[k + 1].is_zero() {
                        acc += v * &paths[k + 1];
                    }
                }
                *slot = acc;
            }
            paths = next;
        }
        out
    }

    /// Expands the fraction from the innermost level outward as a truncated
    /// power series, with the tail below the last `v` taken as 1.
    pub fn series(&self, order: usize) -> SeriesTruncation {
        let mut tail = SeriesTruncation::one(order);
        let x = |k: usize, c: &GaussianRational| {
            let mut terms = vec![GaussianRational::zero(); k + 1];
            terms[k] = c.clone();
            SeriesTruncation::polynomial(&terms, order)
        };
        for level in (0..self.depth()).rev() {
            let u = self
                .u
                .get(level)
                .cloned()
                .unwrap_or_else(GaussianRational::zero);
            let denom = SeriesTruncation::one(order)
                .sub(&x(1, &u))
                .sub(&x(2, &self.v[level]).mul(&tail));
            tail = denom.inverse().expect("constant term is 1");
        }
        tail.scale(&self.scale)
    }
}

/// Coefficients of the J-fraction matching `Σ c_n x^n` through `x^{2·depth}`:
/// `u_0 … u_{depth-1}` and `v_1 … v_depth`.
///
/// Mixed moments follow `σ_{-1,l} = 0`, `σ_{0,l} = c_l` and
/// `σ_{k,l} = σ_{k-1,l+1} - u_{k-1}σ_{k-1,l} - v_{k-1}σ_{k-2,l}`, with
/// `u_k = σ_{k,k+1}/σ_{k,k} - σ_{k-1,k}/σ_{k-1,k-1}` and
/// `v_k = σ_{k,k}/σ_{k-1,k-1}`.
pub fn jfraction_from_moments(
    moments: &[GaussianRational],
    depth: usize,
) -> Result<JFraction, JacobiError> {
    let needed = 2 * depth + 1;
    if moments.len() < needed {
        return Err(JacobiError::InsufficientMoments {
            depth,
            needed,
            got: moments.len(),
        });
    }
    let c = &moments[..needed];
    if c[0].is_zero() {
        return Err(JacobiError::Degenerate { level: 1 });
    }
    let mut u = Vec::with_capacity(depth);
    let mut v = Vec::with_capacity(depth);
    let mut older = vec![GaussianRational::zero(); needed];
    let mut prev = c.to_vec();
    // v_0 multiplies σ_{-1,l} = 0, so its value is irrelevant
    let mut v_prev = GaussianRational::zero();
    if depth > 0 {
        u.push(c[1].checked_div(&c[0]).expect("nonzero"));
    }
    for k in 1..=depth {
        let u_prev = &u[k - 1];
        let mut cur = vec![GaussianRational::zero(); needed];
        for l in k..=2 * depth - k {
            let mut x = prev[l + 1].clone();
            if !prev[l].is_zero() {
                x -= u_prev * &prev[l];
            }
            if !older[l].is_zero() {
                x -= &v_prev * &older[l];
            }
            cur[l] = x;
        }
        if cur[k].is_zero() {
            return Err(JacobiError::Degenerate { level: k + 1 });
        }
        let vk = cur[k].checked_div(&prev[k - 1]).expect("nonzero");
        if k < depth {
            let a = cur[k + 1].checked_div(&cur[k]).expect("nonzero");
            let b = prev[k].checked_div(&prev[k - 1]).expect("nonzero");
            u.push(a - b);
        }
        v.push(vk.clone());
        v_prev = vk;
        older = prev;
        prev = cur;
    }
    let jf = JFraction {
        scale: c[0].clone(),
        u,
        v,
    };
    let back = jf.moments(needed);
    if let Some(order) = (0..needed).find(|&n| back[n] != c[n]) {
        return Err(JacobiError::ExpansionMismatch { order });
    }
    Ok(jf)
}

/// `(-1)^n i`.
pub fn u_rule(n: usize) -> GaussianRational {
    GaussianRational::from_ints(0, if n.is_multiple_of(2) { 1 } else { -1 })
}

/// Closed rule for `v_n` of the Thue-Morse moments: a table for `n < 8`;
/// for `n = 2^l + a` with `0 ≤ a < 2^l`, `l ≥ 3`, `v_n = i` when
/// `a ∈ {0, 2^{l-1} + 1}`, `v_n = 1` when `a ∈ {1, 2^{l-1}}`, and
/// `v_n = v_a` otherwise.
pub fn v_rule(n: usize) -> Result<GaussianRational, JacobiError> {
    const TABLE: [(i64, i64); 7] = [(1, 1), (1, 0), (0, -1), (0, 1), (1, 0), (0, -1), (1, 0)];
    if n == 0 {
        return Err(JacobiError::ZeroIndex);
    }
    let mut n = n;
    loop {
        if n < 8 {
            let (re, im) = TABLE[n - 1];
            return Ok(GaussianRational::from_ints(re, im));
        }
        let l = usize::BITS as usize - 1 - n.leading_zeros() as usize;
        let half = 1usize << (l - 1);
        let a = n - (1usize << l);
        if a == 0 || a == half + 1 {
            return Ok(GaussianRational::i());
        }
        if a == 1 || a == half {
            return Ok(GaussianRational::one());
        }
        n = a;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioRow {
    pub n: usize,
    pub expected: GaussianRational,
    pub computed: GaussianRational,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    pub rows: Vec<RatioRow>,
    pub first_failure: Option<usize>,
}

impl RatioReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `v_n = Δ_{n-1}·Δ_{n+1}/Δ_n²` where `dets[n] = Δ_n` is the order-`n`
/// Hankel determinant (`dets[0] = 1`), for every `n` both sides cover.
pub fn hankel_ratio_check(
    dets: &[GaussianRational],
    jf: &JFraction,
) -> Result<RatioReport, JacobiError> {
    let last = jf.depth().min(dets.len().saturating_sub(2));
    if let Some(n) = (1..=last).find(|&n| dets[n].is_zero()) {
        return Err(JacobiError::Degenerate { level: n });
    }
    let rows: Vec<RatioRow> = (1..=last)
        .map(|n| {
            let expected = (&dets[n - 1] * &dets[n + 1])
                .checked_div(&(&dets[n] * &dets[n]))
                .expect("nonzero");
            let computed = jf.v[n - 1].clone();
            let ok = expected == computed;
            RatioRow {
                n,
                expected,
                computed,
                ok,
            }
        })
        .collect();
    let first_failure = rows.iter().find(|r| !r.ok).map(|r| r.n);
    Ok(RatioReport {
        rows,
        first_failure,
    })
}

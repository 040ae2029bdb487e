//! The verification tables and the presentation calculator behind each
//! subcommand.

use std::path::Path;

use tmrec::jacobi::{u_rule, v_rule};
use tmrec::recmat::{
    builtin, from_json, minimize, rec_convolution, rec_hadamard, rec_product, rec_sum,
    rec_transpose, to_json, BUILTIN_NAMES,
};
use tmrec::thuemorse::{
    beta_coeffs, fold, gamma_coeffs, hankel, hankel_determinants, i_tau, series_product, tau,
};
use tmrec::{
    jfraction_from_moments, DenseMatrix, GaussianRational, JacobiError, Presentation, RecError,
    SignSequence, WordPair,
};

use crate::report::VerificationReport;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{context}: {source}")]
    Presentation { context: String, source: RecError },
    #[error(transparent)]
    Rec(#[from] RecError),
    #[error(transparent)]
    Jacobi(#[from] JacobiError),
    #[error("{0}")]
    Usage(String),
}

pub const MAX_LU_DEPTH: usize = 8;

/// `det H(n+1)` against `∏_{k≤n} (1 + i f(k))` for `0 ≤ n ≤ max_n`.
pub fn cmd_verify_det(max_n: usize, sigma: &SignSequence) -> VerificationReport {
    let coeffs = series_product(sigma, 2 * max_n).into_coefficients();
    let dets = hankel_determinants(&coeffs, 0, max_n + 1);
    let mut report = VerificationReport::new(&["n", "det", "product"]);
    let mut product = GaussianRational::one();
    for n in 0..=max_n {
        if n > 0 {
            let f = fold(n as u64, sigma).expect("n >= 1");
            product *= &GaussianRational::from_ints(1, i64::from(f));
        }
        let det = &dets[n + 1];
        report.push(
            vec![n.to_string(), det.to_string(), product.to_string()],
            *det == product,
        );
    }
    report
}

fn first_difference(a: &DenseMatrix, b: &DenseMatrix) -> String {
    if a.shape() != b.shape() {
        return format!("shape {:?}", a.shape());
    }
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if a[(r, c)] != b[(r, c)] {
                return format!("differs at ({r} {c})");
            }
        }
    }
    "equal".into()
}

/// LU factorization of the unfolded Thue-Morse Hankel matrices.
pub fn cmd_verify_lu(depth: usize) -> Result<VerificationReport, CliError> {
    if depth > MAX_LU_DEPTH {
        return Err(CliError::Usage(format!(
            "--depth {depth} is above the supported maximum {MAX_LU_DEPTH}"
        )));
    }
    let (l, d, u, h) = (builtin("L")?, builtin("D")?, builtin("U")?, builtin("H")?);
    let mut report = VerificationReport::new(&["n", "check", "computed", "expected"]);
    let mut folding = GaussianRational::one();
    let mut folded_to = 0u64;
    let sigma = SignSequence::regular();
    for n in 0..=depth {
        let size = 1usize << n;
        let (ul, ud, uu, uh) = (l.unfold(n), d.unfold(n), u.unfold(n), h.unfold(n));
        let tm = hankel(|k| i_tau(k as u64), 0, size);
        let lu = ul.mul(&uu).expect("square factors");
        let mut check = |name: &str, computed: String, expected: String| {
            let ok = computed == expected;
            report.push(vec![n.to_string(), name.into(), computed, expected], ok);
        };
        check("product", first_difference(&lu, &uh), "equal".into());
        check("hankel", first_difference(&uh, &tm), "equal".into());
        let shape = |ok: bool, name: &str| {
            if ok {
                name.to_string()
            } else {
                format!("not {name}")
            }
        };
        check(
            "lower",
            shape(ul.is_unit_lower_triangular(), "unit lower"),
            "unit lower".into(),
        );
        check(
            "diagonal",
            shape(ud.is_diagonal(), "diagonal"),
            "diagonal".into(),
        );
        check(
            "upper",
            shape(uu.is_upper_triangular(), "upper"),
            "upper".into(),
        );
        let diag: GaussianRational = ud.diagonal().into_iter().product();
        let det = tm.det_bareiss().expect("square");
        while folded_to + 1 < size as u64 {
            folded_to += 1;
            let f = fold(folded_to, &sigma).expect("k >= 1");
            folding *= &GaussianRational::from_ints(1, i64::from(f));
        }
        check("diag_product", diag.to_string(), det.to_string());
        check("det", det.to_string(), folding.to_string());
    }
    Ok(report)
}

/// J-fraction coefficients of `Σ i^τ(n) x^n` against the closed rules, for
/// `0 ≤ n ≤ count` (`v_0` does not exist and is left blank).
pub fn cmd_jfraction(count: usize) -> Result<VerificationReport, CliError> {
    let depth = count + 1;
    let moments: Vec<_> = (0..=2 * depth as u64).map(i_tau).collect();
    let jf = jfraction_from_moments(&moments, depth)?;
    let mut report =
        VerificationReport::new(&["n", "u_computed", "u_formula", "v_computed", "v_formula"]);
    for n in 0..=count {
        let (u, uf) = (&jf.u[n], u_rule(n));
        let mut ok = *u == uf;
        let (v, vf) = if n == 0 {
            (String::new(), String::new())
        } else {
            let (v, vf) = (jf.v_at(n).expect("within depth"), v_rule(n)?);
            ok &= *v == vf;
            (v.to_string(), vf.to_string())
        };
        report.push(
            vec![n.to_string(), u.to_string(), uf.to_string(), v, vf],
            ok,
        );
    }
    Ok(report)
}

fn unit_hankel_report(
    coeffs: &[GaussianRational],
    offset: usize,
    max_order: usize,
) -> VerificationReport {
    let dets = hankel_determinants(coeffs, offset, max_order);
    let mut report = VerificationReport::new(&["order", "det", "expected"]);
    for (order, det) in dets.iter().enumerate().skip(1) {
        report.push(
            vec![order.to_string(), det.to_string(), "unit".into()],
            det.is_unit(),
        );
    }
    report
}

/// Hankel determinants of `(β_{offset+s+t})` for orders `1..=max_order`;
/// each should be one of `±1, ±i`.
pub fn cmd_beta_hankel(max_order: usize, offset: usize) -> VerificationReport {
    let coeffs = beta_coeffs(offset + 2 * max_order).into_coefficients();
    unit_hankel_report(&coeffs, offset, max_order)
}

pub fn cmd_gamma_hankel(max_order: usize, offset: usize) -> VerificationReport {
    let coeffs = gamma_coeffs(offset + 2 * max_order).into_coefficients();
    unit_hankel_report(&coeffs, offset, max_order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    Tau,
    Moments,
    Fold,
    Beta,
    Gamma,
}

/// `n,value` rows up to `max_n`, starting at the first index where the
/// sequence is defined.
pub fn sequence_table(kind: Sequence, max_n: usize, sigma: &SignSequence) -> String {
    let values: Vec<(usize, String)> = match kind {
        Sequence::Tau => (0..=max_n)
            .map(|n| (n, tau(n as u64).to_string()))
            .collect(),
        Sequence::Moments => series_product(sigma, max_n)
            .coefficients()
            .iter()
            .enumerate()
            .map(|(n, x)| (n, x.to_string()))
            .collect(),
        Sequence::Fold => (1..=max_n)
            .map(|n| (n, fold(n as u64, sigma).expect("n >= 1").to_string()))
            .collect(),
        Sequence::Beta => {
            let b = beta_coeffs(max_n);
            (1..=max_n)
                .map(|n| (n, b.coefficient(n).to_string()))
                .collect()
        }
        Sequence::Gamma => {
            let c = gamma_coeffs(max_n);
            (2..=max_n)
                .map(|n| (n, c.coefficient(n).to_string()))
                .collect()
        }
    };
    let mut out = String::from("n,value\n");
    for (n, v) in values {
        out.push_str(&format!("{n},{v}\n"));
    }
    out
}

/// A presentation file path, or a built-in name when no such file exists.
pub fn load_presentation(arg: &str) -> Result<Presentation, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: arg.into(),
            source,
        })?;
        return from_json(&text).map_err(|source| CliError::Presentation {
            context: arg.into(),
            source,
        });
    }
    builtin(arg).map_err(|_| {
        CliError::Usage(format!(
            "{arg:?} is neither a file nor a builtin ({})",
            BUILTIN_NAMES.join(", ")
        ))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Sum,
    Product,
    Hadamard,
    Convolve,
}

pub fn recmat_eval(
    p: &Presentation,
    row: &str,
    col: &str,
    format: Format,
) -> Result<String, CliError> {
    let wp = WordPair::parse(p.p(), p.q(), row, col)?;
    let value = p.evaluate(&wp)?.to_string();
    Ok(match format {
        Format::Csv => format!("{value}\n"),
        Format::Json => format!("{}\n", serde_json::Value::String(value)),
    })
}

pub fn recmat_unfold(p: &Presentation, depth: usize, format: Format) -> String {
    let m = p.unfold(depth);
    match format {
        Format::Csv => m.to_csv(),
        Format::Json => {
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|r| m.row(r).iter().map(ToString::to_string).collect())
                .collect();
            format!("{}\n", serde_json::to_string(&rows).expect("strings"))
        }
    }
}

pub fn recmat_binary(
    op: BinaryOp,
    a: &Presentation,
    b: &Presentation,
) -> Result<Presentation, CliError> {
    Ok(match op {
        BinaryOp::Sum => rec_sum(a, b)?,
        BinaryOp::Product => rec_product(a, b)?,
        BinaryOp::Hadamard => rec_hadamard(a, b)?,
        BinaryOp::Convolve => rec_convolution(a, b)?,
    })
}

pub fn recmat_transpose(a: &Presentation) -> Presentation {
    rec_transpose(a)
}

pub fn recmat_minimize(a: &Presentation) -> Presentation {
    minimize(a)
}

/// `init,…` followed by one `shift,s,t,row,…` line per shift-matrix row.
pub fn presentation_csv(p: &Presentation) -> String {
    let join = |xs: &[GaussianRational]| {
        xs.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = format!("labels,{}\n", p.labels().join(","));
    out.push_str(&format!("init,{}\n", join(p.init())));
    for s in 0..p.p() {
        for t in 0..p.q() {
            let m = p.shift(s, t);
            for r in 0..m.rows() {
                out.push_str(&format!("shift,{s},{t},{r},{}\n", join(m.row(r))));
            }
        }
    }
    out
}

pub fn render_presentation(p: &Presentation, format: Format) -> String {
    match format {
        Format::Json => to_json(p),
        Format::Csv => presentation_csv(p),
    }
}

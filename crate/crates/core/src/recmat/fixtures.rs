//! Built-in presentations over the binary alphabet pair (p = q = 2).
//!
//! * `H`: the Thue-Morse Hankel function `H[U, W] = i^τ(u+w)`.
//! * `L`: unipotent lower triangular factor of `H`.
//! * `D`: diagonal factor; `U = D·Lᵗ` so that `H = L·U`.
//! * `I`: identity, `I[U, W] = 1` iff `U = W`.
//! * `E`: 1 at the empty pair and 0 elsewhere (unit for convolution).
//! * `ones`: constant 1 (unit for the entrywise product).
//! * `zero`: the zero function, dimension 0.
//! * `diag1plusn`: `A[U, U] = 1 + len(U)` and 0 off the diagonal; invertible
//!   as a matrix at every length although its inverse is not a recurrence
//!   matrix.

use super::{rec_product, rec_transpose, Presentation, RecError};
use crate::exactnum::GaussianRational;
use crate::linalg::DenseMatrix;

pub const BUILTIN_NAMES: &[&str] = &["H", "L", "D", "U", "I", "E", "ones", "zero", "diag1plusn"];

fn m(rows: &[&[&str]]) -> DenseMatrix {
    DenseMatrix::from_rows(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.parse().expect("fixture literal"))
                    .collect()
            })
            .collect(),
    )
}

fn v(xs: &[&str]) -> Vec<GaussianRational> {
    xs.iter()
        .map(|x| x.parse().expect("fixture literal"))
        .collect()
}

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Shift matrices in `(0,0), (0,1), (1,0), (1,1)` order.
fn binary(names: &[&str], init: &[&str], shifts: [DenseMatrix; 4]) -> Presentation {
    Presentation::new(2, 2, labels(names), v(init), shifts.into()).expect("fixture shapes")
}

fn thue_morse_hankel() -> Presentation {
    let mixed = m(&[&["0", "-i"], &["1", "1+i"]]);
    binary(
        &["H1", "H2"],
        &["1", "i"],
        [
            m(&[&["1", "i"], &["0", "0"]]),
            mixed.clone(),
            mixed,
            m(&[&["i", "i"], &["0", "0"]]),
        ],
    )
}

fn lower_factor() -> Presentation {
    let z = ["0", "0", "0", "0"];
    binary(
        &["L1", "L2", "L3", "L4"],
        &["1", "i", "1", "0"],
        [
            m(&[&["1", "i", "1", "0"], &z, &z, &z]),
            m(&[&z, &z, &z, &["0", "1", "0", "1"]]),
            m(&[&["0", "-i", "-1+i", "-i"], &["1", "1+i", "-i", "1"], &z, &z]),
            m(&[&z, &z, &["1", "1+i", "1", "i"], &["0", "i", "0", "i"]]),
        ],
    )
}

fn diagonal_factor() -> Presentation {
    let zero = DenseMatrix::zeros(3, 3);
    binary(
        &["D1", "D2", "D3"],
        &["1", "1+i", "1+i"],
        [
            m(&[&["1", "0", "0"], &["0", "0", "0"], &["0", "1", "1"]]),
            zero.clone(),
            zero,
            m(&[&["0", "2", "0"], &["1", "1", "1"], &["0", "-2", "0"]]),
        ],
    )
}

fn one_dim(name: &str, init: &str, shifts: [&str; 4]) -> Presentation {
    binary(&[name], &[init], shifts.map(|x| m(&[&[x]])))
}

pub fn builtin(name: &str) -> Result<Presentation, RecError> {
    Ok(match name {
        "H" => thue_morse_hankel(),
        "L" => lower_factor(),
        "D" => diagonal_factor(),
        "U" => {
            let u = rec_product(&diagonal_factor(), &rec_transpose(&lower_factor()))?;
            let names = (1..=u.dim()).map(|k| format!("U{k}")).collect();
            u.with_labels(names)?
        }
        "I" => one_dim("I", "1", ["1", "0", "0", "1"]),
        "E" => one_dim("E", "1", ["0", "0", "0", "0"]),
        "ones" => one_dim("J", "1", ["1", "1", "1", "1"]),
        "zero" => Presentation::zero(2, 2),
        "diag1plusn" => {
            // generators: A and the diagonal indicator; ρ(s,s)A = A + I
            let step = m(&[&["1", "0"], &["1", "1"]]);
            let off = DenseMatrix::zeros(2, 2);
            binary(
                &["A", "I"],
                &["1", "1"],
                [step.clone(), off.clone(), off, step],
            )
        }
        other => return Err(RecError::UnknownBuiltin(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recmat::WordPair;

    #[test]
    fn transcribed_values() {
        let h = builtin("H").unwrap();
        assert_eq!(h.init(), v(&["1", "i"]).as_slice());
        let d = builtin("D").unwrap();
        assert!(d.shift(0, 1).is_zero());
        assert!(d.shift(1, 0).is_zero());
        let l = builtin("L").unwrap();
        assert_eq!(l.init(), v(&["1", "i", "1", "0"]).as_slice());
        assert_eq!(d.init(), v(&["1", "1+i", "1+i"]).as_slice());
    }

    #[test]
    fn diag_fixture() {
        let a = builtin("diag1plusn").unwrap();
        let wp = WordPair::parse(2, 2, "11", "11").unwrap();
        assert_eq!(a.evaluate(&wp).unwrap(), GaussianRational::from(3));
        let off = WordPair::parse(2, 2, "10", "11").unwrap();
        assert!(a.evaluate(&off).unwrap().is_zero());
        assert_eq!(
            a.unfold(2),
            DenseMatrix::identity(4).scale(&GaussianRational::from(3))
        );
    }

    #[test]
    fn every_name_resolves() {
        for name in BUILTIN_NAMES {
            assert!(builtin(name).is_ok(), "{name}");
        }
        assert_eq!(builtin("Q"), Err(RecError::UnknownBuiltin("Q".into())));
    }
}

//! Exact calculus of recurrence matrices over Q(i), and the Thue-Morse
//! Hankel determinants it computes.
//!
//! * [`exactnum`]: rationals and Gaussian rationals with a canonical text form.
//! * [`linalg`]: dense exact matrices, elimination and two determinant routes.
//! * [`recmat`]: presentations of recurrence matrices and their operations.
//! * [`thuemorse`]: `τ`, folding sequences, truncated series, Hankel builders.
//! * [`jacobi`]: Jacobi continued fractions from moments.

pub mod exactnum;
pub mod jacobi;
pub mod linalg;
pub mod recmat;
pub mod thuemorse;

pub use exactnum::{ArithError, ArithOp, GaussianRational, ParseError, Rational};
pub use jacobi::{jfraction_from_moments, JFraction, JacobiError};
pub use linalg::{DenseMatrix, LinalgError};
pub use recmat::{Presentation, RecError, WordPair};
pub use thuemorse::{SeriesTruncation, SignSequence};

//! Exact arithmetic for the one-parameter generalized Jacobsthal family.
//!
//! For an integer `k >= 2` the family consists of two sequences sharing the
//! recurrence `x(n) = (k - 1) x(n - 1) + k x(n - 2)`:
//!
//! * `J(k, n)` with `J(k, 0) = 0`, `J(k, 1) = 1`,
//! * `j(k, n)` with `j(k, 0) = j(k, 1) = 2`.
//!
//! The crate offers three independent evaluation strategies (linear
//! iteration, closed form with exact division, 2x2 matrix powering), a
//! generating-function expander, and a brute-force identity verifier that
//! runs both the published and the corrected form of each identity.
//!
//! ```
//! use jacobsthal::{eval_binet, eval_iter, eval_matrix, SequenceKind, SequenceParams};
//!
//! let params = SequenceParams::new(SequenceKind::Jacobsthal, 4).unwrap();
//! assert_eq!(eval_iter(&params, 7).to_string(), "3277");
//! assert_eq!(eval_binet(&params, 7), eval_matrix(&params, 7));
//! ```

mod error;
pub mod identities;
pub mod matrix;
pub mod sequence;
pub mod series;

pub use error::{Error, Result};
pub use identities::{
    IdentityForm, IdentityId, IdentityInstance, IdentityReport, Indices, Quantity, SweepConfig,
    SweepEntry, SweepReport,
};
pub use matrix::Mat2;
pub use sequence::{
    eval_binet, eval_iter, eval_matrix, initial_terms, prefix_sum, term_stream, EvalMethod,
    SequenceKind, SequenceParams, TermStream, TermWindow,
};
pub use series::{GfMatchReport, Poly, RationalGf};

pub use num_bigint::BigInt;

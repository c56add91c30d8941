//! Exact arithmetic for generalized polygonal numbers.
//!
//! The crate computes, entirely over arbitrary-precision rationals:
//!
//! * theta series of generalized s-gonal numbers, by direct enumeration and
//!   by the Jacobi triple product ([`polygonal`]);
//! * representation counts `t_{s,j}(n)` — ordered index tuples whose values
//!   sum to `n` — by convolution tables and by brute-force enumeration
//!   ([`repcount`]);
//! * weighted divisor sums over residue classes mod `s - 2` and their closed
//!   forms ([`divisorside`]);
//! * partial Bell polynomials and logarithmic polynomials ([`bell`]);
//! * truncated power series with exact log/exp ([`series`]);
//! * identity checks wiring all of the above together, with machine-readable
//!   reports ([`verify`]);
//! * cross-checks of computed sequences against OEIS-style b-files
//!   ([`crosscheck`]).
//!
//! The central identity family says that for `s >= 4` the weighted divisor
//! sum equals an alternating binomial combination of representation counts:
//!
//! `sum_{d|n} (1/d)((-1)^d delta1(n/d, s-2) + delta2(n/d, s-2))
//!    = sum_{j=1}^{n} ((-1)^j / j) C(n, j) t_{s,j}(n)`.
//!
//! Every identity is evaluated along at least two independent routes, so a
//! mismatch pins down a real counterexample rather than a coding slip.
//!
//! Start with the runnable examples (`cargo run --example verify_identities`)
//! or the `polyrep` binary for the command-line surface.

pub mod bell;
pub mod crosscheck;
pub mod divisorside;
pub mod error;
pub mod exactnum;
pub mod polygonal;
pub mod repcount;
pub mod series;
pub mod verify;

pub use crosscheck::{parse_bfile, BFileSequence, CrosscheckKind};
pub use error::{Error, Result};
pub use exactnum::{ExactInteger, ExactRational};
pub use polygonal::PolygonalSpec;
pub use repcount::{BruteForceLimits, RepTable};
pub use series::TruncatedSeries;
pub use verify::{
    CorollaryKind, IdentityName, IdentitySelection, SuiteConfig, SuiteOutcome, SuiteSummary,
    VerificationReport,
};

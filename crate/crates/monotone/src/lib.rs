//! Exact monotonicity analysis for rational matrices.
//!
//! A matrix `A` is *monotone* when `Ax >= 0` (componentwise) forces
//! `x >= 0`, and *weakly monotone* when every nonnegative vector in the
//! range of `A` has a nonnegative preimage. This crate decides both
//! properties in exact rational arithmetic and backs every verdict with a
//! machine-checkable certificate: a nonnegative one-sided inverse, a
//! counterexample vector, or an infeasibility witness in the sense of the
//! Farkas alternative.
//!
//! On top of the decisions it builds order-respecting preimages: given
//! `y0 <= y <= y1` in the range of `A`, it constructs preimages
//! `x0 <= x <= x1`, turning the componentwise order on the range into an
//! order on solutions.
//!
//! Modules:
//! - [`linalg`]: rational vectors and matrices, the componentwise order,
//!   and the `Q A P = [I_k S; 0 0]` decomposition.
//! - [`farkas`]: the certified alternative for `Mx = b, x >= 0` via exact
//!   phase-I simplex.
//! - [`cones`]: extreme rays of `range(A)` intersected with the
//!   nonnegative orthant, by the double description method.
//! - [`monotonicity`]: the monotone / weakly monotone analyzers.
//! - [`preimage`]: nonnegative preimages, shifted pairs, ordered
//!   (sandwich) triples, bounded solves, and the nonnegative-`Q` shortcut
//!   solver.
//! - [`cli`]: text parsing, JSON reports, and the command-line front end.

pub mod cli;
pub mod cones;
pub mod error;
pub mod farkas;
pub mod linalg;
pub mod monotonicity;
pub mod preimage;

pub use error::Error;

//! Deciders for monotone and weakly monotone matrices.
//!
//! `A` is monotone when `Ax >= 0` implies `x >= 0`; equivalently, when
//! `A` has a nonnegative left inverse (for square `A`: the inverse exists
//! and is nonnegative). `A` is weakly monotone when every `b >= 0` in the
//! range of `A` has a nonnegative preimage. Monotone implies weakly
//! monotone.
//!
//! Both verdicts come with constructive evidence. The monotone side is
//! settled by attempting a nonnegative left inverse row by row through
//! the Farkas engine; a failure hands back a vector `y` with `Ay >= 0`
//! and a negative coordinate, which is a counterexample by definition.
//! The weak side runs a pipeline from cheapest to most general:
//!
//! 1. zero matrix: trivially weakly monotone;
//! 2. single row: weakly monotone iff some entry is positive;
//! 3. full rank, at least as many rows as columns: iff the nonnegative
//!    left inverse exists;
//! 4. full rank, fewer rows than columns: iff a nonnegative right inverse
//!    exists;
//! 5. general: iff every extreme ray of `range(A)` intersected with the
//!    orthant has a nonnegative preimage.
//!
//! Step 5 rests on the cone argument: the set of nonnegative `b` with
//! nonnegative preimages is a convex cone, so it contains
//! `range(A) ∩ orthant` iff it contains each of its extreme rays.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cones::range_orthant_rays;
use crate::farkas::{solve_nonneg, verify_certificate, FarkasCertificate};
use crate::linalg::{qap_decompose, Matrix, Vector};

/// Decision path that settled the weak verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ZeroMatrix,
    PositiveEntry,
    LeftInverse,
    RightInverse,
    ExtremeRays,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Method::ZeroMatrix => "zero-matrix",
            Method::PositiveEntry => "positive-entry",
            Method::LeftInverse => "left-inverse",
            Method::RightInverse => "right-inverse",
            Method::ExtremeRays => "extreme-rays",
        };
        f.write_str(name)
    }
}

/// A nonnegative vector in the range of `A` with no nonnegative
/// preimage, plus the certificate proving the preimage system infeasible.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeakCounterexample {
    pub b: Vector,
    pub dual: FarkasCertificate,
}

/// Full verdict with constructive evidence.
///
/// Invariants:
/// - `monotone` implies `weakly_monotone`;
/// - exactly one of `left_inverse`, `counterexample_monotone` is present;
/// - `weakly_monotone = false` iff `counterexample_weak` is present, and
///   its dual certificate verifies against `(A, b)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub rank: usize,
    pub full_rank: bool,
    pub monotone: bool,
    pub weakly_monotone: bool,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_inverse: Option<Matrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_inverse: Option<Matrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample_monotone: Option<Vector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample_weak: Option<WeakCounterexample>,
}

impl MonotonicityReport {
    /// Re-checks every invariant and piece of evidence against `a`.
    pub fn verify(&self, a: &Matrix) -> bool {
        let (m, n) = (a.rows(), a.cols());
        let dec = qap_decompose(a);
        if self.rank != dec.rank || self.full_rank != (dec.rank == m.min(n)) {
            return false;
        }
        if self.monotone && !self.weakly_monotone {
            return false;
        }
        if self.left_inverse.is_some() == self.counterexample_monotone.is_some() {
            return false;
        }
        if self.monotone != self.left_inverse.is_some() {
            return false;
        }
        if let Some(b) = &self.left_inverse {
            if b.rows() != n || b.cols() != m || !b.is_nonneg() {
                return false;
            }
            if !b.mul_mat(a).is_identity() {
                return false;
            }
        }
        if let Some(b) = &self.right_inverse {
            if b.rows() != n || b.cols() != m || !b.is_nonneg() {
                return false;
            }
            if !a.mul_mat(b).is_identity() {
                return false;
            }
        }
        if let Some(x) = &self.counterexample_monotone {
            if x.dim() != n || !a.mul_vec(x).is_nonneg() || x.first_negative().is_none() {
                return false;
            }
        }
        if self.weakly_monotone != self.counterexample_weak.is_none() {
            return false;
        }
        if let Some(ce) = &self.counterexample_weak {
            if ce.b.dim() != m || !ce.b.is_nonneg() || !dec.in_range(&ce.b) {
                return false;
            }
            if !ce.dual.is_dual() {
                return false;
            }
            if !verify_certificate(a, &ce.b, &ce.dual).unwrap_or(false) {
                return false;
            }
        }
        true
    }
}

/// Outcome of the nonnegative left inverse construction.
pub enum LeftInverseOutcome {
    /// `B >= 0` with `B A = I_n`.
    Inverse(Matrix),
    /// `y` with `A y >= 0` and some coordinate of `y` negative: no
    /// nonnegative left inverse exists, and `y` violates monotonicity.
    Witness(Vector),
}

/// Outcome of the nonnegative right inverse construction.
pub enum RightInverseOutcome {
    /// `B >= 0` with `A B = I_m`.
    Inverse(Matrix),
    /// First unit vector `e_index` with no nonnegative preimage, plus the
    /// dual certificate for that system.
    Witness { index: usize, dual: Vector },
}

/// Builds `B >= 0` with `B A = I_n`, or returns a witness that none
/// exists.
///
/// Row `k` of `B` must solve `A^T w = e_k, w >= 0`. When that system is
/// infeasible its dual certificate `y` satisfies `y^T A^T >= 0` and
/// `y_k < 0`, that is, `A y >= 0` with a negative coordinate.
pub fn nonneg_left_inverse(a: &Matrix) -> LeftInverseOutcome {
    let at = a.transpose();
    let n = a.cols();
    let mut rows: Vec<Vector> = Vec::with_capacity(n);
    for k in 0..n {
        match solve_nonneg(&at, &Vector::unit(n, k)).expect("dimensions agree") {
            FarkasCertificate::Primal { x } => rows.push(x),
            FarkasCertificate::Dual { y } => {
                debug_assert!(a.mul_vec(&y).is_nonneg() && y[k].is_negative());
                return LeftInverseOutcome::Witness(y);
            }
        }
    }
    LeftInverseOutcome::Inverse(Matrix::from_rows(rows).expect("n >= 1"))
}

/// Builds `B >= 0` with `A B = I_m`, or returns the first failing column
/// with its dual certificate.
pub fn nonneg_right_inverse(a: &Matrix) -> RightInverseOutcome {
    let m = a.rows();
    let mut cols: Vec<Vector> = Vec::with_capacity(m);
    for k in 0..m {
        match solve_nonneg(a, &Vector::unit(m, k)).expect("dimensions agree") {
            FarkasCertificate::Primal { x } => cols.push(x),
            FarkasCertificate::Dual { y } => {
                return RightInverseOutcome::Witness { index: k, dual: y }
            }
        }
    }
    let bt = Matrix::from_rows(cols).expect("m >= 1");
    RightInverseOutcome::Inverse(bt.transpose())
}

/// Sufficient test for weak monotonicity: is the `Q` of the fixed
/// decomposition nonnegative?
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QShortcut {
    SufficientYes,
    Inconclusive,
}

/// Checks whether the deterministic `Q` from [`qap_decompose`] is
/// nonnegative. If so, `A` is weakly monotone: for `b >= 0` in the range,
/// the canonical solution `P (Qb | 0)` is a permutation of nonnegative
/// numbers. A negative entry in `Q` decides nothing.
pub fn q_nonneg_shortcut(a: &Matrix) -> QShortcut {
    if qap_decompose(a).q.is_nonneg() {
        QShortcut::SufficientYes
    } else {
        QShortcut::Inconclusive
    }
}

/// Decides both monotonicity notions with evidence. All report fields are
/// populated; [`is_monotone`] and [`is_weakly_monotone`] are the same
/// computation surfaced under the name of the verdict being asked for.
pub fn analyze(a: &Matrix) -> MonotonicityReport {
    let (m, n) = (a.rows(), a.cols());
    let dec = qap_decompose(a);
    let rank = dec.rank;
    let full_rank = rank == m.min(n);

    let (monotone, left_inverse, counterexample_monotone) = match nonneg_left_inverse(a) {
        LeftInverseOutcome::Inverse(b) => (true, Some(b), None),
        LeftInverseOutcome::Witness(y) => (false, None, Some(y)),
    };

    let mut right_inverse = None;
    let (weakly_monotone, counterexample_weak, method) = if a.is_zero() {
        // Only b = 0 is in the range, and x = 0 is a preimage.
        (true, None, Method::ZeroMatrix)
    } else if m == 1 {
        // Nonzero single row: b = (1) spans the range-orthant cone, and
        // a x = 1, x >= 0 is solvable iff some entry of a is positive.
        if a.row(0).first_positive().is_some() {
            (true, None, Method::PositiveEntry)
        } else {
            let b = Vector::unit(1, 0);
            let dual = expect_dual(a, &b);
            (
                false,
                Some(WeakCounterexample { b, dual }),
                Method::PositiveEntry,
            )
        }
    } else if full_rank && m >= n {
        // Injective case: the unique preimage of A y is y itself, so the
        // left-inverse outcome settles weak monotonicity too.
        match &counterexample_monotone {
            None => (true, None, Method::LeftInverse),
            Some(y) => {
                let b = a.mul_vec(y).primitive();
                debug_assert!(b.is_nonneg() && !b.is_zero());
                let dual = expect_dual(a, &b);
                (
                    false,
                    Some(WeakCounterexample { b, dual }),
                    Method::LeftInverse,
                )
            }
        }
    } else if full_rank {
        // Surjective case: every unit vector is in the range, so weak
        // monotonicity is exactly a nonnegative right inverse.
        match nonneg_right_inverse(a) {
            RightInverseOutcome::Inverse(b) => {
                right_inverse = Some(b);
                (true, None, Method::RightInverse)
            }
            RightInverseOutcome::Witness { index, dual } => {
                let b = Vector::unit(m, index);
                (
                    false,
                    Some(WeakCounterexample {
                        b,
                        dual: FarkasCertificate::Dual { y: dual },
                    }),
                    Method::RightInverse,
                )
            }
        }
    } else {
        // General case: check the extreme rays of range(A) ∩ orthant.
        let mut failure = None;
        for ray in range_orthant_rays(a).rays {
            match solve_nonneg(a, &ray).expect("dimensions agree") {
                FarkasCertificate::Primal { .. } => continue,
                dual @ FarkasCertificate::Dual { .. } => {
                    failure = Some(WeakCounterexample { b: ray, dual });
                    break;
                }
            }
        }
        (failure.is_none(), failure, Method::ExtremeRays)
    };

    MonotonicityReport {
        rank,
        full_rank,
        monotone,
        weakly_monotone,
        method,
        left_inverse,
        right_inverse,
        counterexample_monotone,
        counterexample_weak,
    }
}

/// Decides `Ax >= 0 implies x >= 0`. Returns the full report; the
/// `monotone`, `left_inverse`, and `counterexample_monotone` fields carry
/// this verdict.
pub fn is_monotone(a: &Matrix) -> MonotonicityReport {
    analyze(a)
}

/// Decides whether every nonnegative vector in the range has a
/// nonnegative preimage. Returns the full report; `weakly_monotone`,
/// `method`, and `counterexample_weak` carry this verdict.
pub fn is_weakly_monotone(a: &Matrix) -> MonotonicityReport {
    analyze(a)
}

fn expect_dual(a: &Matrix, b: &Vector) -> FarkasCertificate {
    let cert = solve_nonneg(a, b).expect("dimensions agree");
    assert!(cert.is_dual(), "expected an infeasible preimage system");
    cert
}

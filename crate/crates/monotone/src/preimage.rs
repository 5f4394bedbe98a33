//! Preimages that respect the componentwise order.
//!
//! The constructions here turn an ordering on the range side into an
//! ordering on preimages:
//!
//! - [`nonneg_preimage`]: a single nonnegative preimage of `b`, or the
//!   dual certificate that none exists.
//! - [`shift_to_zero`]: given `A x1 <= A x2`, replacement preimages with
//!   `x1' <= x2'` and unchanged images. Works by adding a nonnegative
//!   preimage of the image difference to the lower point.
//! - [`sandwich_preimages`]: given `y0 <= y <= y1` in the range, an
//!   ordered triple `x0 <= x <= x1` mapping onto them, built from a base
//!   point and two nonnegative steps `z2`, `z3`.
//! - [`between_solve`]: for monotone `A`, the solution of `A x = y` is
//!   automatically trapped between any preimage bounds `x0 <= x1` with
//!   `A x0 <= y <= A x1`.
//! - [`q_nonneg_solve`]: sufficient shortcut that reads a nonnegative
//!   solution straight off the decomposition when its `Q` is nonnegative.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::farkas::{solve_nonneg, FarkasCertificate};
use crate::linalg::{leq_vec, qap_decompose, Matrix, Vector};
use crate::monotonicity::analyze;

/// Ordered preimages of an ordered range triple.
///
/// Invariants: `x0 <= x <= x1` componentwise, and `A x0 = y0`,
/// `A x = y`, `A x1 = y1` for the query triple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SandwichSolution {
    pub x0: Vector,
    pub x: Vector,
    pub x1: Vector,
}

impl SandwichSolution {
    /// Checks both the ordering and the three image equations.
    pub fn verify(&self, a: &Matrix, y0: &Vector, y: &Vector, y1: &Vector) -> bool {
        let ordered = leq_vec(&self.x0, &self.x).unwrap_or(false)
            && leq_vec(&self.x, &self.x1).unwrap_or(false);
        ordered
            && self.x0.dim() == a.cols()
            && a.mul_vec(&self.x0) == *y0
            && a.mul_vec(&self.x) == *y
            && a.mul_vec(&self.x1) == *y1
    }
}

/// Result of a nonnegative preimage query.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PreimageOutcome {
    Found { x: Vector },
    Infeasible { dual: FarkasCertificate },
}

/// `x >= 0` with `A x = b`, or the dual certificate that no such `x`
/// exists.
pub fn nonneg_preimage(a: &Matrix, b: &Vector) -> Result<PreimageOutcome, Error> {
    match solve_nonneg(a, b)? {
        FarkasCertificate::Primal { x } => Ok(PreimageOutcome::Found { x }),
        dual @ FarkasCertificate::Dual { .. } => Ok(PreimageOutcome::Infeasible { dual }),
    }
}

/// Result of [`shift_to_zero`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ShiftOutcome {
    Shifted { x1: Vector, x2: Vector },
    Infeasible { dual: FarkasCertificate },
}

/// Replaces `x1, x2` with `x1' <= x2'` having the same images under `A`.
///
/// Requires `A x1 <= A x2`. Construction: `z` is a nonnegative preimage
/// of `A (x2 - x1)`; then `x1' = x1` and `x2' = x1 + z`. When `z` does
/// not exist the dual certificate is returned instead.
pub fn shift_to_zero(a: &Matrix, x1: &Vector, x2: &Vector) -> Result<ShiftOutcome, Error> {
    for (name, x) in [("x1", x1), ("x2", x2)] {
        if x.dim() != a.cols() {
            return Err(Error::Dim {
                context: name,
                expected: a.cols(),
                found: x.dim(),
            });
        }
    }
    let img1 = a.mul_vec(x1);
    let img2 = a.mul_vec(x2);
    if !leq_vec(&img1, &img2)? {
        return Err(Error::Precondition(
            "A x1 <= A x2 must hold componentwise".to_string(),
        ));
    }
    match nonneg_preimage(a, &img2.sub(&img1))? {
        PreimageOutcome::Found { x: z } => Ok(ShiftOutcome::Shifted {
            x1: x1.clone(),
            x2: x1.add(&z),
        }),
        PreimageOutcome::Infeasible { dual } => Ok(ShiftOutcome::Infeasible { dual }),
    }
}

/// Which of the two step systems was infeasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SandwichStep {
    Z2,
    Z3,
}

impl std::fmt::Display for SandwichStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SandwichStep::Z2 => "z2",
            SandwichStep::Z3 => "z3",
        })
    }
}

/// Result of [`sandwich_preimages`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SandwichOutcome {
    Solution(SandwichSolution),
    Failure {
        step: SandwichStep,
        dual: FarkasCertificate,
    },
}

/// Ordered preimages for `y0 <= y <= y1`, all three in the range of `A`.
///
/// The base point is the canonical solution of `A x = y0` (free variables
/// zero, from the decomposition); the two steps are nonnegative preimages
/// `z2` of `y - y0` and `z3` of `y1 - y`, giving
/// `x0 = base`, `x = base + z2`, `x1 = base + z2 + z3`. A failing step is
/// reported by name together with its dual certificate.
pub fn sandwich_preimages(
    a: &Matrix,
    y0: &Vector,
    y: &Vector,
    y1: &Vector,
) -> Result<SandwichOutcome, Error> {
    for (context, v) in [("y0", y0), ("y", y), ("y1", y1)] {
        if v.dim() != a.rows() {
            return Err(Error::Dim {
                context,
                expected: a.rows(),
                found: v.dim(),
            });
        }
    }
    if !leq_vec(y0, y)? || !leq_vec(y, y1)? {
        return Err(Error::Precondition(
            "y0 <= y <= y1 must hold componentwise".to_string(),
        ));
    }
    let dec = qap_decompose(a);
    let Some(base) = dec.solve(y0) else {
        return Err(Error::Precondition("y0 is not in the range".to_string()));
    };
    if !dec.in_range(y) {
        return Err(Error::Precondition("y is not in the range".to_string()));
    }
    if !dec.in_range(y1) {
        return Err(Error::Precondition("y1 is not in the range".to_string()));
    }

    let z2 = match nonneg_preimage(a, &y.sub(y0))? {
        PreimageOutcome::Found { x } => x,
        PreimageOutcome::Infeasible { dual } => {
            return Ok(SandwichOutcome::Failure {
                step: SandwichStep::Z2,
                dual,
            })
        }
    };
    let z3 = match nonneg_preimage(a, &y1.sub(y))? {
        PreimageOutcome::Found { x } => x,
        PreimageOutcome::Infeasible { dual } => {
            return Ok(SandwichOutcome::Failure {
                step: SandwichStep::Z3,
                dual,
            })
        }
    };

    let x = base.add(&z2);
    let solution = SandwichSolution {
        x1: x.add(&z3),
        x0: base,
        x,
    };
    debug_assert!(solution.verify(a, y0, y, y1));
    Ok(SandwichOutcome::Solution(solution))
}

/// Result of [`between_solve`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum BetweenOutcome {
    Solution { x: Vector },
    /// `A` is not monotone; the vector satisfies `A v >= 0` with a
    /// negative coordinate.
    NotApplicable { counterexample: Vector },
}

/// Solves `A x = y` under preimage bounds `x0 <= x1` with
/// `A x0 <= y <= A x1`, for monotone `A`.
///
/// Monotonicity makes the bounds automatic for any solution:
/// `A (x - x0) >= 0` forces `x >= x0`, and symmetrically for `x1`. The
/// bounds are still asserted on every run; a violation would be a defect.
/// Monotonicity itself is checked here rather than trusted, and a
/// negative answer returns the counterexample.
pub fn between_solve(
    a: &Matrix,
    x0: &Vector,
    x1: &Vector,
    y: &Vector,
) -> Result<BetweenOutcome, Error> {
    for (context, v, expected) in [
        ("x0", x0, a.cols()),
        ("x1", x1, a.cols()),
        ("y", y, a.rows()),
    ] {
        if v.dim() != expected {
            return Err(Error::Dim {
                context,
                expected,
                found: v.dim(),
            });
        }
    }
    if !leq_vec(x0, x1)? {
        return Err(Error::Precondition(
            "x0 <= x1 must hold componentwise".to_string(),
        ));
    }
    if !leq_vec(&a.mul_vec(x0), y)? || !leq_vec(y, &a.mul_vec(x1))? {
        return Err(Error::Precondition(
            "A x0 <= y <= A x1 must hold componentwise".to_string(),
        ));
    }
    let report = analyze(a);
    if !report.monotone {
        let counterexample = report
            .counterexample_monotone
            .expect("non-monotone report carries a counterexample");
        return Ok(BetweenOutcome::NotApplicable { counterexample });
    }
    let dec = qap_decompose(a);
    let Some(x) = dec.solve(y) else {
        return Err(Error::NoSolution("y is not in the range".to_string()));
    };
    assert!(
        leq_vec(x0, &x).unwrap() && leq_vec(&x, x1).unwrap(),
        "monotonicity must force the bounds"
    );
    Ok(BetweenOutcome::Solution { x })
}

/// Result of [`q_nonneg_solve`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum QSolveOutcome {
    Solution { x: Vector },
    /// The shortcut's sufficient condition does not hold for this input;
    /// nothing is decided.
    Inapplicable,
    /// `b` is outside the range of `A`.
    NoSolution,
}

/// Reads a nonnegative solution of `A x = b` off the decomposition when
/// its `Q` is nonnegative.
///
/// With `Q A P = [I_k S; 0 0]` and `c = Q b >= 0`: if the bottom
/// `m - k` entries of `c` are nonzero, `b` is outside the range; if the
/// top `k` entries are nonnegative, `x = P (c_1..c_k | 0)` is a
/// nonnegative solution. A negative entry in `Q` or in the top of `c`
/// makes the shortcut inapplicable; it never proves a negative.
pub fn q_nonneg_solve(a: &Matrix, b: &Vector) -> Result<QSolveOutcome, Error> {
    if b.dim() != a.rows() {
        return Err(Error::Dim {
            context: "right-hand side",
            expected: a.rows(),
            found: b.dim(),
        });
    }
    let dec = qap_decompose(a);
    if !dec.q.is_nonneg() {
        return Ok(QSolveOutcome::Inapplicable);
    }
    let c = dec.q.mul_vec(b);
    if c.entries()[dec.rank..].iter().any(|e| !e.is_zero()) {
        return Ok(QSolveOutcome::NoSolution);
    }
    if c.entries()[..dec.rank].iter().any(|e| e.is_negative()) {
        return Ok(QSolveOutcome::Inapplicable);
    }
    let x = dec.solve(b).expect("range membership already checked");
    debug_assert!(x.is_nonneg() && a.mul_vec(&x) == *b);
    Ok(QSolveOutcome::Solution { x })
}

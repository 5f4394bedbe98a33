//! Certified decision of `M x = b, x >= 0`.
//!
//! Exactly one of the two alternatives holds for any rational `M` and `b`:
//! either the system has a nonnegative solution `x`, or some `y` satisfies
//! `y^T M >= 0` and `y^T b < 0`. [`solve_nonneg`] always returns one of
//! the two witnesses, and both are checkable by direct substitution with
//! [`verify_certificate`].
//!
//! The engine is a phase-I simplex over exact rationals: minimize the sum
//! of artificial variables in `M'x + t = b'`, where `b'` is `b` with rows
//! sign-flipped to be nonnegative and `M'` flipped to match. Optimal value
//! zero yields the primal witness; a positive optimum yields the dual one
//! from the final simplex multipliers. Bland's rule (lowest eligible index
//! enters, ties in the ratio test broken by lowest basic variable index)
//! guarantees termination and makes the output deterministic.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::{Matrix, Rational, Vector};

/// Witness for whichever side of the alternative holds.
///
/// Invariants:
/// - `Primal`: `M x = b` exactly and `x >= 0`.
/// - `Dual`: `y^T M >= 0` componentwise and `y^T b < 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FarkasCertificate {
    Primal { x: Vector },
    Dual { y: Vector },
}

impl FarkasCertificate {
    pub fn is_primal(&self) -> bool {
        matches!(self, FarkasCertificate::Primal { .. })
    }

    pub fn is_dual(&self) -> bool {
        matches!(self, FarkasCertificate::Dual { .. })
    }
}

/// Checks a certificate against `(M, b)` by substitution.
pub fn verify_certificate(
    m: &Matrix,
    b: &Vector,
    certificate: &FarkasCertificate,
) -> Result<bool, Error> {
    if b.dim() != m.rows() {
        return Err(Error::Dim {
            context: "right-hand side",
            expected: m.rows(),
            found: b.dim(),
        });
    }
    match certificate {
        FarkasCertificate::Primal { x } => {
            if x.dim() != m.cols() {
                return Err(Error::Dim {
                    context: "primal witness",
                    expected: m.cols(),
                    found: x.dim(),
                });
            }
            Ok(x.is_nonneg() && m.mul_vec(x) == *b)
        }
        FarkasCertificate::Dual { y } => {
            if y.dim() != m.rows() {
                return Err(Error::Dim {
                    context: "dual witness",
                    expected: m.rows(),
                    found: y.dim(),
                });
            }
            let ytm = m.transpose().mul_vec(y);
            Ok(ytm.is_nonneg() && y.dot(b).is_negative())
        }
    }
}

/// Decides `M x = b, x >= 0` and returns the witness for the side that
/// holds. Never fails to decide; the only error is a dimension mismatch.
///
/// Deterministic for fixed input. The returned certificate is verified
/// internally before being handed out; a verification failure would be a
/// defect in the solver itself and panics.
pub fn solve_nonneg(m: &Matrix, b: &Vector) -> Result<FarkasCertificate, Error> {
    if b.dim() != m.rows() {
        return Err(Error::Dim {
            context: "right-hand side",
            expected: m.rows(),
            found: b.dim(),
        });
    }
    let certificate = if b.is_zero() {
        FarkasCertificate::Primal {
            x: Vector::zeros(m.cols()),
        }
    } else {
        phase_one(m, b)
    };
    let ok = verify_certificate(m, b, &certificate).expect("dimensions already checked");
    assert!(ok, "produced certificate failed verification");
    Ok(certificate)
}

/// Phase-I simplex. Requires `b != 0`.
fn phase_one(m: &Matrix, b: &Vector) -> FarkasCertificate {
    let rows = m.rows();
    let cols = m.cols();
    let total = cols + rows; // structural variables, then artificials

    // Sign-flip rows so the right-hand side is nonnegative; flip[i] is
    // -1 exactly when b[i] < 0.
    let flip: Vec<bool> = (0..rows).map(|i| b[i].is_negative()).collect();
    let signed = |value: &Rational, i: usize| {
        if flip[i] {
            -value.clone()
        } else {
            value.clone()
        }
    };

    // table[i] = [M' | I | b'], basis starts on the artificials.
    let mut table: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = (0..cols).map(|j| signed(&m[(i, j)], i)).collect();
            row.extend((0..rows).map(|l| {
                if l == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row.push(signed(&b[i], i));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (cols..total).collect();

    // Reduced costs for minimizing the artificial sum: cost[j] = c_j - z_j
    // with c zero on structural and one on artificial columns. The
    // objective value is tracked as its negative in cost[total], keeping
    // the whole objective row under the ordinary pivot update.
    let mut cost: Vec<Rational> = (0..=total)
        .map(|j| {
            let column_sum = table
                .iter()
                .map(|row| row[j].clone())
                .fold(Rational::zero(), |acc, v| acc + v);
            if (cols..total).contains(&j) {
                Rational::one() - column_sum
            } else {
                -column_sum
            }
        })
        .collect();

    // Bland: the lowest-index column with negative reduced cost enters.
    while let Some(enter) = (0..total).find(|&j| cost[j].is_negative()) {
        // Ratio test; ties broken by the lowest basic variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in table.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[total] / &row[enter];
            let better = match &leave {
                None => true,
                Some((best, best_ratio)) => {
                    ratio < *best_ratio || (ratio == *best_ratio && basis[i] < basis[*best])
                }
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (leave, _) = leave.expect("phase-I objective is bounded below by zero");

        // Pivot on (leave, enter).
        let pivot = table[leave][enter].clone();
        for v in table[leave].iter_mut() {
            *v = &*v / &pivot;
        }
        let pivot_row = table[leave].clone();
        for (i, row) in table.iter_mut().enumerate() {
            if i == leave || row[enter].is_zero() {
                continue;
            }
            let factor = row[enter].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                let t = p * &factor;
                *v = &*v - t;
            }
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for (c, p) in cost.iter_mut().zip(&pivot_row) {
                let t = p * &factor;
                *c = &*c - t;
            }
        }
        basis[leave] = enter;
    }

    let objective = -cost[total].clone();
    if objective.is_zero() {
        // Feasible: read the structural variables off the basis. Any
        // artificial still basic sits at value zero here.
        let mut x = vec![Rational::zero(); cols];
        for (i, &var) in basis.iter().enumerate() {
            if var < cols {
                x[var] = table[i][total].clone();
            }
        }
        FarkasCertificate::Primal {
            x: Vector::new(x).expect("cols >= 1"),
        }
    } else {
        // Simplex multipliers: the reduced cost of artificial column
        // cols + i is 1 - pi_i, so pi_i = 1 - cost[cols + i]. Undoing the
        // sign flips, y = -D pi satisfies y^T M = -pi^T M' >= 0 and
        // y^T b = -pi^T b' = -objective < 0.
        let y: Vec<Rational> = (0..rows)
            .map(|i| {
                let pi = Rational::one() - &cost[cols + i];
                if flip[i] {
                    pi
                } else {
                    -pi
                }
            })
            .collect();
        FarkasCertificate::Dual {
            y: Vector::new(y).expect("rows >= 1"),
        }
    }
}

//! Order-respecting preimages: given y0 <= y <= y1 in the range of A,
//! build x0 <= x <= x1 mapping onto them, or learn exactly which gap
//! system blocks the construction.
//!
//! Run with: cargo run --example sandwich

use monotone::mat;
use monotone::preimage::{sandwich_preimages, shift_to_zero, SandwichOutcome, ShiftOutcome};
use monotone::rvec;

fn main() {
    // A weakly monotone wide matrix: the construction always goes
    // through for ordered points of its range.
    let a = mat![[1, 0, 1], [0, 1, 1]];
    let (y0, y, y1) = (rvec![0, 0], rvec![3, 1], rvec![4, 9]);
    println!("A =\n{a}");
    println!("targets: {y0} <= {y} <= {y1}");
    match sandwich_preimages(&a, &y0, &y, &y1).unwrap() {
        SandwichOutcome::Solution(sol) => {
            println!("preimages: {} <= {} <= {}", sol.x0, sol.x, sol.x1);
            assert!(sol.verify(&a, &y0, &y, &y1));
        }
        SandwichOutcome::Failure { .. } => unreachable!("this matrix is weakly monotone"),
    }
    println!();

    // A matrix that is not weakly monotone: the middle preimage exists,
    // but the step from y to y1 is certified impossible.
    let bad = mat![[4, 3], [1, 1]];
    let (y0, y, y1) = (rvec![0, 0], rvec![10, 3], rvec![15, 4]);
    println!("A =\n{bad}");
    println!("targets: {y0} <= {y} <= {y1}");
    match sandwich_preimages(&bad, &y0, &y, &y1).unwrap() {
        SandwichOutcome::Solution(_) => unreachable!("the z3 gap system is infeasible"),
        SandwichOutcome::Failure { step, dual } => {
            println!("no ordered preimages: step {step} is infeasible");
            println!("witness: {dual:?}");
        }
    }
    println!();

    // The same machinery reorders a single pair: given A x1 <= A x2,
    // produce x1' <= x2' with identical images.
    let (x1, x2) = (rvec![0, 3, 0], rvec![4, 0, 5]);
    println!("images A x1 = {} <= A x2 = {}", a.mul_vec(&x1), a.mul_vec(&x2));
    match shift_to_zero(&a, &x1, &x2).unwrap() {
        ShiftOutcome::Shifted { x1, x2 } => {
            println!("reordered pair: {x1} <= {x2}");
        }
        ShiftOutcome::Infeasible { dual } => {
            println!("cannot reorder; witness {dual:?}");
        }
    }
}

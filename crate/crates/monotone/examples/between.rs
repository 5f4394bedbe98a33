//! Bounded solving for monotone matrices: when x0 <= x1 and
//! A x0 <= y <= A x1, the solution of A x = y automatically lands
//! between the bounds. Monotonicity is what carries the image ordering
//! back to the preimages.
//!
//! Run with: cargo run --example between

use monotone::linalg::leq_vec;
use monotone::preimage::{between_solve, BetweenOutcome};
use monotone::{mat, rvec};

fn main() {
    // Monotone: the inverse [[1, 1], [1, 2]] is nonnegative.
    let a = mat![[2, -1], [-1, 1]];
    let (x0, x1) = (rvec![0, 0], rvec![3, 5]);
    let y = rvec![1, 1];
    println!("A =\n{a}");
    println!("bounds {x0} <= x <= {x1}, target y = {y}");
    println!("images: A x0 = {} <= y <= A x1 = {}", a.mul_vec(&x0), a.mul_vec(&x1));

    match between_solve(&a, &x0, &x1, &y).unwrap() {
        BetweenOutcome::Solution { x } => {
            println!("x = {x}");
            assert!(leq_vec(&x0, &x).unwrap() && leq_vec(&x, &x1).unwrap());
            println!("bounds hold without being imposed: they follow from monotonicity");
        }
        BetweenOutcome::NotApplicable { .. } => unreachable!("A is monotone"),
    }
    println!();

    // Without monotonicity the guarantee evaporates, and the call says
    // why instead of returning an unconstrained solution.
    let skew = mat![[1, 0], [0, -1]];
    let (x0, x1) = (rvec![0, -1], rvec![9, -1]);
    let y = rvec![1, 1];
    println!("A =\n{skew}");
    match between_solve(&skew, &x0, &x1, &y).unwrap() {
        BetweenOutcome::Solution { .. } => unreachable!("this matrix is not monotone"),
        BetweenOutcome::NotApplicable { counterexample } => {
            println!(
                "not monotone: A v >= 0 for v = {counterexample}, which has a negative entry"
            );
        }
    }
}

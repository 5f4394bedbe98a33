//! The workhorse factorization: invertible Q and permutation P with
//! Q A P = [I S; 0 0]. Everything downstream reads answers off this
//! normal form: canonical solutions, range membership, the left
//! nullspace, and a cheap sufficient test for weak monotonicity.
//!
//! Run with: cargo run --example decompose

use monotone::linalg::{left_nullspace_basis, qap_decompose};
use monotone::preimage::{q_nonneg_solve, QSolveOutcome};
use monotone::{mat, rvec};

fn main() {
    let a = mat![[1, -1, 4], [-1, 2, -3], [1, -2, 3]];
    println!("A =\n{a}");

    let dec = qap_decompose(&a);
    println!("rank = {}", dec.rank);
    println!("Q =\n{}", dec.q);
    println!("P =\n{}", dec.p);
    println!("Q A P =\n{}", dec.block());
    assert!(dec.verify(&a));

    // Canonical solving: free variables pinned to zero, so the answer is
    // a deterministic function of the input.
    let b = rvec![1, 0, 0];
    match dec.solve(&b) {
        Some(x) => println!("canonical solution of A x = {b}: x = {x}"),
        None => println!("{b} is outside the range"),
    }
    let unsolvable = rvec![0, 0, 1];
    println!("is {unsolvable} in the range? {}", dec.in_range(&unsolvable));

    // The bottom rows of Q spell out every linear dependency among the
    // rows of A.
    for u in left_nullspace_basis(&a) {
        println!("dependency row: {u}  (u'A = 0)");
    }
    println!();

    // When Q itself is nonnegative, nonnegative right-hand sides solve
    // nonnegatively for free; no phase-one iteration is needed.
    let easy = mat![[1, 0, 1], [0, 1, 1], [0, 0, 0]];
    println!("A =\n{easy}");
    match q_nonneg_solve(&easy, &rvec![2, 3, 0]).unwrap() {
        QSolveOutcome::Solution { x } => println!("read off the decomposition: x = {x}"),
        QSolveOutcome::Inapplicable => println!("shortcut does not apply"),
        QSolveOutcome::NoSolution => println!("right-hand side outside the range"),
    }
}

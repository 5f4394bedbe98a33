//! Solve `A x = b, x >= 0` and get a machine-checkable certificate either
//! way: a feasible `x`, or a `y` proving that no nonnegative solution can
//! exist.
//!
//! Run with: cargo run --example nonneg_solve

use monotone::farkas::{solve_nonneg, verify_certificate, FarkasCertificate};
use monotone::linalg::{Matrix, Vector};
use monotone::{mat, rvec};

fn solve_and_check(a: &Matrix, b: &Vector) {
    println!("A =\n{a}");
    println!("b = {b}");
    let cert = solve_nonneg(a, b).unwrap();
    match &cert {
        FarkasCertificate::Primal { x } => {
            println!("feasible: x = {x}");
            println!("  check: A x = {} and x >= 0", a.mul_vec(x));
        }
        FarkasCertificate::Dual { y } => {
            println!("infeasible, witness y = {y}");
            let yt_a = a.transpose().mul_vec(y);
            println!("  check: y'A = {yt_a} is nonnegative while y'b = {} is negative", y.dot(b));
        }
    }
    // Certificates are plain data; anyone can re-run the checker.
    assert!(verify_certificate(a, b, &cert).unwrap());
    println!();
}

fn main() {
    let a = mat![[1, -1, 4], [-1, 2, -3], [1, -2, 3]];

    // Feasible: the solver returns a nonnegative solution.
    solve_and_check(&a, &rvec![1, 0, 0]);

    // Infeasible: the same call returns a dual witness instead. Exactly
    // one of the two outcomes exists for any system.
    solve_and_check(&mat![[4, 3], [1, 1]], &rvec![1, 0]);

    // A witness from elsewhere can be validated without re-solving.
    let foreign = FarkasCertificate::Primal { x: rvec![2, 1, 0] };
    let accepted = verify_certificate(&a, &rvec![1, 0, 0], &foreign).unwrap();
    println!("hand-written certificate accepted: {accepted}");
}

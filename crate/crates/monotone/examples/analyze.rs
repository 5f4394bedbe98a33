//! Classify matrices as monotone, weakly monotone, or neither, and show
//! the evidence attached to each verdict.
//!
//! Run with: cargo run --example analyze

use monotone::linalg::Matrix;
use monotone::mat;
use monotone::monotonicity::analyze;

fn inspect(name: &str, a: &Matrix) {
    println!("== {name} ==");
    println!("{a}");
    let report = analyze(a);
    println!("rank {} of {}x{}", report.rank, a.rows(), a.cols());
    println!("monotone:        {}", report.monotone);
    println!("weakly monotone: {}  (decided by: {})", report.weakly_monotone, report.method);

    if let Some(b) = &report.left_inverse {
        println!("nonnegative left inverse B (B A = I):\n{b}");
    }
    if let Some(x) = &report.counterexample_monotone {
        println!("counterexample: A x >= 0 but x = {x} has a negative entry");
    }
    if let Some(ce) = &report.counterexample_weak {
        println!(
            "counterexample: b = {} is nonnegative, lies in the range, yet has no \
             nonnegative preimage (witness attached: {:?})",
            ce.b, ce.dual
        );
    }
    assert!(report.verify(a), "every report re-verifies against its matrix");
    println!();
}

fn main() {
    // Inverse [[1, 1], [1, 2]] is nonnegative, so A x >= 0 forces x >= 0.
    inspect("monotone", &mat![[2, -1], [-1, 1]]);

    // Wide matrix: no left inverse can exist, but every nonnegative b in
    // the range still has a nonnegative preimage.
    inspect("weakly monotone only", &mat![[1, 0, 1], [0, 1, 1]]);

    // b = (1, 0) is in the range, yet its only preimage direction forces
    // a sign change: not even weakly monotone.
    inspect("neither", &mat![[4, 3], [1, 1]]);
}

//! Enumerate the extreme rays of {y : R y = 0, y >= 0}. Applied to the
//! dependency rows of a matrix this describes range(A) intersected with
//! the nonnegative orthant, which is exactly the set weak monotonicity
//! quantifies over.
//!
//! Run with: cargo run --example rays

use monotone::cones::{dd_rays, range_orthant_rays};
use monotone::farkas::{solve_nonneg, FarkasCertificate};
use monotone::linalg::Vector;
use monotone::{mat, rvec};

fn main() {
    // One equality slices the 3-dimensional orthant: y1 + y2 = y3.
    let slice = vec![rvec![1, 1, -1]];
    let rays = dd_rays(&slice, 3).unwrap();
    println!("extreme rays of y1 + y2 = y3, y >= 0:");
    for r in &rays.rays {
        println!("  {r}");
    }
    println!();

    // The nonnegative part of a matrix range. Every nonnegative b in
    // range(A) is a nonnegative combination of these generators, so
    // checking weak monotonicity reduces to checking each ray.
    let a = mat![[1, 0, 1], [0, 1, 1], [0, 0, 0]];
    println!("A =\n{a}");
    let cone = range_orthant_rays(&a);
    println!("generators of range(A) in the orthant:");
    for r in &cone.rays {
        println!("  {r}");
        match solve_nonneg(&a, r).unwrap() {
            FarkasCertificate::Primal { x } => println!("    preimage >= 0: {x}"),
            FarkasCertificate::Dual { y } => println!("    no preimage, witness {y}"),
        }
    }
    println!();

    // Opposite-signed constraints can pinch the cone down to the origin.
    let pinched = dd_rays(&[rvec![1, -1], rvec![1, 1]], 2).unwrap();
    println!("pinched cone ray count: {}", pinched.len());
    assert!(pinched.is_empty());

    // No constraints at all: the orthant itself, one ray per axis.
    let orthant = dd_rays(&[] as &[Vector], 4).unwrap();
    println!("orthant of dimension 4 has {} extreme rays", orthant.len());
}

//! Extreme rays of pointed polyhedral cones inside the nonnegative
//! orthant.
//!
//! The cone of interest is `C = range(A)` intersected with the orthant,
//! written as `{y : R y = 0, y >= 0}` for `R = left_nullspace_basis(A)`.
//! Being a subset of the orthant, `C` is pointed, so it is the set of
//! nonnegative combinations of its finitely many extreme rays. Those rays
//! are exactly what the rank-deficient weak-monotonicity decision needs:
//! the whole cone has nonnegative preimages iff every extreme ray does.
//!
//! Enumeration is by the double description method: start from the
//! orthant's rays `e_1 .. e_dim` and insert the equality constraints one
//! row at a time, keeping the rays on the hyperplane and combining
//! adjacent pairs from opposite sides. Adjacency is the algebraic rank
//! test on the active constraints. Everything is exact; output order is
//! canonical (primitive integer rays, lexicographically sorted).

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::{left_nullspace_basis, rank_of_rows, Matrix, Vector};

/// Extreme rays of a pointed cone in the orthant.
///
/// Invariants: every ray is nonnegative, nonzero, primitive (coprime
/// integer entries), and no two rays are proportional. Sorted
/// lexicographically for deterministic output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayList {
    pub ambient_dim: usize,
    pub rays: Vec<Vector>,
}

impl RayList {
    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }
}

/// Extreme rays of `{y in R^dim : R y = 0, y >= 0}`.
///
/// `equalities` may be empty, meaning the full orthant. Each row must
/// have dimension `dim`.
pub fn dd_rays(equalities: &[Vector], dim: usize) -> Result<RayList, Error> {
    assert!(dim >= 1, "ambient dimension must be positive");
    for row in equalities {
        if row.dim() != dim {
            return Err(Error::Dim {
                context: "equality row",
                expected: dim,
                found: row.dim(),
            });
        }
    }

    let mut rays: Vec<Vector> = (0..dim).map(|i| Vector::unit(dim, i)).collect();
    let mut processed: Vec<Vector> = Vec::new();

    for row in equalities {
        let values: Vec<_> = rays.iter().map(|r| row.dot(r)).collect();
        let mut next: Vec<Vector> = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if v.is_zero() {
                next.push(r.clone());
            }
        }
        for (ip, p) in rays.iter().enumerate() {
            if !values[ip].is_positive() {
                continue;
            }
            for (iq, q) in rays.iter().enumerate() {
                if !values[iq].is_negative() {
                    continue;
                }
                if !adjacent(p, q, &processed, dim) {
                    continue;
                }
                // Positive combination lying on the new hyperplane:
                // row . (vp q - vq p) = vp vq - vq vp = 0.
                let combined = q.scale(&values[ip]).sub(&p.scale(&values[iq]));
                next.push(combined.primitive());
            }
        }
        next.sort_by(compare_entries);
        next.dedup();
        rays = next;
        processed.push(row.clone());
    }

    rays.sort_by(compare_entries);
    rays.dedup();
    Ok(RayList {
        ambient_dim: dim,
        rays,
    })
}

/// Extreme rays of `range(A)` intersected with the nonnegative orthant.
pub fn range_orthant_rays(a: &Matrix) -> RayList {
    let basis = left_nullspace_basis(a);
    dd_rays(&basis, a.rows()).expect("basis rows match the ambient dimension")
}

/// Rank test for adjacency of two extreme rays in the cone cut out by the
/// processed equality rows and the orthant. The face spanned by `p` and
/// `q` is two-dimensional, hence an edge, iff the constraints active at
/// both rays have rank `dim - 2`.
fn adjacent(p: &Vector, q: &Vector, processed: &[Vector], dim: usize) -> bool {
    let mut active: Vec<Vector> = processed.to_vec();
    for i in 0..dim {
        if p[i].is_zero() && q[i].is_zero() {
            active.push(Vector::unit(dim, i));
        }
    }
    rank_of_rows(&active) + 2 == dim
}

fn compare_entries(a: &Vector, b: &Vector) -> std::cmp::Ordering {
    a.entries().cmp(b.entries())
}

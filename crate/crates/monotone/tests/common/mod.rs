//! Shared oracles and generators for the integration suites.
//!
//! Results are recomputed by routes independent of the library's
//! algorithms: cofactor expansion instead of accumulated elimination for
//! determinants and inverses, minor enumeration for rank, support
//! enumeration for extreme rays, and basic-solution enumeration for
//! feasibility. The only shared code is the scalar type.

#![allow(dead_code)]

use monotone::linalg::{int, Matrix, Rational, Vector};
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

/// Determinant by cofactor expansion along the first row.
pub fn det_oracle(a: &Matrix) -> Rational {
    assert_eq!(a.rows(), a.cols(), "determinant needs a square matrix");
    let n = a.rows();
    if n == 1 {
        return a[(0, 0)].clone();
    }
    let mut det = Rational::zero();
    for j in 0..n {
        if a[(0, j)].is_zero() {
            continue;
        }
        let minor = submatrix(a, &(1..n).collect::<Vec<_>>(), &complement(j, n));
        let term = &a[(0, j)] * det_oracle(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn complement(skip: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|&c| c != skip).collect()
}

fn submatrix(a: &Matrix, rows: &[usize], cols: &[usize]) -> Matrix {
    let data: Vec<Rational> = rows
        .iter()
        .flat_map(|&i| cols.iter().map(move |&j| a[(i, j)].clone()))
        .collect();
    Matrix::new(rows.len(), cols.len(), data).expect("nonempty selection")
}

/// Inverse via the adjugate: entry (i,j) is the (j,i) cofactor over the
/// determinant. `None` when the determinant vanishes.
pub fn adjugate_inverse(a: &Matrix) -> Option<Matrix> {
    assert_eq!(a.rows(), a.cols(), "inverse needs a square matrix");
    let n = a.rows();
    let det = det_oracle(a);
    if det.is_zero() {
        return None;
    }
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // Cofactor C_ji for the transposed adjugate.
            let minor = if n == 1 {
                Rational::one()
            } else {
                det_oracle(&submatrix(a, &complement(j, n), &complement(i, n)))
            };
            let sign = if (i + j) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            data.push(sign * minor / &det);
        }
    }
    Some(Matrix::new(n, n, data).expect("square shape"))
}

fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == size {
            out.push((0..n).filter(|&i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// Rank as the largest order of a nonvanishing minor.
pub fn minor_rank(a: &Matrix) -> usize {
    let (m, n) = (a.rows(), a.cols());
    for r in (1..=m.min(n)).rev() {
        for rows in subsets_of_size(m, r) {
            for cols in subsets_of_size(n, r) {
                if !det_oracle(&submatrix(a, &rows, &cols)).is_zero() {
                    return r;
                }
            }
        }
    }
    0
}

/// Textbook reduced row echelon form; returns the pivot columns. Written
/// here on raw vecs so the suites do not lean on the library's
/// elimination.
fn rref_oracle(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        // Bottom-most candidate, unlike the library's topmost rule.
        let Some(pivot) = (next..rows.len()).rev().find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, pivot);
        let inv = rows[next][col].clone().recip();
        for v in rows[next].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = &*v - p * &factor;
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Basis of `{x : rows x = 0}` in `R^dim`; the identity basis for an
/// empty row set.
fn nullspace_oracle(rows: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let mut work: Vec<Vec<Rational>> = rows.to_vec();
    let pivots = rref_oracle(&mut work, dim);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); dim];
            v[f] = Rational::one();
            for (row, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -work[row][f].clone();
            }
            v
        })
        .collect()
}

/// Extreme rays of `{y : equalities y = 0, y >= 0}` by support
/// enumeration: a nonzero `r >= 0` spans an extreme ray iff the system
/// obtained by forcing the complement of its support to zero has a
/// one-dimensional solution space.
pub fn support_rays_oracle(equalities: &[Vector], dim: usize) -> Vec<Vector> {
    let base: Vec<Vec<Rational>> = equalities
        .iter()
        .map(|r| r.entries().to_vec())
        .collect();
    let mut found: Vec<Vector> = Vec::new();
    for mask in 1u32..(1 << dim) {
        let mut rows = base.clone();
        for i in 0..dim {
            if mask & (1 << i) == 0 {
                let mut unit = vec![Rational::zero(); dim];
                unit[i] = Rational::one();
                rows.push(unit);
            }
        }
        let basis = nullspace_oracle(&rows, dim);
        if basis.len() != 1 {
            continue;
        }
        let v = Vector::new(basis.into_iter().next().unwrap()).expect("dim >= 1");
        let candidate = if v.is_nonneg() { v } else { v.neg() };
        if !candidate.is_nonneg() {
            continue;
        }
        let candidate = candidate.primitive();
        if !found.contains(&candidate) {
            found.push(candidate);
        }
    }
    found.sort_by(|a, b| a.entries().cmp(b.entries()));
    found
}

/// Whether `M x = b, x >= 0` has a solution, by enumerating candidate
/// supports and solving each square-ish subsystem exactly. Complete
/// because a feasible system has a basic solution whose support columns
/// are linearly independent.
pub fn basic_feasible_exists(m: &Matrix, b: &Vector) -> bool {
    if b.is_zero() {
        return true;
    }
    let (rows, cols) = (m.rows(), m.cols());
    for size in 1..=cols.min(rows) {
        for support in subsets_of_size(cols, size) {
            if let Some(x) = solve_unique_on_support(m, b, &support) {
                if x.iter().all(|v| !v.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Unique solution of `M_S x_S = b` when the support columns are
/// independent and the system is consistent; `None` otherwise.
fn solve_unique_on_support(m: &Matrix, b: &Vector, support: &[usize]) -> Option<Vec<Rational>> {
    let rows = m.rows();
    let width = support.len() + 1;
    let mut aug: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = support.iter().map(|&j| m[(i, j)].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref_oracle(&mut aug, width);
    if pivots.contains(&support.len()) {
        return None; // pivot in the augmented column: inconsistent
    }
    if pivots.len() != support.len() {
        return None; // dependent columns: a smaller support covers this
    }
    let mut x = vec![Rational::zero(); support.len()];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug[row][support.len()].clone();
    }
    Some(x)
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix {
    let data: Vec<Rational> = (0..rows * cols)
        .map(|_| int(rng.random_range(lo..=hi)))
        .collect();
    Matrix::new(rows, cols, data).expect("positive shape")
}

pub fn random_vector(rng: &mut StdRng, dim: usize, lo: i64, hi: i64) -> Vector {
    Vector::new((0..dim).map(|_| int(rng.random_range(lo..=hi))).collect()).expect("dim >= 1")
}

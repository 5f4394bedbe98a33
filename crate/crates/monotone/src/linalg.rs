//! Exact rational vectors, matrices, the componentwise partial order, and
//! row-reduction machinery.
//!
//! All arithmetic is over arbitrary-precision rationals; there are no
//! tolerances anywhere in the crate. Matrices are dense, row-major, and
//! immutable once constructed, so every value is safe to share across
//! threads. Degenerate shapes (zero rows or columns) are rejected at
//! construction.
//!
//! The central algorithm here is [`qap_decompose`]: for any matrix `A` it
//! produces an invertible `Q` and a permutation `P` with
//!
//! ```text
//! Q A P = [ I_k  S ]
//!         [ 0    0 ]
//! ```
//!
//! where `k = rank(A)`. The decomposition drives [`Matrix::inverse`],
//! [`left_nullspace_basis`], canonical solutions of `Ax = b`, and the
//! higher-level monotonicity and preimage decisions.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{Deserialize, Deserializer, Error as _};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::Error;

/// Exact arbitrary-precision rational scalar.
///
/// Always in canonical form: positive denominator, reduced fraction, zero
/// represented as `0/1`. The `num_rational` constructors maintain this.
pub type Rational = BigRational;

/// Rational from a numerator/denominator pair. Panics on a zero
/// denominator; intended for literals in tests and examples.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` with optional signs, rejecting `q = 0`.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let err = |reason: &str| Error::ParseRational {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = numer.parse().map_err(|_| err("bad numerator"))?;
    match denom {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
            if denom.is_zero() {
                return Err(err("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Column vector of rationals with at least one entry.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector {
    entries: Vec<Rational>,
}

/// Vector literal with integer entries: `rvec![1, -2, 0]`.
#[macro_export]
macro_rules! rvec {
    ( $( $e:expr ),+ $(,)? ) => {
        $crate::linalg::Vector::from_i64(&[ $( $e as i64 ),+ ])
    };
}

/// Matrix literal with integer entries: `mat![[4, 3], [1, 1]]`.
#[macro_export]
macro_rules! mat {
    ( $( [ $( $e:expr ),+ $(,)? ] ),+ $(,)? ) => {
        $crate::linalg::Matrix::from_i64(&[ $( &[ $( $e as i64 ),+ ][..] ),+ ])
    };
}

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { entries })
    }

    /// Panics on empty input; intended for literals.
    pub fn from_i64(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&x| int(x)).collect()).expect("nonempty vector literal")
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "vector must have at least one entry");
        Self {
            entries: vec![Rational::zero(); dim],
        }
    }

    /// Standard basis vector `e_k` (zero-based `k`).
    pub fn unit(dim: usize, k: usize) -> Self {
        assert!(k < dim, "unit index out of range");
        let mut v = Self::zeros(dim);
        v.entries[k] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_nonneg(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Index of the first strictly negative entry, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.entries.iter().position(|e| e.is_negative())
    }

    /// Index of the first strictly positive entry, if any.
    pub fn first_positive(&self) -> Option<usize> {
        self.entries.iter().position(|e| e.is_positive())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector addition dimension");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector subtraction dimension");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector {
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot product dimension");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Scales to the unique proportional integer vector with coprime
    /// entries and a positive leading nonzero entry. The zero vector is
    /// returned unchanged.
    pub fn primitive(&self) -> Vector {
        let mut lcm = BigInt::one();
        for e in &self.entries {
            lcm = lcm.lcm(e.denom());
        }
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = gcd.gcd(v);
        }
        if gcd.is_zero() {
            return self.clone();
        }
        if ints.iter().find(|v| !v.is_zero()).unwrap().is_negative() {
            gcd = -gcd;
        }
        Vector {
            entries: ints
                .into_iter()
                .map(|v| Rational::from_integer(v / &gcd))
                .collect(),
        }
    }
}

impl Index<usize> for Vector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            seq.serialize_element(&e.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let entries = raw
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Vector::new(entries).map_err(D::Error::custom)
    }
}

/// `true` iff `x_j <= y_j` for every coordinate `j`.
pub fn leq_vec(x: &Vector, y: &Vector) -> Result<bool, Error> {
    if x.dim() != y.dim() {
        return Err(Error::Dim {
            context: "componentwise order",
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(x.entries.iter().zip(&y.entries).all(|(a, b)| a <= b))
}

/// Dense row-major rational matrix, `rows >= 1` and `cols >= 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self, Error> {
        let Some(first) = rows.first() else {
            return Err(Error::Empty);
        };
        let cols = first.dim();
        for (i, r) in rows.iter().enumerate() {
            if r.dim() != cols {
                return Err(Error::Ragged {
                    row: i,
                    expected: cols,
                    found: r.dim(),
                });
            }
        }
        let m = rows.len();
        let data = rows.into_iter().flat_map(|r| r.entries).collect();
        Self::new(m, cols, data)
    }

    /// Panics on empty or ragged input; intended for literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let vs: Vec<Vector> = rows.iter().map(|r| Vector::from_i64(r)).collect();
        Self::from_rows(vs).expect("well-formed matrix literal")
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity needs n >= 1");
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        Self { rows: n, cols: n, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "zeros needs positive shape");
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vector {
        assert!(i < self.rows, "row index out of range");
        Vector {
            entries: self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn col(&self, j: usize) -> Vector {
        assert!(j < self.cols, "column index out of range");
        Vector {
            entries: (0..self.rows).map(|i| self[(i, j)].clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_mat(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product inner dimension");
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Rational::zero();
                for l in 0..self.cols {
                    acc += &self[(i, l)] * &rhs[(l, j)];
                }
                data.push(acc);
            }
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector product dimension");
        Vector {
            entries: (0..self.rows)
                .map(|i| {
                    let mut acc = Rational::zero();
                    for j in 0..self.cols {
                        acc += &self[(i, j)] * &v[j];
                    }
                    acc
                })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_nonneg(&self) -> bool {
        self.data.iter().all(|e| !e.is_negative())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Exactly one `1` per row and per column, zeros elsewhere.
    pub fn is_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut seen_col = vec![false; self.cols];
        for i in 0..self.rows {
            let mut ones = 0;
            for j in 0..self.cols {
                let e = &self[(i, j)];
                if e.is_one() {
                    ones += 1;
                    if seen_col[j] {
                        return false;
                    }
                    seen_col[j] = true;
                } else if !e.is_zero() {
                    return false;
                }
            }
            if ones != 1 {
                return false;
            }
        }
        true
    }

    /// Exact inverse, or [`Error::Singular`] when `rank < n`.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let dec = qap_decompose(self);
        if dec.rank < self.rows {
            return Err(Error::Singular);
        }
        // Full rank forces every column to be a pivot in order, so P = I
        // and Q A = I, making Q the inverse.
        Ok(dec.q)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, factor: &Rational) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = &self.data[idx] * factor;
        }
    }

    /// `row[target] += factor * row[source]`.
    fn row_axpy(&mut self, target: usize, source: usize, factor: &Rational) {
        for j in 0..self.cols {
            let t = &self.data[source * self.cols + j] * factor;
            let idx = target * self.cols + j;
            self.data[idx] = &self.data[idx] + t;
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let r = self.row(i);
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(deserializer)?;
        let rows = raw
            .iter()
            .map(|r| {
                let entries = r
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>, _>>()?;
                Vector::new(entries)
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Matrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Gauss-Jordan elimination in place. Scans columns left to right; for
/// each column takes the topmost unused row with a nonzero entry, swaps it
/// into place, scales the pivot to 1, and eliminates every other row. The
/// same row operations are mirrored onto `transform` when given. Returns
/// the pivot column indices in increasing order.
fn gauss_jordan(reduced: &mut Matrix, mut transform: Option<&mut Matrix>) -> Vec<usize> {
    let (m, n) = (reduced.rows, reduced.cols);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..n {
        if next_row == m {
            break;
        }
        let Some(pivot_row) = (next_row..m).find(|&i| !reduced[(i, col)].is_zero()) else {
            continue;
        };
        reduced.swap_rows(next_row, pivot_row);
        if let Some(t) = transform.as_deref_mut() {
            t.swap_rows(next_row, pivot_row);
        }
        let inv = reduced[(next_row, col)].recip();
        reduced.scale_row(next_row, &inv);
        if let Some(t) = transform.as_deref_mut() {
            t.scale_row(next_row, &inv);
        }
        for i in 0..m {
            if i == next_row || reduced[(i, col)].is_zero() {
                continue;
            }
            let factor = -reduced[(i, col)].clone();
            reduced.row_axpy(i, next_row, &factor);
            if let Some(t) = transform.as_deref_mut() {
                t.row_axpy(i, next_row, &factor);
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    pivots
}

/// Invertible `Q`, permutation `P`, and block `S` with
/// `Q A P = [I_k S; 0 0]`, `k = rank(A)`.
///
/// `s` is `None` when the block is empty (`k = 0` or `k = n`).
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct QapDecomposition {
    pub q: Matrix,
    pub p: Matrix,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Matrix>,
    pub rank: usize,
}

impl QapDecomposition {
    /// The target block `[I_k S; 0 0]`, shaped like the decomposed matrix.
    pub fn block(&self) -> Matrix {
        let (m, n, k) = (self.q.rows(), self.p.rows(), self.rank);
        let mut data = vec![Rational::zero(); m * n];
        for i in 0..k {
            data[i * n + i] = Rational::one();
        }
        if let Some(s) = &self.s {
            for i in 0..k {
                for j in 0..n - k {
                    data[i * n + k + j] = s[(i, j)].clone();
                }
            }
        }
        Matrix::new(m, n, data).expect("block shape")
    }

    /// Checks all structural invariants against the original matrix.
    pub fn verify(&self, a: &Matrix) -> bool {
        self.q.rows() == a.rows()
            && self.p.rows() == a.cols()
            && self.rank <= a.rows().min(a.cols())
            && self.q.inverse().is_ok()
            && self.p.is_permutation()
            && self.q.mul_mat(a).mul_mat(&self.p) == self.block()
    }

    /// Canonical solution of `A x = b` with every free variable set to
    /// zero, or `None` when `b` is outside the range of `A`.
    ///
    /// From `Q A P = [I_k S; 0 0]`: with `c = Q b`, solvability requires
    /// the bottom `m - k` entries of `c` to vanish, and then
    /// `x = P (c_1..c_k | 0)` solves the system.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(b.dim(), self.q.rows(), "right-hand side dimension");
        let c = self.q.mul_vec(b);
        if c.entries()[self.rank..].iter().any(|e| !e.is_zero()) {
            return None;
        }
        let n = self.p.rows();
        let mut ext = vec![Rational::zero(); n];
        ext[..self.rank].clone_from_slice(&c.entries()[..self.rank]);
        let ext = Vector::new(ext).expect("n >= 1");
        Some(self.p.mul_vec(&ext))
    }

    pub fn in_range(&self, b: &Vector) -> bool {
        assert_eq!(b.dim(), self.q.rows(), "right-hand side dimension");
        let c = self.q.mul_vec(b);
        c.entries()[self.rank..].iter().all(Zero::is_zero)
    }
}

/// Decomposes `A` as `Q A P = [I_k S; 0 0]` by Gauss-Jordan elimination.
///
/// Deterministic: the pivot rule is fixed (topmost unused row, columns
/// left to right) and `P` moves the pivot columns to the front preserving
/// their relative order. `Q` accumulates the elementary row operations.
pub fn qap_decompose(a: &Matrix) -> QapDecomposition {
    let mut reduced = a.clone();
    let mut q = Matrix::identity(a.rows());
    let pivots = gauss_jordan(&mut reduced, Some(&mut q));
    let k = pivots.len();
    let n = a.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();

    // Column j of A P is column order[j] of A.
    let order: Vec<usize> = pivots.iter().chain(free.iter()).copied().collect();
    let mut pdata = vec![Rational::zero(); n * n];
    for (j, &src) in order.iter().enumerate() {
        pdata[src * n + j] = Rational::one();
    }
    let p = Matrix::new(n, n, pdata).expect("permutation shape");

    let s = if k > 0 && k < n {
        let mut sdata = Vec::with_capacity(k * (n - k));
        for i in 0..k {
            for &j in &free {
                sdata.push(reduced[(i, j)].clone());
            }
        }
        Some(Matrix::new(k, n - k, sdata).expect("s shape"))
    } else {
        None
    };

    QapDecomposition { q, p, s, rank: k }
}

/// Rank of `A`.
pub fn rank(a: &Matrix) -> usize {
    let mut reduced = a.clone();
    gauss_jordan(&mut reduced, None).len()
}

/// Rank of a set of equally sized vectors; zero for the empty set.
pub fn rank_of_rows(rows: &[Vector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m = Matrix::from_rows(rows.to_vec()).expect("equal row dimensions");
    rank(&m)
}

/// Basis of the left nullspace `{u : u^T A = 0}` as primitive integer
/// vectors; empty when `A` has full row rank.
///
/// The bottom `m - k` rows of `Q` qualify: those rows of `Q A P` vanish
/// and `P` is invertible.
pub fn left_nullspace_basis(a: &Matrix) -> Vec<Vector> {
    let dec = qap_decompose(a);
    (dec.rank..a.rows())
        .map(|i| dec.q.row(i).primitive())
        .collect()
}

//! Dense linear algebra over a field: reduced row echelon form, nullspaces,
//! exact solves, minimum-norm least squares, and the matrix commutators used
//! by the representation engines.
//!
//! The same code runs over [`Rational`] (exact, zero tolerance) and `f64`
//! (pivots below [`F64_PIVOT_EPS`] relative to the column scale are treated
//! as zero).

use std::fmt;
use std::ops::{Add, Div, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{to_f64, Rational};

pub const F64_PIVOT_EPS: f64 = 1e-12;

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn magnitude(&self) -> f64;
    fn abs_val(&self) -> Self;
    fn is_negligible(&self) -> bool;
}

impl Field for Rational {
    const EXACT: bool = true;
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn magnitude(&self) -> f64 {
        to_f64(&self.abs())
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn is_negligible(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for f64 {
    const EXACT: bool = false;
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn is_negligible(&self) -> bool {
        self.abs() <= F64_PIVOT_EPS
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn matmul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_negligible() && T::EXACT {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if T::EXACT && b.is_negligible() {
                        continue;
                    }
                    let v = out[(i, j)].clone() + a.clone() * b.clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn add_mat(&self, other: &Matrix<T>) -> Matrix<T> {
        self.zip(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub_mat(&self, other: &Matrix<T>) -> Matrix<T> {
        self.zip(other, |a, b| a.clone() - b.clone())
    }

    fn zip(&self, other: &Matrix<T>, f: impl Fn(&T, &T) -> T) -> Matrix<T> {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|a| a.clone() * c.clone())
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix<T>) -> Matrix<T> {
        self.matmul(other).sub_mat(&other.matmul(self))
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Matrix<T>) -> Matrix<T> {
        self.matmul(other).add_mat(&other.matmul(self))
    }

    pub fn pow(&self, e: u32) -> Matrix<T> {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.matmul(self);
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Field::magnitude).fold(0.0, f64::max)
    }

    /// Largest entry magnitude restricted to the given row range.
    pub fn max_abs_rows(&self, rows: std::ops::RangeInclusive<usize>) -> f64 {
        let mut best: f64 = 0.0;
        for r in rows {
            if r >= self.rows {
                break;
            }
            for v in self.row(r) {
                best = best.max(v.magnitude());
            }
        }
        best
    }

    pub fn rref(&self) -> Rref<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = m.choose_pivot(row, col) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = T::one() / m[(row, col)].clone();
            for c in col..m.cols {
                let v = m[(row, c)].clone() * inv.clone();
                m[(row, c)] = v;
            }
            m[(row, col)] = T::one();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m[(r, col)].clone();
                if factor.is_negligible() {
                    if !T::EXACT {
                        m[(r, col)] = T::zero();
                    }
                    continue;
                }
                for c in col..m.cols {
                    let v = m[(r, c)].clone() - factor.clone() * m[(row, c)].clone();
                    m[(r, c)] = v;
                }
                m[(r, col)] = T::zero();
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn choose_pivot(&self, from_row: usize, col: usize) -> Option<usize> {
        if T::EXACT {
            (from_row..self.rows).find(|&r| !self[(r, col)].is_negligible())
        } else {
            let (best, mag) = (from_row..self.rows)
                .map(|r| (r, self[(r, col)].magnitude()))
                .fold((from_row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            (mag > F64_PIVOT_EPS).then_some(best)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{v : A v = 0}`. Each basis vector has a 1 in one free
    /// column and 0 in every other free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let Rref { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -matrix[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// A particular solution of `A x = b` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// The minimum-norm least-squares solution of `A x ≈ b`, i.e. the unique
    /// minimiser of `|Ax - b|` orthogonal to the nullspace of `A`.
    pub fn least_squares_min_norm(&self, b: &[T]) -> Vec<T> {
        let at = self.transpose();
        let normal = at.matmul(self);
        let rhs = at.mul_vec(b);
        let x0 = normal
            .solve(&rhs)
            .expect("normal equations are always consistent");
        let null = self.nullspace();
        if null.is_empty() {
            return x0;
        }
        // Project x0 onto the orthogonal complement of the nullspace.
        let n = Matrix::from_rows(null, self.cols).transpose();
        let nt = n.transpose();
        let gram = nt.matmul(&n);
        let coeffs = gram
            .solve(&nt.mul_vec(&x0))
            .expect("nullspace Gram matrix is invertible");
        let shift = n.mul_vec(&coeffs);
        x0.into_iter().zip(shift).map(|(a, s)| a - s).collect()
    }
}

pub struct Rref<T> {
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Field> Rref<T> {
    /// Non-zero rows of the reduced matrix.
    pub fn basis_rows(&self) -> Vec<Vec<T>> {
        (0..self.pivots.len())
            .map(|r| self.matrix.row(r).to_vec())
            .collect()
    }

    /// Eliminates this echelon basis's pivot columns from `v`.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let f = out[pc].clone();
            if f.is_negligible() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.matrix.row(r)) {
                *o = o.clone() - f.clone() * a.clone();
            }
        }
        out
    }
}

/// Reduced echelon basis of the span of `vectors` (all of length `cols`).
pub fn echelon_basis<T: Field>(vectors: &[Vec<T>], cols: usize) -> Rref<T> {
    Matrix::from_rows(vectors.to_vec(), cols).rref()
}

/// Canonical complement of `span(sub)` inside `span(space)`: every vector of
/// `space` is reduced against the echelon basis of `sub`, and the reduced
/// vectors are brought to reduced echelon form. The returned rows vanish on
/// the pivot columns of `sub`.
pub fn complement_basis<T: Field>(sub: &[Vec<T>], space: &[Vec<T>], cols: usize) -> Vec<Vec<T>> {
    let sub_ech = echelon_basis(sub, cols);
    let reduced: Vec<Vec<T>> = space.iter().map(|v| sub_ech.reduce(v)).collect();
    echelon_basis(&reduced, cols).basis_rows()
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

//! Exact dense linear algebra over the rationals.
//!
//! Everything here is elimination-based and allocation-heavy rather than
//! clever: the dimensions in this crate are tiny (n <= 9 in practice) and the
//! point is exactness, not speed.
//!
//! Convention for linear maps: a map is stored as the matrix whose row `i`
//! holds the coordinates of the image of the `i`-th basis vector. Applying a
//! map is therefore the row-vector product `x * M`.

use std::fmt;

use num::Zero;

use crate::error::Error;
use crate::rational::{rat, Rational};

/// Coordinate vector in a fixed basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    coords: Vec<Rational>,
}

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector { coords: vec![Rational::zero(); dim] }
    }

    /// The `i`-th standard basis vector, 0-based.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(dim);
        v.coords[i] = rat(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, value: Rational) {
        self.coords[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn neg(&self) -> Vector {
        Vector::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector::new(self.coords.iter().map(|a| a * factor).collect())
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        Matrix { rows: n_rows, cols: n_cols, data: rows.into_iter().flatten().collect() }
    }

    /// Integer-entry constructor, convenient in tests and fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    /// Standard matrix product.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Row-vector action `x * M`, the application convention for linear maps.
    pub fn apply_row(&self, x: &Vector) -> Result<Vector, Error> {
        if x.dim() != self.rows {
            return Err(Error::Dimension { expected: self.rows, got: x.dim() });
        }
        let mut out = Vector::zero(self.cols);
        for i in 0..self.rows {
            let xi = x.get(i);
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let m = self.get(i, j);
                if !m.is_zero() {
                    let cur = out.get(j) + xi * m;
                    out.set(j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Exact inverse by Gauss-Jordan elimination, or `Error::Singular`.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        assert!(self.is_square(), "only square matrices have inverses");
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work.get(r, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                work.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let scale = work.get(col, col).recip();
            work.scale_row(col, &scale);
            inv.scale_row(col, &scale);
            for r in 0..n {
                if r != col && !work.get(r, col).is_zero() {
                    let factor = work.get(r, col).clone();
                    work.sub_scaled_row(r, col, &factor);
                    inv.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for j in 0..self.cols {
            let v = self.get(r, j) * factor;
            self.set(r, j, v);
        }
    }

    /// row[r] -= factor * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Rational) {
        for j in 0..self.cols {
            let v = self.get(r, j) - factor * self.get(src, j);
            self.set(r, j, v);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Reduces `rows` in place to reduced row echelon form and returns the rank.
pub fn row_reduce(rows: &mut Vec<Vec<Rational>>) -> usize {
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v = &*v * &scale;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for j in 0..n_cols {
                    let v = &rows[r][j] - &factor * &rows[rank][j];
                    rows[r][j] = v;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of the solution space of `A x = 0`, for `A` given as equation rows
/// over `n_vars` unknowns. Free variables are set to 1 one at a time, in
/// ascending column order, so the result is deterministic.
pub fn nullspace(equations: &[Vec<Rational>], n_vars: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> =
        equations.iter().filter(|r| !r.iter().all(Rational::is_zero)).cloned().collect();
    for row in &rows {
        assert_eq!(row.len(), n_vars, "equation width must match variable count");
    }
    let rank = row_reduce(&mut rows);
    rows.truncate(rank);

    let mut pivot_cols = Vec::with_capacity(rank);
    for row in &rows {
        let col = row.iter().position(|v| !v.is_zero()).expect("nonzero row");
        pivot_cols.push(col);
    }

    let mut basis = Vec::new();
    for free in 0..n_vars {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); n_vars];
        v[free] = rat(1);
        for (row, &p) in rows.iter().zip(&pivot_cols) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    row_reduce(&mut work)
}

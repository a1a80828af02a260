//! Dense matrices over [`RatFunc`].

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Bindings, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: alloc::vec![RatFunc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn diag(entries: Vec<RatFunc>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// Matrix unit with a single 1 at `(i, j)` (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i, j, RatFunc::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> RatFunc>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: RatFunc) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<RatFunc>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RatFunc)> {
        let c = self.cols;
        self.data.iter().enumerate().map(move |(k, x)| (k / c, k % c, x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RatFunc::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .entries()
                .all(|(i, j, x)| if i == j { x.is_one() } else { x.is_zero() })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && self.entries().all(|(i, j, x)| i == j || x.is_zero())
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn map<F: FnMut(&RatFunc) -> RatFunc>(&self, mut f: F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| if x.is_zero() { RatFunc::zero() } else { f(x) }).collect(),
        }
    }

    pub fn try_map<F: FnMut(&RatFunc) -> Result<RatFunc>>(&self, mut f: F) -> Result<Self> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            data.push(if x.is_zero() { RatFunc::zero() } else { f(x)? });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        if c.is_one() {
            return self.clone();
        }
        self.map(|x| x * c)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn specialize(&self, b: &Bindings) -> Result<Self> {
        self.try_map(|x| x.specialize(b))
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Matrix) -> Self {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut m = Self::zeros(r, c);
        for (i, j, x) in self.entries() {
            if x.is_zero() {
                continue;
            }
            for (k, l, y) in o.entries() {
                if y.is_zero() {
                    continue;
                }
                m.set(i * o.rows + k, j * o.cols + l, x * y);
            }
        }
        m
    }

    /// Kronecker product of a list of factors.
    pub fn kron_all<'a, I: IntoIterator<Item = &'a Matrix>>(factors: I) -> Self {
        let mut it = factors.into_iter();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Self::identity(1),
        };
        it.fold(first, |acc, m| acc.kron(m))
    }

    pub fn try_mul(&self, o: &Matrix) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: o.rows,
            });
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    let prod = a * b;
                    out.data[idx] = &out.data[idx] + &prod;
                }
            }
        }
        Ok(out)
    }

    fn zip_with<F: Fn(&RatFunc, &RatFunc) -> RatFunc>(&self, o: &Matrix, f: F) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "matrix shapes differ"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(x, y)| f(x, y)).collect(),
        }
    }

    /// `self·o − c·o·self`.
    pub fn q_commutator(&self, o: &Matrix, c: &RatFunc) -> Self {
        &(self * o) - &(o * self).scale(c)
    }

    /// `self·o − o·self`.
    pub fn commutator(&self, o: &Matrix) -> Self {
        &(self * o) - &(o * self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Reduced row echelon form over the function field. Among the candidate
    /// rows of each column the entry of smallest [`RatFunc::weight`] is used
    /// as pivot. Returns the reduced matrix and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let best = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| (m.get(i, c).weight(), i));
            let Some(p) = best else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is non-zero");
            for j in c..m.cols {
                let x = m.get(r, j);
                if !x.is_zero() {
                    let y = x * &inv;
                    m.set(r, j, y);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let y = m.get(r, j);
                    if y.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * y);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Rows `rows` of `self`, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[Matrix]) -> Result<Self> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if let Some(b) = blocks.iter().find(|b| b.rows != rows) {
            return Err(Error::DimensionMismatch {
                expected: rows,
                found: b.rows,
            });
        }
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for (i, j, x) in b.entries() {
                if !x.is_zero() {
                    m.set(i, off + j, x.clone());
                }
            }
            off += b.cols;
        }
        Ok(m)
    }

    /// Position of the first non-zero entry.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries().find(|(_, _, x)| !x.is_zero()).map(|(i, j, _)| (i, j))
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, o: &'a Matrix) -> Matrix {
        self.try_mul(o).expect("matrix shapes are compatible")
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, o: &'a Matrix) -> Matrix {
        self.zip_with(o, |x, y| x + y)
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, o: &'a Matrix) -> Matrix {
        self.zip_with(o, |x, y| x - y)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|x| -x)
    }
}

macro_rules! owned_mat_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, o: Matrix) -> Matrix {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, o: &'a Matrix) -> Matrix {
                (&self).$m(o)
            }
        }
    };
}
owned_mat_ops!(Add, add);
owned_mat_ops!(Sub, sub);
owned_mat_ops!(Mul, mul);

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A square matrix acting on `V^{⊗legs}` (optionally tensored with a module
/// factor of dimension `module_dim` on the left), where `V` is the natural
/// representation of U_q(sl(n+1)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub n: usize,
    pub legs: usize,
    pub matrix: Matrix,
}

impl RepMatrix {
    pub fn new(n: usize, legs: usize, matrix: Matrix) -> Result<Self> {
        let dim = (n + 1).pow(legs as u32);
        if !matrix.is_square() || matrix.rows() % dim != 0 {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: matrix.rows(),
            });
        }
        Ok(RepMatrix { n, legs, matrix })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Var;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    #[test]
    fn rank_of_generic_and_degenerate() {
        let m = Matrix::from_rows(alloc::vec![
            alloc::vec![q(), RatFunc::one()],
            alloc::vec![RatFunc::one(), q().inv().unwrap()],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(Matrix::identity(3).rank(), 3);
    }

    #[test]
    fn kron_shapes_and_entries() {
        let a = Matrix::unit(2, 0, 1);
        let b = Matrix::diag(alloc::vec![q(), RatFunc::one()]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(0, 2), q());
        assert_eq!(*k.get(1, 3), RatFunc::one());
        assert_eq!(k.nonzero_count(), 2);
    }

    #[test]
    fn rref_pivots() {
        let m = Matrix::from_rows(alloc::vec![
            alloc::vec![RatFunc::zero(), RatFunc::var(Var::A), RatFunc::one()],
            alloc::vec![RatFunc::zero(), RatFunc::one(), RatFunc::zero()],
        ])
        .unwrap();
        let (r, piv) = m.rref();
        assert_eq!(piv, alloc::vec![1, 2]);
        assert_eq!(*r.get(0, 1), RatFunc::one());
        assert!(r.get(0, 2).is_zero());
    }
}

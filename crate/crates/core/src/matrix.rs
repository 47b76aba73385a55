//! Dense matrices over [`Scalar`] with exact elimination.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        Matrix::from_rows(rows).expect("rectangular literal")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Scalar::one())
    }

    pub fn add(&self, o: &Matrix) -> Result<Matrix> {
        self.same_shape(o)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &Matrix) -> Result<Matrix> {
        self.same_shape(o)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, o: &Matrix) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::DimensionMismatch("vstack column count".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols, data })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        Ok(self.transpose().vstack(&other.transpose())?.transpose())
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m[(a.rows + i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(r, j)] * &factor;
                    m[(i, j)] -= &v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            let inv = pivot.inv()?;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] * &inv;
                for j in c..n {
                    let v = &m[(c, j)] * &factor;
                    m[(i, j)] -= &v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(r.submatrix(&rows, &cols))
    }

    /// One solution `X` of `self · X = rhs`, if the system is consistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        let aug = self.hstack(rhs).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    /// Basis of the right null space, one vector per column of the result.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (idx, &f) in free.iter().enumerate() {
            k[(f, idx)] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                k[(p, idx)] = -&r[(row, f)];
            }
        }
        k
    }

    /// Pfaffian of an antisymmetric matrix (zero for odd size).
    pub fn pfaffian(&self) -> Result<Scalar> {
        if !self.is_antisymmetric() {
            return Err(Error::InvalidForm("pfaffian needs an antisymmetric matrix".into()));
        }
        let n = self.rows;
        if n % 2 == 1 {
            return Ok(Scalar::zero());
        }
        let mut m = self.clone();
        let mut pf = Scalar::one();
        let mut k = 0;
        while k < n {
            // bring a nonzero entry into position (k, k+1) by a symmetric swap
            let Some(p) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != k + 1 {
                m.swap_rows(p, k + 1);
                m.swap_cols(p, k + 1);
                pf = -pf;
            }
            let pivot = m[(k, k + 1)].clone();
            pf *= &pivot;
            let inv = pivot.inv()?;
            // congruence eliminating the rest of rows/cols k and k+1
            for i in k + 2..n {
                let a = &m[(k, i)] * &inv;
                let b = &m[(k + 1, i)] * &inv;
                // col_i -= a·col_{k+1} - b·col_k ; row_i likewise
                if !a.is_zero() {
                    m.add_congruence(i, k + 1, &-a.clone());
                }
                if !b.is_zero() {
                    m.add_congruence(i, k, &b);
                }
            }
            k += 2;
        }
        Ok(pf)
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i += c·row_j and col_i += c·col_j.
    fn add_congruence(&mut self, i: usize, j: usize, c: &Scalar) {
        for col in 0..self.cols {
            let v = &self[(j, col)] * c;
            self[(i, col)] += &v;
        }
        for row in 0..self.rows {
            let v = &self[(row, j)] * c;
            self[(row, i)] += &v;
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    /// Panics on a shape mismatch; use [`Matrix::try_mul`] for fallible use.
    fn mul(self, o: &Matrix) -> Matrix {
        self.try_mul(o).expect("matrix shapes")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let a = Matrix::from_ints(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.det().unwrap(), Scalar::one());
        assert_eq!(&a * &a.inverse().unwrap(), Matrix::identity(2));
        let s = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.cols(), 2);
        assert!((&a * &k).is_zero());
    }

    #[test]
    fn pfaffian_of_standard_forms() {
        let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        assert_eq!(j.pfaffian().unwrap(), Scalar::one());
        let m = Matrix::from_ints(&[&[0, 1, 2, 3], &[-1, 0, 4, 5], &[-2, -4, 0, 6], &[-3, -5, -6, 0]]);
        // a12 a34 - a13 a24 + a14 a23 = 6 - 10 + 12
        assert_eq!(m.pfaffian().unwrap(), Scalar::from_int(8));
        assert_eq!(m.pfaffian().unwrap().pow(2), m.det().unwrap());
        let swapped = Matrix::from_ints(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]);
        assert_eq!(swapped.pfaffian().unwrap(), -Scalar::one());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&Matrix::from_ints(&[&[1], &[2]])).is_none());
        let x = a.solve(&Matrix::from_ints(&[&[3], &[3]])).unwrap();
        assert_eq!(&a * &x, Matrix::from_ints(&[&[3], &[3]]));
    }
}

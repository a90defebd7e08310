use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// # Panics
    /// If the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "row vector of length {} against {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![Scalar::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += vi * a;
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix against vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-exact elimination; `None` for non-square input.
    pub fn determinant(&self) -> Option<Scalar> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Some(Scalar::zero());
            };
            if p != c {
                for j in 0..n {
                    let t = a[(p, j)].clone();
                    a[(p, j)] = a[(c, j)].clone();
                    a[(c, j)] = t;
                }
                det = -det;
            }
            let pivot = a[(c, c)].clone();
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = &a[(r, c)] / &pivot;
                for j in c..n {
                    let v = &a[(c, j)] * &f;
                    a[(r, j)] -= v;
                }
            }
            det *= pivot;
        }
        Some(det)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let r = rref(&aug);
        if r.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) || r.rank < n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r.matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Basis of `{v : A v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let r = rref(self);
        let mut is_pivot = vec![false; self.cols];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[free] = Scalar::one();
                for (row, &p) in r.pivots.iter().enumerate() {
                    v[p] = -r.matrix[(row, free)].clone();
                }
                v
            })
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form; zero rows sit at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

/// Exact Gauss-Jordan elimination, pivoting on the first nonzero entry.
pub fn rref(a: &Matrix) -> Rref {
    let mut rows: Vec<Vec<Scalar>> = a.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r][c..].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: Matrix::from_rows_sized(rows, a.rows, a.cols),
        rank: r,
        pivots,
    }
}

impl Matrix {
    fn from_rows_sized(rows: Vec<Vec<Scalar>>, nrows: usize, ncols: usize) -> Self {
        Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

/// One solution of `A x = b` with every free variable set to zero.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    if b.len() != a.rows {
        return Err(Error::Dimension(format!(
            "{}x{} system with right-hand side of length {}",
            a.rows,
            a.cols,
            b.len()
        )));
    }
    let mut aug = Matrix::zeros(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols)] = b[i].clone();
    }
    let r = rref(&aug);
    if r.pivots.last() == Some(&a.cols) {
        return Err(Error::Incompatible);
    }
    let mut x = vec![Scalar::zero(); a.cols];
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.matrix[(row, a.cols)].clone();
    }
    Ok(x)
}

//! Dense matrices over a [`Field`] and exact Gauss-Jordan elimination.
//!
//! Pivots are always the first nonzero entry of a column at or below the
//! current row, so every result (null-space basis, inverse) is reproducible.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// What [`solve_linear`] should compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    NullSpace,
    Rank,
    Invert,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    /// A basis of the kernel, one vector per free column.
    NullSpace(Vec<Vec<Scalar>>),
    Rank(usize),
    Inverse(Matrix),
}

pub fn solve_linear(a: &Matrix, mode: SolveMode) -> Result<LinearSolution> {
    Ok(match mode {
        SolveMode::NullSpace => LinearSolution::NullSpace(a.null_space()),
        SolveMode::Rank => LinearSolution::Rank(a.rank()),
        SolveMode::Invert => LinearSolution::Inverse(a.inverse()?),
    })
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn diagonal(field: Field, entries: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, entries.len(), entries.len());
        for (i, d) in entries.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to shape a matrix with no rows.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if row.iter().any(|s| !field.contains(s)) {
                return Err(Error::FieldMismatch);
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has {} entries, expected {rows}",
                    c.len()
                )));
            }
            for (i, s) in c.iter().enumerate() {
                if !field.contains(s) {
                    return Err(Error::FieldMismatch);
                }
                m[(i, j)] = s.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, rows).expect("rectangular integer matrix")
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diagonal(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Copy of the sub-block with rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m[(i - r0, j - c0)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    let delta = &factor * &self[(r, j)];
                    self[(i, j)] = &self[(i, j)] - &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn reduced(&self) -> (Matrix, Vec<usize>) {
        let mut r = self.clone();
        let pivots = r.rref();
        (r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Kernel basis: one vector per non-pivot column, with a 1 in that column.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let mut r = self.clone();
        let pivots = r.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let pivots = aug.rref();
        if pivots.iter().filter(|&&p| p < n).count() < n {
            return Err(Error::Singular);
        }
        Ok(aug.block(0, n, n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_has_full_rank_and_trivial_kernel() {
        let f3 = Field::prime(3);
        let id = Matrix::identity(f3, 3);
        assert_eq!(
            solve_linear(&id, SolveMode::Rank).unwrap(),
            LinearSolution::Rank(3)
        );
        assert_eq!(
            solve_linear(&id, SolveMode::NullSpace).unwrap(),
            LinearSolution::NullSpace(vec![])
        );
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn zero_matrix() {
        let q = Field::rationals();
        let z = Matrix::zeros(q, 2, 2);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.null_space().len(), 2);
        assert_eq!(
            solve_linear(&z, SolveMode::Invert).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn rank_one_kernel() {
        let q = Field::rationals();
        let a = Matrix::from_i64(q, &[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        let ns = a.null_space();
        assert_eq!(ns, vec![vec![q.from_i64(-2), q.from_i64(1)]]);
        // A·(−2, 1)ᵀ = 0
        assert!(a.mul_vec(&ns[0]).unwrap().iter().all(Scalar::is_zero));
        assert_eq!(a.inverse(), Err(Error::Singular));
    }

    #[test]
    fn inverse_over_f5() {
        let f5 = Field::prime(5);
        let a = Matrix::from_i64(f5, &[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(f5, 2));
    }

    #[test]
    fn shape_errors() {
        let q = Field::rationals();
        let a = Matrix::zeros(q, 2, 3);
        assert!(matches!(a.inverse(), Err(Error::DimensionMismatch(_))));
        assert!(a.mul(&a).is_err());
        assert!(Matrix::from_rows(q, 2, vec![vec![q.one()]]).is_err());
        assert_eq!(
            Matrix::from_rows(q, 1, vec![vec![Field::prime(3).one()]]),
            Err(Error::FieldMismatch)
        );
        let empty = Matrix::zeros(q, 0, 0);
        assert_eq!(empty.inverse().unwrap(), empty);
    }

    fn random_matrix(f: Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
        let data = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        // bias toward zeros so low ranks show up
                        if rand::Rng::gen_bool(rng, 0.4) {
                            f.zero()
                        } else {
                            f.random(rng)
                        }
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(f, cols, data).unwrap()
    }

    proptest! {
        #[test]
        fn rank_nullity(seed in any::<u64>(), rows in 0usize..6, cols in 0usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for f in [Field::rationals(), Field::prime(3), Field::prime(7)] {
                let a = random_matrix(f, rows, cols, &mut rng);
                let ns = a.null_space();
                prop_assert_eq!(a.rank() + ns.len(), cols);
                for v in &ns {
                    prop_assert!(a.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
                }
                if rows == cols {
                    match a.inverse() {
                        Ok(inv) => {
                            prop_assert_eq!(a.rank(), rows);
                            prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(f, rows));
                            prop_assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(f, rows));
                        }
                        Err(e) => {
                            prop_assert_eq!(e, Error::Singular);
                            prop_assert!(a.rank() < rows);
                        }
                    }
                }
            }
        }
    }
}

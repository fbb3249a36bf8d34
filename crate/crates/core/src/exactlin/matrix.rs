use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::exactlin::Scalar;

/// Dense row-major matrix of exact scalars. Zero-sized dimensions are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        Matrix::from_rows(rows).expect("ragged integer rows")
    }

    pub fn column_vector(v: &[Scalar]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn row_vector(v: &[Scalar]) -> Self {
        Matrix {
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = &self[(r, c)];
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{op}: {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(())
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {:?} · {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "apply: {:?} to vector of length {}",
                self.shape(),
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Kronecker product with the left factor as the most significant index.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols);
        for ar in 0..self.rows {
            for ac in 0..self.cols {
                let a = &self[(ar, ac)];
                if a.is_zero() {
                    continue;
                }
                for br in 0..other.rows {
                    for bc in 0..other.cols {
                        let b = &other[(br, bc)];
                        if !b.is_zero() {
                            out[(ar * other.rows + br, ac * other.cols + bc)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns, pivots chosen at the
    /// first nonzero entry of each column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip().expect("nonzero pivot");
            for c in 0..m.cols {
                let x = &m[(row, c)] * &inv;
                m[(row, c)] = x;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in 0..m.cols {
                    let delta = &factor * &m[(row, c)];
                    m[(r, c)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of {:?}",
                self.shape()
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            let inv = pivot.recip()?;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &inv;
                for c in col..n {
                    let delta = &factor * &m[(col, c)];
                    m[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss-Jordan elimination on `[m | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of {:?}",
                self.shape()
            )));
        }
        let n = self.rows;
        let augmented = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (reduced, pivots) = augmented.rref();
        // [m | I] always has rank n; m is invertible iff no pivot lands in I.
        if pivots.iter().any(|&p| p >= n) {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |r, c| reduced[(r, c + n)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Free-function form of [`Matrix::inverse`].
pub fn mat_inverse(m: &Matrix) -> Result<Matrix> {
    m.inverse()
}

/// Free-function form of [`Matrix::kron`].
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            Matrix::from_fn(n, n, |r, c| Scalar::from_int(v[r * n + c]))
        })
    }

    #[test]
    fn inverse_of_identity_and_involution() {
        assert_eq!(Matrix::identity(2).inverse().unwrap(), Matrix::identity(2));
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse().unwrap(), swap);
    }

    #[test]
    fn inverse_of_shear_multiplies_back() {
        let m = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Matrix::from_ints(&[&[1, -1], &[0, 1]]));
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_and_nonsquare() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
        assert_eq!(m.determinant().unwrap(), Scalar::zero());
        assert!(matches!(
            Matrix::zeros(2, 3).inverse(),
            Err(Error::DimensionMismatch(_))
        ));
        assert_eq!(Matrix::zeros(1, 1).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn empty_matrix_is_invertible() {
        let m = Matrix::zeros(0, 0);
        assert_eq!(m.inverse().unwrap(), m);
        assert_eq!(m.determinant().unwrap(), Scalar::one());
        assert!(m.is_identity());
    }

    #[test]
    fn kron_identities_and_scalars() {
        assert_eq!(
            Matrix::identity(2).kron(&Matrix::identity(3)),
            Matrix::identity(6)
        );
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let s = Matrix::from_ints(&[&[5]]);
        assert_eq!(a.kron(&s), a.scale(&Scalar::from_int(5)));
        assert_eq!(Matrix::zeros(0, 2).kron(&a).shape(), (0, 4));
    }

    #[test]
    fn determinant_of_known_matrix() {
        let m = Matrix::from_ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.determinant().unwrap(), Scalar::zero());
        let m = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant().unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn rref_picks_least_index_pivots() {
        let m = Matrix::from_ints(&[&[0, 2, 4], &[0, 1, 2], &[1, 0, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, Matrix::from_ints(&[&[1, 0, 1], &[0, 1, 2], &[0, 0, 0]]));
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(m in small_matrix(3)) {
            match m.inverse() {
                Ok(inv) => {
                    prop_assert!(m.mul(&inv).unwrap().is_identity());
                    prop_assert!(inv.mul(&m).unwrap().is_identity());
                    prop_assert!(!m.determinant().unwrap().is_zero());
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::SingularMatrix);
                    prop_assert!(m.determinant().unwrap().is_zero());
                }
            }
        }

        #[test]
        fn kron_is_associative(a in small_matrix(2), b in small_matrix(1), c in small_matrix(2)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn kron_mixed_product(
            a in small_matrix(2),
            b in small_matrix(3),
            v in proptest::collection::vec(-4i64..=4, 2),
            w in proptest::collection::vec(-4i64..=4, 3),
        ) {
            let v: Vec<Scalar> = v.into_iter().map(Scalar::from_int).collect();
            let w: Vec<Scalar> = w.into_iter().map(Scalar::from_int).collect();
            // v ⊗ w evaluated directly: index i * len(w) + j
            let vw: Vec<Scalar> = v.iter().flat_map(|x| w.iter().map(move |y| x * y)).collect();
            let lhs = a.kron(&b).apply(&vw).unwrap();
            let av = a.apply(&v).unwrap();
            let bw = b.apply(&w).unwrap();
            let rhs: Vec<Scalar> = av.iter().flat_map(|x| bw.iter().map(move |y| x * y)).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

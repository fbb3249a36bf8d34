use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

/// Rank-3 array of scalars indexed `(i, j, k)`, row-major with `k` fastest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 {
            dims: [d0, d1, d2],
            data: vec![Scalar::zero(); d0 * d1 * d2],
        }
    }

    pub fn from_fn(
        d0: usize,
        d1: usize,
        d2: usize,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(d0 * d1 * d2);
        for i in 0..d0 {
            for j in 0..d1 {
                for k in 0..d2 {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 {
            dims: [d0, d1, d2],
            data,
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Iterates `((i, j, k), value)` over nonzero entries in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        let [_, d1, d2] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(n, v)| ((n / (d1 * d2), (n / d2) % d1, n % d2), v))
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        let [d0, d1, d2] = self.dims;
        debug_assert!(i < d0 && j < d1 && k < d2);
        (i * d1 + j) * d2 + k
    }

    /// Contracts `v` against `axis`; the result keeps the other two axes in order.
    pub fn contract_vector(&self, axis: usize, v: &[Scalar]) -> Result<Matrix> {
        self.check_axis(axis, v.len())?;
        let [d0, d1, d2] = self.dims;
        Ok(match axis {
            0 => Matrix::from_fn(d1, d2, |j, k| {
                (0..d0).map(|i| &v[i] * &self[(i, j, k)]).sum()
            }),
            1 => Matrix::from_fn(d0, d2, |i, k| {
                (0..d1).map(|j| &v[j] * &self[(i, j, k)]).sum()
            }),
            _ => Matrix::from_fn(d0, d1, |i, j| {
                (0..d2).map(|k| &v[k] * &self[(i, j, k)]).sum()
            }),
        })
    }

    /// Applies `m` along `axis`: `out[.., a, ..] = Σ_x m[a][x] · t[.., x, ..]`.
    pub fn contract_matrix(&self, axis: usize, m: &Matrix) -> Result<Tensor3> {
        self.check_axis(axis, m.cols())?;
        let mut dims = self.dims;
        dims[axis] = m.rows();
        let reduced = self.dims[axis];
        Ok(Tensor3::from_fn(dims[0], dims[1], dims[2], |i, j, k| {
            (0..reduced)
                .map(|x| {
                    let (a, src) = match axis {
                        0 => (i, (x, j, k)),
                        1 => (j, (i, x, k)),
                        _ => (k, (i, j, x)),
                    };
                    &m[(a, x)] * &self[src]
                })
                .sum()
        }))
    }

    /// Flattens to a `d2 × (d0·d1)` matrix, the first two axes forming the
    /// column index with axis 0 most significant.
    pub fn to_matrix_last_out(&self) -> Matrix {
        let [d0, d1, d2] = self.dims;
        Matrix::from_fn(d2, d0 * d1, |k, col| self[(col / d1, col % d1, k)].clone())
    }

    /// Flattens to a `(d1·d2) × d0` matrix, the last two axes forming the row
    /// index with axis 1 most significant.
    pub fn to_matrix_first_in(&self) -> Matrix {
        let [d0, d1, d2] = self.dims;
        Matrix::from_fn(d1 * d2, d0, |row, i| self[(i, row / d2, row % d2)].clone())
    }

    fn check_axis(&self, axis: usize, len: usize) -> Result<()> {
        if axis > 2 {
            return Err(Error::DimensionMismatch(format!("axis {axis} out of range")));
        }
        if self.dims[axis] != len {
            return Err(Error::DimensionMismatch(format!(
                "axis {axis} has dimension {}, operand has {len}",
                self.dims[axis]
            )));
        }
        Ok(())
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Scalar {
        let o = self.offset(i, j, k);
        &mut self.data[o]
    }
}

/// Free-function form of [`Tensor3::contract_vector`].
pub fn contract(t: &Tensor3, axis: usize, v: &[Scalar]) -> Result<Matrix> {
    t.contract_vector(axis, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn zero_tensor_contracts_to_zero() {
        let t = Tensor3::zeros(2, 3, 2);
        assert!(t.contract_vector(1, &ints(&[1, 2, 3])).unwrap().is_zero());
        let m = Matrix::from_ints(&[&[1, 1], &[2, 0], &[0, 5]]);
        assert!(t.contract_matrix(2, &m).unwrap().is_zero());
    }

    #[test]
    fn delta_tensor_picks_slice() {
        // δ_{ijk} nonzero only at i = j = k = 0
        let mut t = Tensor3::zeros(2, 2, 2);
        t[(0, 0, 0)] = Scalar::one();
        let slice = t.contract_vector(0, &ints(&[1, 0])).unwrap();
        assert_eq!(slice, Matrix::from_ints(&[&[1, 0], &[0, 0]]));
        let other = t.contract_vector(0, &ints(&[0, 1])).unwrap();
        assert!(other.is_zero());
    }

    #[test]
    fn mismatched_axis_is_error() {
        let t = Tensor3::zeros(2, 3, 4);
        assert!(matches!(
            t.contract_vector(0, &ints(&[1, 2, 3])),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(t.contract_vector(3, &ints(&[1])).is_err());
    }

    #[test]
    fn flattenings() {
        let t = Tensor3::from_fn(2, 3, 1, |i, j, _| Scalar::from_int((10 * i + j) as i64));
        let m = t.to_matrix_last_out();
        assert_eq!(m, Matrix::from_ints(&[&[0, 1, 2, 10, 11, 12]]));
        let t = Tensor3::from_fn(1, 2, 3, |_, j, k| Scalar::from_int((10 * j + k) as i64));
        let m = t.to_matrix_first_in();
        assert_eq!(m.column(0), ints(&[0, 1, 2, 10, 11, 12]));
    }

    proptest! {
        #[test]
        fn double_contraction_order_independent(
            entries in proptest::collection::vec(-5i64..=5, 8),
            u in proptest::collection::vec(-5i64..=5, 2),
            v in proptest::collection::vec(-5i64..=5, 2),
            w in proptest::collection::vec(-5i64..=5, 2),
        ) {
            let t = Tensor3::from_fn(2, 2, 2, |i, j, k| Scalar::from_int(entries[i * 4 + j * 2 + k]));
            let (u, v, w) = (ints(&u), ints(&v), ints(&w));
            // oracle: direct triple loop
            let mut expected = Scalar::zero();
            for i in 0..2 { for j in 0..2 { for k in 0..2 {
                expected += &(&(&u[i] * &v[j]) * &w[k]) * &t[(i, j, k)];
            }}}
            let a = t.contract_vector(0, &u).unwrap().apply(&w).unwrap();
            let a: Scalar = a.iter().zip(&v).map(|(x, y)| x * y).sum();
            let b = t.contract_vector(2, &w).unwrap().transpose().apply(&u).unwrap();
            let b: Scalar = b.iter().zip(&v).map(|(x, y)| x * y).sum();
            prop_assert_eq!(&a, &expected);
            prop_assert_eq!(&b, &expected);
        }
    }
}

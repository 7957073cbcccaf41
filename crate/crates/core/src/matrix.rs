//! Minimal dense square matrix, just enough for benchmark rotations.

use crate::scalar::Scalar;

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    dim: usize,
    data: Vec<R>,
}

impl<R: Scalar> Matrix<R> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![R::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, R::one());
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> R {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, v: R) {
        self.data[row * self.dim + col] = v;
    }

    /// `y = M x`
    pub fn mul_vec(&self, x: &[R]) -> Vec<R> {
        debug_assert_eq!(x.len(), self.dim);
        let mut y = vec![R::zero(); self.dim];
        for r in 0..self.dim {
            let row = &self.data[r * self.dim..(r + 1) * self.dim];
            let mut acc = R::zero();
            for (m, &xv) in row.iter().zip(x) {
                acc = acc + *m * xv;
            }
            y[r] = acc;
        }
        y
    }

    /// Max-norm residual of `M^T M - I`; zero for exactly orthogonal matrices.
    pub fn orthogonality_residual(&self) -> R {
        let mut worst = R::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut dot = R::zero();
                for r in 0..self.dim {
                    dot = dot + self.get(r, i) * self.get(r, j);
                }
                let target = if i == j { R::one() } else { R::zero() };
                let resid = (dot - target).abs();
                if resid > worst {
                    worst = resid;
                }
            }
        }
        worst
    }
}

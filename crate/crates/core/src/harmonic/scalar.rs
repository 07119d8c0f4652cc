use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::rat::Rat;

/// Tolerance of the floating-point backend.
pub const COMPLEX_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Complex,
}

/// Field of scalars for finite-group computations: exact rationals, or
/// complex floats compared with [`COMPLEX_TOLERANCE`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rat(r: &Rat) -> Self;
    /// Exact zero test, or within tolerance for floats.
    fn is_negligible(&self) -> bool;

    fn close(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_negligible()
    }
}

impl Scalar for Rat {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Rat::ZERO
    }

    fn one() -> Self {
        Rat::ONE
    }

    fn from_int(n: i64) -> Self {
        Rat::from_int(n)
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Complex;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn from_rat(r: &Rat) -> Self {
        Complex64::new(r.to_f64(), 0.0)
    }

    fn is_negligible(&self) -> bool {
        self.norm() <= COMPLEX_TOLERANCE
    }
}

/// Square matrix over a [`Scalar`].
#[derive(Debug, Clone, PartialEq)]
pub struct SMat<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> SMat<S> {
    pub fn zeros(n: usize) -> Self {
        SMat {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(SMat {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SMat { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[S]>::to_vec)
            .collect()
    }

    pub fn mul(&self, other: &SMat<S>) -> SMat<S> {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        SMat::from_fn(self.n, |i, j| {
            (0..self.n).fold(S::zero(), |acc, k| {
                acc + self.get(i, k).clone() * other.get(k, j).clone()
            })
        })
    }

    pub fn add(&self, other: &SMat<S>) -> SMat<S> {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        SMat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &SMat<S>) -> SMat<S> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> SMat<S> {
        SMat {
            n: self.n,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn transpose(&self) -> SMat<S> {
        SMat::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> S {
        (0..self.n).fold(S::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn close(&self, other: &SMat<S>) -> bool {
        self.n == other.n && self.data.iter().zip(&other.data).all(|(a, b)| a.close(b))
    }

    pub fn is_negligible(&self) -> bool {
        self.data.iter().all(S::is_negligible)
    }

    /// Kronecker product, with `self` as the outer factor.
    pub fn kron(&self, other: &SMat<S>) -> SMat<S> {
        let (a, b) = (self.n, other.n);
        SMat::from_fn(a * b, |i, j| {
            self.get(i / b, j / b).clone() * other.get(i % b, j % b).clone()
        })
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<SMat<S>> {
        let n = self.n;
        let mut a = self.to_rows();
        let mut inv = SMat::<S>::identity(n).to_rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_negligible())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = a[col][j].clone() / p.clone();
                inv[col][j] = inv[col][j].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || a[r][col].is_negligible() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                    inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
                }
            }
        }
        SMat::from_rows(inv)
    }
}

impl SMat<Rat> {
    pub fn to_matrix(&self) -> crate::linalg::Matrix {
        crate::linalg::Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j).clone())
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_basics() {
        let r = |x: i64| Rat::from_int(x);
        let a = SMat::from_rows(vec![vec![r(1), r(2)], vec![r(3), r(4)]]).unwrap();
        assert_eq!(a.mul(&a.inverse().unwrap()), SMat::identity(2));
        assert_eq!(a.trace(), r(5));
        assert_eq!(a.kron(&SMat::identity(2)).size(), 4);
        assert_eq!(a.kron(&SMat::identity(2)).trace(), r(10));
        assert!(SMat::<Rat>::zeros(2).inverse().is_none());
        let c = SMat::from_rows(vec![vec![Complex64::new(0.0, 1.0)]]).unwrap();
        assert!(c.mul(&c.inverse().unwrap()).close(&SMat::identity(1)));
    }
}

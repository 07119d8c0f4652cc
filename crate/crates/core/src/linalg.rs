//! Exact dense linear algebra over `Rat`: rank, solves, and an incremental
//! echelon basis for span and membership questions.

use std::collections::BTreeMap;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.cols);
        for i in 0..self.rows {
            basis.insert(self.row(i).to_vec());
        }
        basis.rank()
    }

    /// Solves `self * x = rhs` for square nonsingular `self`; `None` if singular.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, self.cols, "solve needs a square matrix");
        assert_eq!(self.rows, rhs.len(), "right-hand side length mismatch");
        let n = self.rows;
        let mut a: Vec<Vec<Rat>> = self.to_rows();
        for (row, b) in a.iter_mut().zip(rhs) {
            row.push(b.clone());
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let inv = a[col][col].recip().unwrap();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    let (src, dst) = if r < col {
                        let (lo, hi) = a.split_at_mut(col);
                        (&hi[0], &mut lo[r])
                    } else {
                        let (lo, hi) = a.split_at_mut(r);
                        (&lo[col], &mut hi[0])
                    };
                    for (d, s) in dst.iter_mut().zip(src.iter()) {
                        if !s.is_zero() {
                            *d -= &factor * s;
                        }
                    }
                }
            }
        }
        Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Rat::ZERO; n];
            e[j] = Rat::ONE;
            cols.push(self.solve(&e)?);
        }
        Some(Matrix::from_fn(n, n, |i, j| cols[j][i].clone()))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced echelon basis of a growing set of vectors, stored sparsely.
///
/// Each basis vector has a pivot coordinate equal to one, and no other basis
/// vector is nonzero at that pivot.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    len: usize,
    rows: BTreeMap<usize, Vec<(usize, Rat)>>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut BTreeMap<usize, Rat>) {
        for (pivot, row) in &self.rows {
            let Some(c) = v.get(pivot).cloned() else {
                continue;
            };
            for (j, x) in row {
                let entry = v.entry(*j).or_insert(Rat::ZERO);
                *entry -= &c * x;
                if entry.is_zero() {
                    v.remove(j);
                }
            }
        }
    }

    fn sparse(&self, v: Vec<Rat>) -> BTreeMap<usize, Rat> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        v.into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    /// Adds `v`; returns `true` if it was independent of the current span.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        let mut s = self.sparse(v);
        self.reduce(&mut s);
        let Some((&pivot, lead)) = s.iter().next() else {
            return false;
        };
        let inv = lead.recip().unwrap();
        let row: Vec<(usize, Rat)> = s.into_iter().map(|(j, x)| (j, x * &inv)).collect();
        // keep the basis fully reduced at the new pivot
        for other in self.rows.values_mut() {
            let Some(pos) = other.iter().position(|(j, _)| *j == pivot) else {
                continue;
            };
            let c = other[pos].1.clone();
            let mut merged: BTreeMap<usize, Rat> = other.drain(..).collect();
            for (j, x) in &row {
                let e = merged.entry(*j).or_insert(Rat::ZERO);
                *e -= &c * x;
                if e.is_zero() {
                    merged.remove(j);
                }
            }
            *other = merged.into_iter().collect();
        }
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: Vec<Rat>) -> bool {
        let mut s = self.sparse(v);
        self.reduce(&mut s);
        s.is_empty()
    }

    /// Basis vectors in dense form, ordered by pivot.
    pub fn vectors(&self) -> Vec<Vec<Rat>> {
        self.rows
            .values()
            .map(|row| {
                let mut dense = vec![Rat::ZERO; self.len];
                for (j, x) in row {
                    dense[*j] = x.clone();
                }
                dense
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[Rat::ONE, Rat::ONE]).unwrap();
        assert_eq!(x, vec![Rat::new(2, 5), Rat::new(1, 5)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]])
            .solve(&[Rat::ONE, Rat::ONE])
            .is_none());
    }

    #[test]
    fn echelon_membership() {
        let mut b = EchelonBasis::new(3);
        let v = |x: [i64; 3]| x.iter().map(|&a| Rat::from_int(a)).collect::<Vec<_>>();
        assert!(b.insert(v([1, 1, 0])));
        assert!(b.insert(v([0, 1, 1])));
        assert!(!b.insert(v([1, 2, 1])));
        assert!(b.contains(v([2, 0, -2])));
        assert!(!b.contains(v([0, 0, 1])));
        assert_eq!(b.rank(), 2);
        for row in b.vectors() {
            assert!(b.contains(row));
        }
    }
}

//! Brute-force invariant dimensions in `E^(x k)` from Lie algebra generators.
//!
//! The invariants are the common kernel of the Leibniz action of a generating
//! set. Diagonal generators act diagonally on basis tensors, so they only
//! select which basis tensors may appear; the remaining generators are stacked
//! into one exact linear system over those candidates.
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits::{limits, Limits};
use crate::linalg::{EchelonBasis, Matrix};
use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleKind {
    SpecialLinear,
    Orthogonal,
    Symplectic,
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Rat::ONE;
    m
}

fn add(a: &Matrix, b: &Matrix, sign: i64) -> Matrix {
    Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        &a[(i, j)] + &(&b[(i, j)] * &Rat::from_int(sign))
    })
}

fn block(n: usize, h: usize, row: usize, col: usize, m: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for i in 0..h {
        for j in 0..h {
            out[(row * h + i, col * h + j)] = m[(i, j)].clone();
        }
    }
    out
}

/// A spanning set of the Lie algebra of the group acting on `k^n`.
///
/// `sp` uses the form `[[0, -I], [I, 0]]`, so `n` must be even there.
pub fn lie_generators(kind: OracleKind, n: usize) -> Result<Vec<Matrix>> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let mut gens = Vec::new();
    match kind {
        OracleKind::SpecialLinear => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        gens.push(elementary(n, i, j));
                    }
                }
            }
            for i in 0..n.saturating_sub(1) {
                gens.push(add(&elementary(n, i, i), &elementary(n, i + 1, i + 1), -1));
            }
        }
        OracleKind::Orthogonal => {
            for i in 0..n {
                for j in i + 1..n {
                    gens.push(add(&elementary(n, i, j), &elementary(n, j, i), -1));
                }
            }
        }
        OracleKind::Symplectic => {
            if !n.is_multiple_of(2) {
                return Err(Error::OddSymplecticDim(n));
            }
            let h = n / 2;
            for i in 0..h {
                for j in 0..h {
                    // [[A, 0], [0, -A^T]]
                    let a = elementary(h, i, j);
                    let neg_at = Matrix::from_fn(h, h, |r, c| -a[(c, r)].clone());
                    gens.push(add(&block(n, h, 0, 0, &a), &block(n, h, 1, 1, &neg_at), 1));
                    if i <= j {
                        let s = if i == j {
                            a.clone()
                        } else {
                            add(&a, &elementary(h, j, i), 1)
                        };
                        gens.push(block(n, h, 0, 1, &s));
                        gens.push(block(n, h, 1, 0, &s));
                    }
                }
            }
        }
    }
    Ok(gens)
}

fn is_diagonal(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()))
}

/// Dimension of the invariants of `SL_n`, `O_n` or `Sp_n` in `E^(x k)`, `E = k^n`.
///
/// `O_n` is disconnected, so besides `so_n` the reflection `diag(-1, 1, ..)` is
/// imposed as well.
pub fn lie_invariant_dim_oracle(kind: OracleKind, n: usize, k: usize) -> Result<usize> {
    let space = n.checked_pow(k as u32).ok_or(Error::BoundExceeded {
        what: "oracle space n^k",
        value: usize::MAX,
        max: limits().max_oracle_space,
    })?;
    Limits::check(space, limits().max_oracle_space, "oracle space n^k")?;
    let gens = lie_generators(kind, n)?;
    let (diag, off): (Vec<&Matrix>, Vec<&Matrix>) = gens.iter().partition(|m| is_diagonal(m));

    let decode = |mut flat: usize| {
        let mut idx = vec![0; k];
        for slot in idx.iter_mut().rev() {
            *slot = flat % n;
            flat /= n;
        }
        idx
    };
    let encode = |idx: &[usize]| idx.iter().fold(0, |acc, &i| acc * n + i);

    let candidates: Vec<usize> = (0..space)
        .filter(|&flat| {
            let idx = decode(flat);
            let weights_vanish = diag.iter().all(|d| {
                idx.iter()
                    .map(|&i| d[(i, i)].clone())
                    .sum::<Rat>()
                    .is_zero()
            });
            let reflection_fixed =
                kind != OracleKind::Orthogonal || idx.iter().filter(|&&i| i == 0).count() % 2 == 0;
            weights_vanish && reflection_fixed
        })
        .collect();
    if candidates.is_empty() {
        return Ok(0);
    }
    let column: HashMap<usize, usize> = candidates
        .iter()
        .enumerate()
        .map(|(c, &flat)| (flat, c))
        .collect();

    // rows of the stacked system: one per (generator, output basis tensor)
    let mut basis = EchelonBasis::new(candidates.len());
    for x in off {
        let mut rows: HashMap<usize, Vec<Rat>> = HashMap::new();
        for (c, &flat) in candidates.iter().enumerate() {
            let idx = decode(flat);
            for (slot, &j) in idx.iter().enumerate() {
                for r in 0..n {
                    let coeff = &x[(r, j)];
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut out = idx.clone();
                    out[slot] = r;
                    let row = rows
                        .entry(encode(&out))
                        .or_insert_with(|| vec![Rat::ZERO; candidates.len()]);
                    row[c] += coeff;
                }
            }
        }
        for (_, row) in rows {
            basis.insert(row);
            if basis.rank() == column.len() {
                return Ok(0);
            }
        }
    }
    Ok(candidates.len() - basis.rank())
}

#[cfg(test)]
mod tests {
    use super::super::metric::symplectic_form;
    use super::*;

    #[test]
    fn generators_preserve_forms() {
        for n in 1..=4 {
            for x in lie_generators(OracleKind::Orthogonal, n).unwrap() {
                assert_eq!(add(&x, &x.transpose(), 1), Matrix::zeros(n, n));
            }
        }
        for n in [2, 4, 6] {
            let h = symplectic_form(n);
            let gens = lie_generators(OracleKind::Symplectic, n).unwrap();
            assert_eq!(gens.len(), (n / 2) * (n + 1));
            for x in gens {
                assert_eq!(
                    add(&x.transpose().mul(&h), &h.mul(&x), 1),
                    Matrix::zeros(n, n)
                );
            }
        }
        assert!(lie_generators(OracleKind::Symplectic, 3).is_err());
    }

    #[test]
    fn known_dimensions() {
        use OracleKind::*;
        // SL_2: Catalan numbers on E^(x 2m); nothing in odd degree
        assert_eq!(lie_invariant_dim_oracle(SpecialLinear, 2, 2).unwrap(), 1);
        assert_eq!(lie_invariant_dim_oracle(SpecialLinear, 2, 4).unwrap(), 2);
        assert_eq!(lie_invariant_dim_oracle(SpecialLinear, 2, 6).unwrap(), 5);
        assert_eq!(lie_invariant_dim_oracle(SpecialLinear, 2, 3).unwrap(), 0);
        assert_eq!(lie_invariant_dim_oracle(SpecialLinear, 3, 3).unwrap(), 1);
        // O_n: pair partitions while n is large enough
        assert_eq!(lie_invariant_dim_oracle(Orthogonal, 3, 2).unwrap(), 1);
        assert_eq!(lie_invariant_dim_oracle(Orthogonal, 3, 4).unwrap(), 3);
        assert_eq!(lie_invariant_dim_oracle(Orthogonal, 2, 4).unwrap(), 3);
        assert_eq!(lie_invariant_dim_oracle(Orthogonal, 3, 3).unwrap(), 0);
        assert_eq!(lie_invariant_dim_oracle(Orthogonal, 1, 4).unwrap(), 1);
        // Sp_2 = SL_2
        assert_eq!(lie_invariant_dim_oracle(Symplectic, 2, 4).unwrap(), 2);
        assert_eq!(lie_invariant_dim_oracle(Symplectic, 4, 4).unwrap(), 3);
    }

    #[test]
    fn oracle_bound() {
        if limits().max_oracle_space == crate::limits::DEFAULT_MAX_ORACLE_SPACE {
            assert!(matches!(
                lie_invariant_dim_oracle(OracleKind::SpecialLinear, 4, 7),
                Err(Error::BoundExceeded { .. })
            ));
        }
    }
}

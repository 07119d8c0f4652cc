use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Tensor, Variance};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rat::Rat;

/// The group preserving a nondegenerate bilinear form on `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "O")]
    Orthogonal,
    #[serde(rename = "Sp")]
    Symplectic,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Orthogonal => "O",
            GroupKind::Symplectic => "Sp",
        })
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "o" | "orthogonal" => Ok(GroupKind::Orthogonal),
            "sp" | "symplectic" => Ok(GroupKind::Symplectic),
            _ => Err(Error::InvalidArgument(format!(
                "unknown group kind '{s}' (expected O or Sp)"
            ))),
        }
    }
}

/// The invariant form `g` (two covector axes) and its inverse `g_inv` (two
/// vector axes). `g` is the identity for `O` and `[[0, -I], [I, 0]]` for `Sp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    pub kind: GroupKind,
    pub dim: usize,
    pub g: Tensor,
    pub g_inv: Tensor,
}

impl Metric {
    pub fn g_matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.g.get(&[i, j]).clone())
    }

    pub fn g_inv_matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.g_inv.get(&[i, j]).clone())
    }

    /// Nonzero entries `(i, j, g[i][j])`.
    pub fn g_nonzeros(&self) -> Vec<(usize, usize, Rat)> {
        nonzero_pairs(&self.g)
    }

    pub fn g_inv_nonzeros(&self) -> Vec<(usize, usize, Rat)> {
        nonzero_pairs(&self.g_inv)
    }
}

fn nonzero_pairs(t: &Tensor) -> Vec<(usize, usize, Rat)> {
    t.nonzeros()
        .map(|(flat, x)| (flat / t.dim(), flat % t.dim(), x.clone()))
        .collect()
}

/// `[[0, -I], [I, 0]]` of size `dim`.
pub(crate) fn symplectic_form(dim: usize) -> Matrix {
    let h = dim / 2;
    Matrix::from_fn(dim, dim, |i, j| {
        if i < h && j == i + h {
            -Rat::ONE
        } else if i >= h && j + h == i {
            Rat::ONE
        } else {
            Rat::ZERO
        }
    })
}

pub fn metric(kind: GroupKind, dim: usize) -> Result<Metric> {
    if dim == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let g = match kind {
        GroupKind::Orthogonal => Matrix::identity(dim),
        GroupKind::Symplectic => {
            if !dim.is_multiple_of(2) {
                return Err(Error::OddSymplecticDim(dim));
            }
            symplectic_form(dim)
        }
    };
    let g_inv = g.inverse().expect("invariant forms are nondegenerate");
    let as_tensor = |m: &Matrix, v: Variance| {
        Tensor::from_fn(dim, vec![v, v], |idx| m[(idx[0], idx[1])].clone())
    };
    Ok(Metric {
        kind,
        dim,
        g: as_tensor(&g, Variance::Covector),
        g_inv: as_tensor(&g_inv, Variance::Vector),
    })
}

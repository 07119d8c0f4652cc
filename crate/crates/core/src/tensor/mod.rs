//! Dense exact tensors over `E = k^n` with variance-tagged axes.
//!
//! Entries are stored row-major: the first axis varies slowest. An element of
//! `End(E)^(x m) = E*^(x m) (x) E^(x m)` is laid out with its `m` covector axes
//! first and its `m` vector axes after them; factor `j` is the pair of axes
//! `(j, m + j)`.

mod metric;
mod oracle;

pub use metric::{metric, GroupKind, Metric};
pub use oracle::{lie_generators, lie_invariant_dim_oracle, OracleKind};

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::perm::{all_perms, factorial, Perm};
use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variance {
    Vector,
    Covector,
}

impl Variance {
    pub fn dual(self) -> Variance {
        match self {
            Variance::Vector => Variance::Covector,
            Variance::Covector => Variance::Vector,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Variance::Vector => "v",
            Variance::Covector => "c",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    axes: Vec<Variance>,
    entries: Vec<Rat>,
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: String = self.axes.iter().map(|a| a.tag()).collect();
        write!(
            f,
            "Tensor(dim={}, axes={}, nnz={})",
            self.dim,
            tags,
            self.nnz()
        )
    }
}

/// How [`Tensor::symmetrize`] permutes factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    Pure,
    Paired(usize),
}

impl Tensor {
    pub fn zeros(dim: usize, axes: Vec<Variance>) -> Self {
        assert!(dim >= 1, "tensor dimension must be positive");
        let len = dim
            .checked_pow(axes.len() as u32)
            .expect("tensor too large");
        Tensor {
            dim,
            axes,
            entries: vec![Rat::ZERO; len],
        }
    }

    pub fn scalar(dim: usize, value: Rat) -> Self {
        Tensor {
            dim,
            axes: Vec::new(),
            entries: vec![value],
        }
    }

    pub fn from_entries(dim: usize, axes: Vec<Variance>, entries: Vec<Rat>) -> Result<Self> {
        let expected = dim.checked_pow(axes.len() as u32);
        if dim == 0 || expected != Some(entries.len()) {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for dim {dim} with {} axes",
                entries.len(),
                axes.len()
            )));
        }
        Ok(Tensor { dim, axes, entries })
    }

    pub fn from_fn(dim: usize, axes: Vec<Variance>, mut f: impl FnMut(&[usize]) -> Rat) -> Self {
        let mut t = Tensor::zeros(dim, axes);
        let mut idx = vec![0; t.order()];
        for flat in 0..t.entries.len() {
            t.decode_into(flat, &mut idx);
            t.entries[flat] = f(&idx);
        }
        t
    }

    /// Basis vector `e_i` (zero-based).
    pub fn basis_vector(dim: usize, i: usize) -> Self {
        let mut t = Tensor::zeros(dim, vec![Variance::Vector]);
        t.entries[i] = Rat::ONE;
        t
    }

    /// `e_(i_1) (x) ... (x) e_(i_k)`.
    pub fn basis_tensor(dim: usize, indices: &[usize]) -> Self {
        let mut t = Tensor::zeros(dim, vec![Variance::Vector; indices.len()]);
        let flat = t.encode(indices);
        t.entries[flat] = Rat::ONE;
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Variance] {
        &self.axes
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
    }

    pub fn encode(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.order());
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn decode_into(&self, mut flat: usize, idx: &mut [usize]) {
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.dim;
            flat /= self.dim;
        }
    }

    pub fn decode(&self, flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.order()];
        self.decode_into(flat, &mut idx);
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &Rat {
        &self.entries[self.encode(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Rat) {
        let flat = self.encode(idx);
        self.entries[flat] = value;
    }

    fn check_same_shape(&self, other: &Tensor) -> Result<()> {
        if self.dim != other.dim || self.axes != other.axes {
            return Err(Error::ShapeMismatch(format!("{self:?} vs {other:?}")));
        }
        Ok(())
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (flat, x) in other.nonzeros() {
            out.entries[flat] += x;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.add(&other.scale(&-Rat::ONE))
    }

    pub fn scale(&self, c: &Rat) -> Tensor {
        let entries = if c.is_zero() {
            vec![Rat::ZERO; self.entries.len()]
        } else {
            self.entries
                .iter()
                .map(|x| if x.is_zero() { Rat::ZERO } else { x * c })
                .collect()
        };
        Tensor {
            dim: self.dim,
            axes: self.axes.clone(),
            entries,
        }
    }

    /// Adds `c * other` in place.
    pub fn axpy(&mut self, c: &Rat, other: &Tensor) -> Result<()> {
        self.check_same_shape(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (flat, x) in other.nonzeros() {
            self.entries[flat] += c * x;
        }
        Ok(())
    }

    /// Tensor product; axes of `self` come first.
    pub fn outer(&self, other: &Tensor) -> Result<Tensor> {
        if self.dim != other.dim {
            return Err(Error::ShapeMismatch(format!(
                "outer product of dims {} and {}",
                self.dim, other.dim
            )));
        }
        let mut axes = self.axes.clone();
        axes.extend_from_slice(&other.axes);
        let mut out = Tensor::zeros(self.dim, axes);
        let stride = other.entries.len();
        for (i, a) in self.nonzeros() {
            for (j, b) in other.nonzeros() {
                out.entries[i * stride + j] = a * b;
            }
        }
        Ok(out)
    }

    /// Moves the factor at slot `i` to slot `sigma(i)`:
    /// `sigma . (v_1 (x) ... (x) v_k) = v_(sigma^-1(1)) (x) ... (x) v_(sigma^-1(k))`.
    pub fn permute_factors(&self, sigma: &Perm) -> Result<Tensor> {
        if sigma.len() != self.order() {
            return Err(Error::ShapeMismatch(format!(
                "permutation of {} slots applied to a tensor with {} axes",
                sigma.len(),
                self.order()
            )));
        }
        for (i, &v) in self.axes.iter().enumerate() {
            if self.axes[sigma.apply(i)] != v {
                return Err(Error::ShapeMismatch(format!(
                    "permutation {sigma:?} mixes vector and covector axes"
                )));
            }
        }
        let mut out = Tensor::zeros(self.dim, self.axes.clone());
        let mut idx = vec![0; self.order()];
        let mut moved = vec![0; self.order()];
        for (flat, x) in self.nonzeros() {
            self.decode_into(flat, &mut idx);
            for (i, &v) in idx.iter().enumerate() {
                moved[sigma.apply(i)] = v;
            }
            let target = out.encode(&moved);
            out.entries[target] = x.clone();
        }
        Ok(out)
    }

    fn layout(&self) -> Result<Layout> {
        let k = self.order();
        if self
            .axes
            .iter()
            .all(|&a| a == self.axes.first().copied().unwrap_or(Variance::Vector))
        {
            return Ok(Layout::Pure);
        }
        let m = k / 2;
        if k.is_multiple_of(2)
            && self.axes[..m].iter().all(|&a| a == self.axes[0])
            && self.axes[m..].iter().all(|&a| a == self.axes[0].dual())
        {
            return Ok(Layout::Paired(m));
        }
        Err(Error::ShapeMismatch(format!(
            "cannot symmetrize {self:?}: axes must share one variance or be m of one kind followed by m of the other"
        )))
    }

    /// Averages over all permutations of the factors.
    ///
    /// For a pure tensor with `k` axes this is the projection onto symmetric
    /// tensors. For the paired layout (`m` axes of one variance followed by `m`
    /// of the other) each factor is an axis pair `(j, m + j)` and the pairs are
    /// permuted together, which is the projection onto `S^m End(E)`.
    pub fn symmetrize(&self) -> Result<Tensor> {
        let (slots, perms) = match self.layout()? {
            Layout::Pure => (self.order(), all_perms(self.order())),
            Layout::Paired(m) => (m, all_perms(m)),
        };
        let paired = slots != self.order();
        let count = Rat::from_bigint(factorial(slots));
        let mut out = Tensor::zeros(self.dim, self.axes.clone());
        let mut idx = vec![0; self.order()];
        let mut moved = vec![0; self.order()];
        for (flat, x) in self.nonzeros() {
            self.decode_into(flat, &mut idx);
            let share = x / &count;
            for p in &perms {
                for i in 0..slots {
                    let j = p.apply(i);
                    moved[j] = idx[i];
                    if paired {
                        moved[slots + j] = idx[slots + i];
                    }
                }
                let target = out.encode(&moved);
                out.entries[target] += &share;
            }
        }
        Ok(out)
    }

    /// Applies the matrix `m` to the given axis: `t'[.., i, ..] = sum_j m[i][j] t[.., j, ..]`.
    pub fn apply_on_axis(&self, axis: usize, m: &Matrix) -> Result<Tensor> {
        if axis >= self.order() || m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "matrix {}x{} on axis {axis} of {self:?}",
                m.rows(),
                m.cols()
            )));
        }
        let stride = self.dim.pow((self.order() - axis - 1) as u32);
        let columns: Vec<Vec<(usize, Rat)>> = (0..self.dim)
            .map(|j| {
                (0..self.dim)
                    .filter(|&i| !m[(i, j)].is_zero())
                    .map(|i| (i, m[(i, j)].clone()))
                    .collect()
            })
            .collect();
        let mut out = Tensor::zeros(self.dim, self.axes.clone());
        for (flat, x) in self.nonzeros() {
            let j = (flat / stride) % self.dim;
            let base = flat - j * stride;
            for (i, c) in &columns[j] {
                out.entries[base + i * stride] += c * x;
            }
        }
        Ok(out)
    }

    /// The natural action of an invertible `g`: vector axes transform by `g`,
    /// covector axes by `g^-T`.
    pub fn transform(&self, g: &Matrix) -> Result<Tensor> {
        let g_inv_t = g
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("transforming by a singular matrix".into()))?
            .transpose();
        let mut out = self.clone();
        for (axis, &v) in self.axes.iter().enumerate() {
            out = out.apply_on_axis(axis, if v == Variance::Vector { g } else { &g_inv_t })?;
        }
        Ok(out)
    }
}

/// See [`Tensor::permute_factors`].
pub fn permute_factors(t: &Tensor, sigma: &Perm) -> Result<Tensor> {
    t.permute_factors(sigma)
}

/// See [`Tensor::symmetrize`].
pub fn symmetrize(t: &Tensor) -> Result<Tensor> {
    t.symmetrize()
}

/// Full contraction of `u` against `v`; axis `i` of `u` must be dual to axis `i` of `v`.
pub fn contract_full(u: &Tensor, v: &Tensor) -> Result<Rat> {
    let dual =
        u.axes.len() == v.axes.len() && u.axes.iter().zip(&v.axes).all(|(a, b)| a.dual() == *b);
    if u.dim != v.dim || !dual {
        return Err(Error::ShapeMismatch(format!(
            "cannot contract {u:?} with {v:?}"
        )));
    }
    let (sparse, dense) = if u.nnz() <= v.nnz() { (u, v) } else { (v, u) };
    Ok(sparse
        .nonzeros()
        .filter(|(flat, _)| !dense.entries[*flat].is_zero())
        .map(|(flat, x)| x * &dense.entries[flat])
        .sum())
}

/// Applies `w in E*^(x m) (x) E^(x m)` to `v in E^(x m)` by contracting each
/// covector slot of `w` with the matching slot of `v`:
/// `(w . v)[b] = sum_a w[a; b] v[a]`.
///
/// For a symmetrized `w` this is the action of `S^m End(E)` on `E^(x m)`.
pub fn sym_end_action(w: &Tensor, v: &Tensor) -> Result<Tensor> {
    let m = v.order();
    let shape_ok = w.dim == v.dim
        && w.order() == 2 * m
        && v.axes.iter().all(|&a| a == Variance::Vector)
        && w.axes[..m].iter().all(|&a| a == Variance::Covector)
        && w.axes[m..].iter().all(|&a| a == Variance::Vector);
    if !shape_ok {
        return Err(Error::ShapeMismatch(format!(
            "cannot act with {w:?} on {v:?}"
        )));
    }
    let block = v.entries.len();
    let mut out = Tensor::zeros(v.dim, v.axes.clone());
    for (a, va) in v.nonzeros() {
        let row = &w.entries[a * block..(a + 1) * block];
        for (b, x) in row.iter().enumerate() {
            if !x.is_zero() {
                out.entries[b] += x * va;
            }
        }
    }
    Ok(out)
}

/// `D_0` inside `End(E)^(x n)`: each partial `d/dx_ij` at zero becomes the
/// elementary matrix sending `e_j` to `e_i`, and the product over a permutation
/// is symmetrized. Acting on `E^(x n)` it sends `e_(i_1) (x) ... (x) e_(i_n)` to
/// `(1/n!) sum_pi sgn(pi) e_(i_pi(1)) (x) ... (x) e_(i_pi(n))`.
pub fn cayley_zero_tensor(n: usize) -> Result<Tensor> {
    crate::limits::Limits::check(n, crate::limits::limits().max_dim, "matrix size n")?;
    let mut axes = vec![Variance::Covector; n];
    axes.extend(vec![Variance::Vector; n]);
    let mut raw = Tensor::zeros(n, axes);
    for p in all_perms(n) {
        // factor k is the elementary matrix with vector index k and covector index p(k)
        let mut idx = vec![0; 2 * n];
        for k in 0..n {
            idx[k] = p.apply(k);
            idx[n + k] = k;
        }
        let flat = raw.encode(&idx);
        raw.entries[flat] += Rat::from_int(p.sign());
    }
    raw.symmetrize()
}

//! Degree-`2m` components of the invariant integral of `O_n` and `Sp`.
//!
//! For each admissible cycle type `[sigma]` the tensor `w_sigma` is the
//! symmetrization in `S^(2m) End(E)` of `m` copies of the form `g` on the
//! covector side against `m` copies of `g^-1` on the vector side, paired up by
//! `sigma`; `a_sigma` is the corresponding element on the dual side. The
//! coefficients solve the Gram system
//! `sum_sigma lambda_sigma lambda_(sigma sigma') = 1` and the component is
//! `sum_sigma (lambda_sigma / n^#sigma) w_sigma`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{limits, Limits};
use crate::linalg::{EchelonBasis, Matrix};
use crate::perm::Perm;
use crate::rat::Rat;
use crate::tensor::{metric, sym_end_action, GroupKind, Metric, Tensor, Variance};

/// Parts of an integer partition, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "cycle type {parts:?} has a zero part"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn max_part(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }
}

impl TryFrom<Vec<usize>> for CycleType {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        CycleType::new(parts)
    }
}

impl From<CycleType> for Vec<usize> {
    fn from(ct: CycleType) -> Self {
        ct.0
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `m` with all parts `<= max_part`, in descending lexicographic order.
pub fn cycle_types(m: usize, max_part: usize) -> Vec<CycleType> {
    fn go(rest: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            out.push(CycleType(current.clone()));
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            current.push(part);
            go(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if max_part >= 1 || m == 0 {
        go(m, max_part, &mut Vec::new(), &mut out);
    }
    out
}

/// Class representative with cycles on consecutive points, in part order.
pub fn canonical_perm(ct: &CycleType) -> Perm {
    let mut cycles = Vec::new();
    let mut start = 0;
    for &part in ct.parts() {
        cycles.push((start..start + part).collect::<Vec<_>>());
        start += part;
    }
    Perm::from_cycles(start, &cycles).expect("consecutive cycles are disjoint")
}

/// `n^(number of cycles)`, the value of the invariant `sigma~` at the identity.
pub fn sigma_tilde_id(ct: &CycleType, n: usize) -> BigInt {
    num_traits::pow(BigInt::from(n), ct.num_parts())
}

/// Largest admissible cycle length: `n` for `O_n`, half the dimension for `Sp`.
pub fn max_part(kind: GroupKind, dim: usize) -> usize {
    match kind {
        GroupKind::Orthogonal => dim,
        GroupKind::Symplectic => dim / 2,
    }
}

fn check_admissible(ct: &CycleType, dim: usize, kind: GroupKind) -> Result<()> {
    let max = max_part(kind, dim);
    if ct.max_part() > max {
        return Err(Error::Inadmissible {
            parts: ct.parts().to_vec(),
            kind,
            dim,
            max_part: max,
        });
    }
    Ok(())
}

fn check_size(dim: usize, order: usize) -> Result<()> {
    let entries = dim.checked_pow(order as u32).unwrap_or(usize::MAX);
    Limits::check(
        entries,
        limits().max_tensor_entries,
        "tensor entries dim^(4m)",
    )
}

type Nonzeros = Vec<(usize, usize, Rat)>;

/// Product of metric entries, one factor per axis pair `(p, q)`, where the
/// pairs cover every axis exactly once.
fn pairing_tensor(dim: usize, axes: Vec<Variance>, pairs: &[(&Nonzeros, usize, usize)]) -> Tensor {
    fn go(
        t: &mut Tensor,
        pairs: &[(&Nonzeros, usize, usize)],
        level: usize,
        idx: &mut [usize],
        value: Rat,
    ) {
        if level == pairs.len() {
            t.set(idx, value);
            return;
        }
        let (entries, p, q) = pairs[level];
        for (i, j, x) in entries.iter() {
            idx[p] = *i;
            idx[q] = *j;
            go(t, pairs, level + 1, idx, &value * x);
        }
    }
    let mut t = Tensor::zeros(dim, axes);
    let mut idx = vec![0; t.order()];
    go(&mut t, pairs, 0, &mut idx, Rat::ONE);
    t
}

fn end_axes(m: usize, first: Variance) -> Vec<Variance> {
    let mut axes = vec![first; 2 * m];
    axes.extend(vec![first.dual(); 2 * m]);
    axes
}

/// Unsymmetrized `w_sigma` for an explicit permutation of `{0, .., m-1}`.
///
/// Axes: `2m` covectors then `2m` vectors. Covector pair `k` carries
/// `g[i_(2k+1), i_(2k)]`; vector pair `k` carries `g^-1[j_(2k), j_(2 sigma(k) + 1)]`.
pub fn w_tensor_for_perm(sigma: &Perm, met: &Metric) -> Result<Tensor> {
    let m = sigma.len();
    check_size(met.dim, 4 * m)?;
    let (g, gi) = (met.g_nonzeros(), met.g_inv_nonzeros());
    let mut pairs: Vec<(&Nonzeros, usize, usize)> =
        (0..m).map(|k| (&g, 2 * k + 1, 2 * k)).collect();
    pairs.extend((0..m).map(|k| (&gi, 2 * m + 2 * k, 2 * m + 2 * sigma.apply(k) + 1)));
    Ok(pairing_tensor(
        met.dim,
        end_axes(m, Variance::Covector),
        &pairs,
    ))
}

/// `a_sigma` for an explicit permutation: the coefficient tensor of the
/// polynomial `sigma~(T G^-1 T^t G)` in the entries of `T`.
///
/// Axes: `2m` vectors then `2m` covectors, dual to [`w_tensor_for_perm`].
pub fn a_tensor_for_perm(sigma: &Perm, met: &Metric) -> Result<Tensor> {
    let m = sigma.len();
    check_size(met.dim, 4 * m)?;
    let (g, gi) = (met.g_nonzeros(), met.g_inv_nonzeros());
    let mut pairs: Vec<(&Nonzeros, usize, usize)> =
        (0..m).map(|k| (&gi, 2 * k, 2 * k + 1)).collect();
    pairs.extend((0..m).map(|k| (&g, 2 * m + 2 * k + 1, 2 * m + 2 * sigma.apply(k))));
    Ok(pairing_tensor(
        met.dim,
        end_axes(m, Variance::Vector),
        &pairs,
    ))
}

/// The symmetrized `w_sigma` in `S^(2m) End(E)` for the canonical representative.
pub fn build_w_sigma(ct: &CycleType, dim: usize, kind: GroupKind) -> Result<Tensor> {
    check_admissible(ct, dim, kind)?;
    let met = metric(kind, dim)?;
    w_tensor_for_perm(&canonical_perm(ct), &met)?.symmetrize()
}

/// The representative `a_sigma` for the canonical permutation. It is left
/// unsymmetrized: the Gram pairing symmetrizes exactly one side.
pub fn build_a_sigma(ct: &CycleType, dim: usize, kind: GroupKind) -> Result<Tensor> {
    check_admissible(ct, dim, kind)?;
    let met = metric(kind, dim)?;
    a_tensor_for_perm(&canonical_perm(ct), &met)
}

/// `w_sigma(a_sigma') / (n^#sigma n^#sigma')` for explicit representatives.
pub fn gram_entry_for_perms(
    sigma: &Perm,
    sigma_prime: &Perm,
    dim: usize,
    kind: GroupKind,
) -> Result<Rat> {
    let met = metric(kind, dim)?;
    let w = w_tensor_for_perm(sigma, &met)?.symmetrize()?;
    let a = a_tensor_for_perm(sigma_prime, &met)?;
    let scale = num_traits::pow(
        BigInt::from(dim),
        sigma.cycles().len() + sigma_prime.cycles().len(),
    );
    Ok(crate::tensor::contract_full(&w, &a)? / Rat::from_bigint(scale))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub kind: GroupKind,
    pub dim: usize,
    pub degree: usize,
    pub classes: Vec<CycleType>,
    pub matrix: Matrix,
}

struct Pieces {
    classes: Vec<CycleType>,
    sym_w: Vec<Tensor>,
    gram: Matrix,
}

fn validate(m: usize, dim: usize, kind: GroupKind) -> Result<Metric> {
    if m == 0 {
        return Err(Error::InvalidArgument("degree m must be at least 1".into()));
    }
    check_size(dim, 4 * m)?;
    metric(kind, dim)
}

fn pieces(m: usize, dim: usize, kind: GroupKind) -> Result<Pieces> {
    let met = validate(m, dim, kind)?;
    let classes = cycle_types(m, max_part(kind, dim));
    let perms: Vec<Perm> = classes.iter().map(canonical_perm).collect();
    let mut sym_w = Vec::with_capacity(classes.len());
    for p in &perms {
        sym_w.push(w_tensor_for_perm(p, &met)?.symmetrize()?);
    }
    let scales: Vec<Rat> = classes
        .iter()
        .map(|ct| Rat::from_bigint(sigma_tilde_id(ct, dim)))
        .collect();
    let mut gram = Matrix::zeros(classes.len(), classes.len());
    for (j, p) in perms.iter().enumerate() {
        let a = a_tensor_for_perm(p, &met)?;
        for (i, w) in sym_w.iter().enumerate() {
            gram[(i, j)] = crate::tensor::contract_full(w, &a)? / (&scales[i] * &scales[j]);
        }
    }
    Ok(Pieces {
        classes,
        sym_w,
        gram,
    })
}

/// The matrix `lambda_(sigma sigma')` over the admissible cycle types of degree `m`.
pub fn gram_matrix(m: usize, dim: usize, kind: GroupKind) -> Result<GramMatrix> {
    let p = pieces(m, dim, kind)?;
    Ok(GramMatrix {
        kind,
        dim,
        degree: m,
        classes: p.classes,
        matrix: p.gram,
    })
}

/// Compares Gram entries at the canonical representatives with those at a
/// conjugate representative of every class.
pub fn check_representative_independence(m: usize, dim: usize, kind: GroupKind) -> Result<()> {
    let canonical = gram_matrix(m, dim, kind)?;
    // conjugating by the reversal moves every cycle off its consecutive block
    let reversal = Perm::from_images((0..m).rev().collect())?;
    let shift = Perm::from_cycles(m, &[(0..m).collect()])?;
    let tau = reversal.compose(&shift);
    let conjugate = |p: &Perm| tau.compose(p).compose(&tau.inverse());
    for (i, ci) in canonical.classes.iter().enumerate() {
        for (j, cj) in canonical.classes.iter().enumerate() {
            let (pi, pj) = (
                conjugate(&canonical_perm(ci)),
                conjugate(&canonical_perm(cj)),
            );
            let other = gram_entry_for_perms(&pi, &pj, dim, kind)?;
            if other != canonical.matrix[(i, j)] {
                return Err(Error::RepresentativeDependence {
                    kind,
                    dim,
                    degree: m,
                    detail: format!(
                        "entry ({ci}, {cj}) is {} at canonical representatives but {other} at {:?}, {:?}",
                        canonical.matrix[(i, j)],
                        pi.images(),
                        pj.images()
                    ),
                });
            }
        }
    }
    Ok(())
}

/// Coefficients of the symmetrized `w_sigma` in the degree-`2m` component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeingartenTable {
    pub kind: GroupKind,
    pub dim: usize,
    pub degree: usize,
    /// In the order of [`cycle_types`].
    pub coeffs: Vec<(CycleType, Rat)>,
}

impl WeingartenTable {
    pub fn get(&self, parts: &[usize]) -> Option<&Rat> {
        self.coeffs
            .iter()
            .find(|(ct, _)| ct.parts() == parts)
            .map(|(_, c)| c)
    }
}

fn solve(p: &Pieces, m: usize, dim: usize, kind: GroupKind) -> Result<Vec<Rat>> {
    let ones = vec![Rat::ONE; p.classes.len()];
    // sum_sigma lambda_sigma gram[sigma][sigma'] = 1 for every sigma'
    let lambda = p.gram.transpose().solve(&ones).ok_or(Error::SingularGram {
        kind,
        dim,
        degree: m,
    })?;
    Ok(lambda
        .into_iter()
        .zip(&p.classes)
        .map(|(l, ct)| l / Rat::from_bigint(sigma_tilde_id(ct, dim)))
        .collect())
}

pub fn weingarten_coefficients(m: usize, dim: usize, kind: GroupKind) -> Result<WeingartenTable> {
    let p = pieces(m, dim, kind)?;
    let coeffs = solve(&p, m, dim, kind)?;
    Ok(WeingartenTable {
        kind,
        dim,
        degree: m,
        coeffs: p.classes.into_iter().zip(coeffs).collect(),
    })
}

fn component_and_table(
    order: usize,
    dim: usize,
    kind: GroupKind,
) -> Result<(Tensor, Option<WeingartenTable>)> {
    metric(kind, dim)?;
    let mut axes = vec![Variance::Covector; order];
    axes.extend(vec![Variance::Vector; order]);
    if order == 0 {
        return Ok((Tensor::scalar(dim, Rat::ONE), None));
    }
    check_size(dim, 2 * order)?;
    if order % 2 == 1 {
        return Ok((Tensor::zeros(dim, axes), None));
    }
    let m = order / 2;
    let p = pieces(m, dim, kind)?;
    let coeffs = solve(&p, m, dim, kind)?;
    let mut out = Tensor::zeros(dim, axes);
    for (c, w) in coeffs.iter().zip(&p.sym_w) {
        out.axpy(c, w)?;
    }
    let table = WeingartenTable {
        kind,
        dim,
        degree: m,
        coeffs: p.classes.into_iter().zip(coeffs).collect(),
    };
    Ok((out, Some(table)))
}

/// The degree-`order` component of the invariant integral as an element of
/// `S^order End(E)`; zero in odd degree, the scalar 1 in degree 0.
pub fn integral_component(order: usize, dim: usize, kind: GroupKind) -> Result<Tensor> {
    Ok(component_and_table(order, dim, kind)?.0)
}

/// The projection of `E^(x order)` onto its invariants, built once and applied many times.
#[derive(Debug, Clone)]
pub struct InvariantProjector {
    pub kind: GroupKind,
    pub dim: usize,
    pub order: usize,
    component: Tensor,
    table: Option<WeingartenTable>,
}

impl InvariantProjector {
    pub fn new(kind: GroupKind, dim: usize, order: usize) -> Result<Self> {
        let (component, table) = component_and_table(order, dim, kind)?;
        Ok(InvariantProjector {
            kind,
            dim,
            order,
            component,
            table,
        })
    }

    pub fn component(&self) -> &Tensor {
        &self.component
    }

    /// Coefficients used for the component (`None` in odd degree and degree 0).
    pub fn table(&self) -> Option<&WeingartenTable> {
        self.table.as_ref()
    }

    pub fn apply(&self, v: &Tensor) -> Result<Tensor> {
        if v.dim() != self.dim
            || v.order() != self.order
            || v.axes().iter().any(|&a| a != Variance::Vector)
        {
            return Err(Error::ShapeMismatch(format!(
                "projector on E^(x {}) with dim {} applied to {v:?}",
                self.order, self.dim
            )));
        }
        sym_end_action(&self.component, v)
    }

    /// Echelon basis of the image, from the images of the standard basis.
    pub fn image_basis(&self) -> EchelonBasis {
        let len = self.dim.pow(self.order as u32);
        let mut basis = EchelonBasis::new(len);
        for a in 0..len {
            let column = &self.component.entries()[a * len..(a + 1) * len];
            if column.iter().any(|x| !x.is_zero()) {
                basis.insert(column.to_vec());
            }
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.image_basis().rank()
    }

    /// `P^2 = P`, checked as `P u = u` on a basis of the image of `P`.
    pub fn is_idempotent(&self) -> Result<bool> {
        for u in self.image_basis().vectors() {
            let t = Tensor::from_entries(self.dim, vec![Variance::Vector; self.order], u)?;
            if self.apply(&t)? != t {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the component is fixed by the natural action of `g`.
    pub fn is_fixed_by(&self, g: &Matrix) -> Result<bool> {
        Ok(self.component.transform(g)? == self.component)
    }
}

/// `P(v)` for `v in E^(x k)`; zero for odd `k`.
pub fn project_invariants(v: &Tensor, dim: usize, kind: GroupKind) -> Result<Tensor> {
    if v.dim() != dim {
        return Err(Error::ShapeMismatch(format!(
            "tensor of dim {} projected with dim {dim}",
            v.dim()
        )));
    }
    InvariantProjector::new(kind, dim, v.order())?.apply(v)
}

/// Generators of a finite-index subgroup's worth of rational group elements:
/// signed permutations for `O_n`; `J`, transvections and a block
/// `diag(A, A^-T)` for `Sp`.
pub fn rational_group_elements(kind: GroupKind, dim: usize) -> Result<Vec<Matrix>> {
    let met = metric(kind, dim)?;
    let mut out = Vec::new();
    match kind {
        GroupKind::Orthogonal => {
            for i in 0..dim.saturating_sub(1) {
                let mut images: Vec<usize> = (0..dim).collect();
                images.swap(i, i + 1);
                out.push(Matrix::from_fn(dim, dim, |r, c| {
                    if images[c] == r {
                        Rat::ONE
                    } else {
                        Rat::ZERO
                    }
                }));
            }
            let mut flip = Matrix::identity(dim);
            flip[(0, 0)] = -Rat::ONE;
            out.push(flip);
        }
        GroupKind::Symplectic => {
            let h = dim / 2;
            let form = met.g_matrix();
            out.push(form.clone());
            let mut directions: Vec<Vec<Rat>> = (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| if i == j { Rat::ONE } else { Rat::ZERO })
                        .collect()
                })
                .collect();
            let mut mixed = vec![Rat::ZERO; dim];
            mixed[0] = Rat::ONE;
            mixed[dim - 1] = Rat::from_int(2);
            directions.push(mixed);
            for u in directions {
                // I + u u^T H
                let uh: Vec<Rat> = (0..dim)
                    .map(|c| (0..dim).map(|k| &u[k] * &form[(k, c)]).sum())
                    .collect();
                out.push(Matrix::from_fn(dim, dim, |r, c| {
                    let id = if r == c { Rat::ONE } else { Rat::ZERO };
                    id + &u[r] * &uh[c]
                }));
            }
            if h >= 2 {
                let mut a = Matrix::identity(h);
                a[(0, 1)] = Rat::ONE;
                let a_inv_t = a.inverse().expect("unipotent").transpose();
                out.push(Matrix::from_fn(dim, dim, |r, c| match (r < h, c < h) {
                    (true, true) => a[(r, c)].clone(),
                    (false, false) => a_inv_t[(r - h, c - h)].clone(),
                    _ => Rat::ZERO,
                }));
            }
        }
    }
    Ok(out)
}

/// Spanning set `{sigma(g^-1 (x) ... (x) g^-1)}` of the invariants in `E^(x 2m)`.
#[derive(Debug, Clone)]
pub struct InvariantSpan {
    pub tensors: Vec<Tensor>,
    pub rank: usize,
}

fn pair_partitions(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = points.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (pos, &partner) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pos)
            .map(|(_, &x)| x)
            .collect();
        for mut tail in pair_partitions(&remaining) {
            tail.insert(0, (first, partner));
            out.push(tail);
        }
    }
    out
}

pub fn orthosymplectic_invariant_basis(
    m: usize,
    dim: usize,
    kind: GroupKind,
) -> Result<InvariantSpan> {
    let met = metric(kind, dim)?;
    check_size(dim, 2 * m)?;
    let gi = met.g_inv_nonzeros();
    let points: Vec<usize> = (0..2 * m).collect();
    let mut tensors: Vec<Tensor> = Vec::new();
    let mut basis = EchelonBasis::new(dim.pow(2 * m as u32));
    for partition in pair_partitions(&points) {
        let pairs: Vec<(&Nonzeros, usize, usize)> =
            partition.iter().map(|&(p, q)| (&gi, p, q)).collect();
        let t = pairing_tensor(dim, vec![Variance::Vector; 2 * m], &pairs);
        if !tensors.contains(&t) {
            basis.insert(t.entries().to_vec());
            tensors.push(t);
        }
    }
    Ok(InvariantSpan {
        tensors,
        rank: basis.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{contract_full, lie_invariant_dim_oracle, OracleKind};

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_cycle_types() {
        assert_eq!(cycle_types(2, 2), vec![ct(&[2]), ct(&[1, 1])]);
        assert_eq!(cycle_types(2, 1), vec![ct(&[1, 1])]);
        assert_eq!(cycle_types(3, 2), vec![ct(&[2, 1]), ct(&[1, 1, 1])]);
        assert_eq!(cycle_types(4, 4).len(), 5);
        assert_eq!(cycle_types(0, 1), vec![ct(&[])]);
    }

    #[test]
    fn representatives_and_sigma_tilde() {
        assert_eq!(canonical_perm(&ct(&[2, 1])).images(), &[1, 0, 2]);
        assert_eq!(canonical_perm(&ct(&[1, 1])), Perm::identity(2));
        assert_eq!(canonical_perm(&ct(&[3])).images(), &[1, 2, 0]);
        assert_eq!(sigma_tilde_id(&ct(&[1, 1]), 3), BigInt::from(9));
        assert_eq!(sigma_tilde_id(&ct(&[2]), 3), BigInt::from(3));
        assert_eq!(sigma_tilde_id(&ct(&[1]), 5), BigInt::from(5));
    }

    #[test]
    fn shapes() {
        let w = build_w_sigma(&ct(&[1]), 3, GroupKind::Orthogonal).unwrap();
        let a = build_a_sigma(&ct(&[1]), 3, GroupKind::Orthogonal).unwrap();
        assert_eq!(w.order(), 4);
        assert_eq!(
            a.axes(),
            &[
                Variance::Vector,
                Variance::Vector,
                Variance::Covector,
                Variance::Covector
            ]
        );
        assert!(!contract_full(&w, &a).unwrap().is_zero());
        assert!(matches!(
            build_w_sigma(&ct(&[2]), 2, GroupKind::Symplectic),
            Err(Error::Inadmissible { max_part: 1, .. })
        ));
    }

    #[test]
    fn degree_one_gram_is_one() {
        for (kind, dim) in [
            (GroupKind::Orthogonal, 2),
            (GroupKind::Orthogonal, 3),
            (GroupKind::Symplectic, 2),
            (GroupKind::Symplectic, 4),
        ] {
            let g = gram_matrix(1, dim, kind).unwrap();
            assert_eq!(g.matrix, Matrix::identity(1), "{kind} {dim}");
        }
    }

    #[test]
    fn degree_one_coefficients() {
        for dim in 2..=5 {
            let t = weingarten_coefficients(1, dim, GroupKind::Orthogonal).unwrap();
            assert_eq!(t.get(&[1]), Some(&Rat::new(1, dim as i64)));
        }
        for dim in [2, 4, 6] {
            let t = weingarten_coefficients(1, dim, GroupKind::Symplectic).unwrap();
            assert_eq!(t.get(&[1]), Some(&Rat::new(1, dim as i64)));
        }
    }

    #[test]
    fn degree_two_orthogonal_coefficients() {
        // Haar moments: c_(1,1) = 3(n+1) / (n(n-1)(n+2)), c_(2) = -6 / (n(n-1)(n+2))
        for n in 2..=5i64 {
            let t = weingarten_coefficients(2, n as usize, GroupKind::Orthogonal).unwrap();
            let den = n * (n - 1) * (n + 2);
            assert_eq!(t.get(&[1, 1]), Some(&Rat::new(3 * (n + 1), den)), "n={n}");
            assert_eq!(t.get(&[2]), Some(&Rat::new(-6, den)), "n={n}");
        }
        let g = gram_matrix(2, 3, GroupKind::Orthogonal).unwrap();
        assert!(g.matrix.is_symmetric());
    }

    #[test]
    fn degree_two_symplectic_coefficients() {
        let t = weingarten_coefficients(2, 4, GroupKind::Symplectic).unwrap();
        assert_eq!(t.get(&[1, 1]), Some(&Rat::new(9, 40)));
        assert_eq!(t.get(&[2]), Some(&Rat::new(-3, 20)));
        let t = weingarten_coefficients(2, 2, GroupKind::Symplectic).unwrap();
        assert_eq!(t.coeffs, vec![(ct(&[1, 1]), Rat::new(1, 2))]);
    }

    #[test]
    fn degenerate_one_dimensional_orthogonal() {
        let t = weingarten_coefficients(2, 1, GroupKind::Orthogonal).unwrap();
        assert_eq!(t.coeffs.len(), 1);
        assert_eq!(t.get(&[1, 1]), Some(&Rat::ONE));
    }

    #[test]
    fn normalization_system_holds() {
        for (kind, dim) in [(GroupKind::Orthogonal, 3), (GroupKind::Symplectic, 4)] {
            let comp = integral_component(4, dim, kind).unwrap();
            let met = metric(kind, dim).unwrap();
            for c in cycle_types(2, max_part(kind, dim)) {
                let a = a_tensor_for_perm(&canonical_perm(&c), &met).unwrap();
                let value =
                    contract_full(&comp, &a).unwrap() / Rat::from_bigint(sigma_tilde_id(&c, dim));
                assert_eq!(value, Rat::ONE, "{kind} {dim} {c}");
            }
        }
    }

    #[test]
    fn representative_independence() {
        check_representative_independence(3, 2, GroupKind::Orthogonal).unwrap();
        check_representative_independence(2, 3, GroupKind::Orthogonal).unwrap();
        check_representative_independence(2, 4, GroupKind::Symplectic).unwrap();
    }

    #[test]
    fn projection_examples() {
        let met = metric(GroupKind::Orthogonal, 3).unwrap();
        let v = Tensor::from_entries(3, vec![Variance::Vector; 2], met.g_inv.entries().to_vec())
            .unwrap();
        assert_eq!(project_invariants(&v, 3, GroupKind::Orthogonal).unwrap(), v);
        let anti = Tensor::basis_tensor(3, &[0, 1])
            .sub(&Tensor::basis_tensor(3, &[1, 0]))
            .unwrap();
        assert!(project_invariants(&anti, 3, GroupKind::Orthogonal)
            .unwrap()
            .is_zero());
        let odd = Tensor::basis_tensor(3, &[0, 1, 2]);
        assert!(project_invariants(&odd, 3, GroupKind::Orthogonal)
            .unwrap()
            .is_zero());
        let sp = metric(GroupKind::Symplectic, 4).unwrap();
        let w = Tensor::from_entries(4, vec![Variance::Vector; 2], sp.g_inv.entries().to_vec())
            .unwrap();
        assert_eq!(project_invariants(&w, 4, GroupKind::Symplectic).unwrap(), w);
    }

    #[test]
    fn literal_idempotence_on_the_standard_basis() {
        for (kind, dim) in [(GroupKind::Orthogonal, 2), (GroupKind::Symplectic, 2)] {
            let p = InvariantProjector::new(kind, dim, 4).unwrap();
            for flat in 0..dim.pow(4) {
                let mut idx = vec![0; 4];
                let mut f = flat;
                for slot in idx.iter_mut().rev() {
                    *slot = f % dim;
                    f /= dim;
                }
                let once = p.apply(&Tensor::basis_tensor(dim, &idx)).unwrap();
                assert_eq!(p.apply(&once).unwrap(), once);
            }
        }
    }

    #[test]
    fn projector_rank_matches_oracle_and_span() {
        for (kind, oracle, dim) in [
            (GroupKind::Orthogonal, OracleKind::Orthogonal, 2),
            (GroupKind::Orthogonal, OracleKind::Orthogonal, 3),
            (GroupKind::Symplectic, OracleKind::Symplectic, 2),
            (GroupKind::Symplectic, OracleKind::Symplectic, 4),
        ] {
            for order in [2, 4] {
                let p = InvariantProjector::new(kind, dim, order).unwrap();
                assert!(p.is_idempotent().unwrap());
                let expected = lie_invariant_dim_oracle(oracle, dim, order).unwrap();
                assert_eq!(p.rank(), expected, "{kind} dim={dim} order={order}");
                let span = orthosymplectic_invariant_basis(order / 2, dim, kind).unwrap();
                assert_eq!(span.rank, expected);
                let mut image = p.image_basis();
                for t in &span.tensors {
                    assert!(
                        !image.insert(t.entries().to_vec()),
                        "pair tensor outside the image"
                    );
                }
            }
        }
    }

    #[test]
    fn group_elements_are_in_the_group() {
        for (kind, dim) in [
            (GroupKind::Orthogonal, 3),
            (GroupKind::Symplectic, 2),
            (GroupKind::Symplectic, 4),
        ] {
            let g = metric(kind, dim).unwrap().g_matrix();
            for s in rational_group_elements(kind, dim).unwrap() {
                assert_eq!(s.transpose().mul(&g).mul(&s), g);
            }
        }
    }

    #[test]
    fn components_are_group_invariant() {
        for (kind, dim) in [(GroupKind::Orthogonal, 3), (GroupKind::Symplectic, 4)] {
            let p = InvariantProjector::new(kind, dim, 4).unwrap();
            for s in rational_group_elements(kind, dim).unwrap() {
                assert!(p.is_fixed_by(&s).unwrap());
            }
        }
    }

    #[test]
    fn pair_partition_counts() {
        assert_eq!(pair_partitions(&[0, 1]).len(), 1);
        assert_eq!(pair_partitions(&[0, 1, 2, 3]).len(), 3);
        assert_eq!(pair_partitions(&(0..6).collect::<Vec<_>>()).len(), 15);
        assert_eq!(
            orthosymplectic_invariant_basis(1, 3, GroupKind::Orthogonal)
                .unwrap()
                .rank,
            1
        );
        assert_eq!(
            orthosymplectic_invariant_basis(2, 3, GroupKind::Orthogonal)
                .unwrap()
                .rank,
            3
        );
    }
}

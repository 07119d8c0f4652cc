use super::group::FiniteGroup;
use super::scalar::{SMat, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Irrep<S> {
    pub degree: usize,
    /// `rho(g)` for every element `g`, in element order.
    pub matrices: Vec<SMat<S>>,
}

/// A complete list of pairwise inequivalent irreducible representations,
/// with the trivial representation first.
#[derive(Debug, Clone)]
pub struct IrrepTable<S> {
    group: FiniteGroup,
    irreps: Vec<Irrep<S>>,
    characters: Vec<Vec<S>>,
    /// `duals[i]` is the irrep whose character is `g -> chi_i(g^-1)`.
    duals: Vec<usize>,
    /// `(C, C^-1)` with `rho_i(g) C = C rho_(dual i)(g^-1)^T`.
    intertwiners: Vec<(SMat<S>, SMat<S>)>,
}

impl<S: Scalar> IrrepTable<S> {
    /// Validates the table: homomorphisms on the full multiplication table,
    /// `sum n_i^2 = |G|`, orthonormal characters, trivial representation first.
    pub fn new(group: FiniteGroup, irreps: Vec<Irrep<S>>) -> Result<Self> {
        let order = group.order();
        for (i, rep) in irreps.iter().enumerate() {
            if rep.degree == 0 || rep.matrices.len() != order {
                return Err(Error::InvalidIrreps(format!(
                    "irrep {i}: degree {} with {} matrices for a group of order {order}",
                    rep.degree,
                    rep.matrices.len()
                )));
            }
            if let Some(g) = rep.matrices.iter().position(|m| m.size() != rep.degree) {
                return Err(Error::InvalidIrreps(format!(
                    "irrep {i}: matrix for element {g} has the wrong size"
                )));
            }
            check_homomorphism(&group, &rep.matrices)
                .map_err(|e| Error::InvalidIrreps(format!("irrep {i}: {e}")))?;
        }
        let total: usize = irreps.iter().map(|r| r.degree * r.degree).sum();
        if total != order {
            return Err(Error::InvalidIrreps(format!(
                "sum of squared degrees is {total}, group order is {order}"
            )));
        }
        let trivial = irreps.first().is_some_and(|r| {
            r.degree == 1 && r.matrices.iter().all(|m| m.get(0, 0).close(&S::one()))
        });
        if !trivial {
            return Err(Error::InvalidIrreps(
                "the first irrep must be the trivial representation".into(),
            ));
        }
        let characters: Vec<Vec<S>> = irreps
            .iter()
            .map(|r| r.matrices.iter().map(SMat::trace).collect())
            .collect();
        let inv_order = S::one() / S::from_int(order as i64);
        for i in 0..irreps.len() {
            for j in 0..irreps.len() {
                let pairing = group.elements().fold(S::zero(), |acc, g| {
                    acc + characters[i][group.inv(g)].clone() * characters[j][g].clone()
                }) * inv_order.clone();
                let expected = if i == j { S::one() } else { S::zero() };
                if !pairing.close(&expected) {
                    return Err(Error::InvalidIrreps(format!(
                        "characters {i} and {j} have pairing {pairing:?}, expected {expected:?}"
                    )));
                }
            }
        }
        let mut duals = Vec::with_capacity(irreps.len());
        for i in 0..irreps.len() {
            let dual = (0..irreps.len())
                .find(|&j| {
                    group
                        .elements()
                        .all(|g| characters[j][g].close(&characters[i][group.inv(g)]))
                })
                .ok_or_else(|| {
                    Error::InvalidIrreps(format!("irrep {i} has no dual in the table"))
                })?;
            duals.push(dual);
        }
        let mut intertwiners = Vec::with_capacity(irreps.len());
        for i in 0..irreps.len() {
            let c = intertwiner(&group, &irreps[i], &irreps[duals[i]]).ok_or_else(|| {
                Error::InvalidIrreps(format!(
                    "no invertible intertwiner between irrep {i} and its dual"
                ))
            })?;
            let c_inv = c
                .inverse()
                .expect("intertwiner was checked to be invertible");
            intertwiners.push((c, c_inv));
        }
        Ok(IrrepTable {
            group,
            irreps,
            characters,
            duals,
            intertwiners,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn irreps(&self) -> &[Irrep<S>] {
        &self.irreps
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.degree).collect()
    }

    pub fn rho(&self, i: usize, g: usize) -> &SMat<S> {
        &self.irreps[i].matrices[g]
    }

    pub fn character(&self, i: usize) -> &[S] {
        &self.characters[i]
    }

    pub fn dual_index(&self, i: usize) -> usize {
        self.duals[i]
    }

    pub(crate) fn intertwiner(&self, i: usize) -> &(SMat<S>, SMat<S>) {
        &self.intertwiners[i]
    }

    /// Irreps of the direct product: all Kronecker products, outer index slowest.
    pub fn direct_product(&self, other: &IrrepTable<S>) -> Result<IrrepTable<S>> {
        let group = self.group.direct_product(&other.group);
        let m = other.group.order();
        let mut irreps = Vec::new();
        for a in &self.irreps {
            for b in &other.irreps {
                let matrices = group
                    .elements()
                    .map(|x| a.matrices[x / m].kron(&b.matrices[x % m]))
                    .collect();
                irreps.push(Irrep {
                    degree: a.degree * b.degree,
                    matrices,
                });
            }
        }
        IrrepTable::new(group, irreps)
    }
}

/// Checks `rho(e) = I` and `rho(a) rho(b) = rho(ab)` on the whole table.
pub fn check_homomorphism<S: Scalar>(group: &FiniteGroup, rep: &[SMat<S>]) -> Result<()> {
    if rep.len() != group.order() {
        return Err(Error::InvalidArgument(format!(
            "{} matrices for a group of order {}",
            rep.len(),
            group.order()
        )));
    }
    let d = rep[0].size();
    if rep.iter().any(|m| m.size() != d) {
        return Err(Error::InvalidArgument(
            "representation matrices differ in size".into(),
        ));
    }
    if !rep[group.identity()].close(&SMat::identity(d)) {
        return Err(Error::InvalidArgument(
            "the identity does not act as the identity matrix".into(),
        ));
    }
    for a in group.elements() {
        for b in group.elements() {
            if !rep[a].mul(&rep[b]).close(&rep[group.mul(a, b)]) {
                return Err(Error::InvalidArgument(format!(
                    "rho({a}) rho({b}) != rho({})",
                    group.mul(a, b)
                )));
            }
        }
    }
    Ok(())
}

/// `C = sum_g rho(g) X sigma(g)^T` for the first elementary `X` giving an
/// invertible result; it satisfies `rho(g) C = C sigma(g^-1)^T`.
fn intertwiner<S: Scalar>(
    group: &FiniteGroup,
    rho: &Irrep<S>,
    sigma: &Irrep<S>,
) -> Option<SMat<S>> {
    let d = rho.degree;
    if sigma.degree != d {
        return None;
    }
    for r in 0..d {
        for s in 0..d {
            let mut x = SMat::zeros(d);
            x.set(r, s, S::one());
            let c = group.elements().fold(SMat::zeros(d), |acc, g| {
                acc.add(&rho.matrices[g].mul(&x).mul(&sigma.matrices[g].transpose()))
            });
            if c.inverse().is_some() {
                return Some(c);
            }
        }
    }
    None
}

use super::group::FiniteGroup;
use super::irreps::{check_homomorphism, IrrepTable};
use super::scalar::{SMat, Scalar};
use crate::error::{Error, Result};

/// A function on the group, one value per element.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupFunction<S> {
    pub values: Vec<S>,
}

impl<S: Scalar> GroupFunction<S> {
    pub fn new(values: Vec<S>) -> Self {
        GroupFunction { values }
    }

    pub fn constant(group: &FiniteGroup, c: S) -> Self {
        GroupFunction {
            values: vec![c; group.order()],
        }
    }

    /// `|G|` times the indicator of `g`, the function whose transform has every block `rho(g)^-1`.
    pub fn delta(group: &FiniteGroup, g: usize) -> Self {
        let mut values = vec![S::zero(); group.order()];
        values[g] = S::from_int(group.order() as i64);
        GroupFunction { values }
    }

    pub fn indicator(group: &FiniteGroup, g: usize) -> Self {
        let mut values = vec![S::zero(); group.order()];
        values[g] = S::one();
        GroupFunction { values }
    }

    pub fn character(table: &IrrepTable<S>, i: usize) -> Self {
        GroupFunction {
            values: table.character(i).to_vec(),
        }
    }

    /// `g -> rho_i(g)[r][s]`.
    pub fn matrix_coefficient(table: &IrrepTable<S>, i: usize, r: usize, s: usize) -> Self {
        GroupFunction {
            values: table
                .group()
                .elements()
                .map(|g| table.rho(i, g).get(r, s).clone())
                .collect(),
        }
    }

    /// Character of the regular representation: `|G|` at the identity, zero elsewhere.
    pub fn regular_character(group: &FiniteGroup) -> Self {
        Self::delta(group, group.identity())
    }

    /// `a*(g) = a(g^-1)`.
    pub fn star(&self, group: &FiniteGroup) -> Self {
        GroupFunction {
            values: group
                .elements()
                .map(|g| self.values[group.inv(g)].clone())
                .collect(),
        }
    }

    /// `(g . a)(x) = a(x g)`.
    pub fn translate_left(&self, group: &FiniteGroup, g: usize) -> Self {
        GroupFunction {
            values: group
                .elements()
                .map(|x| self.values[group.mul(x, g)].clone())
                .collect(),
        }
    }

    /// `(a . g)(x) = a(g x)`.
    pub fn translate_right(&self, group: &FiniteGroup, g: usize) -> Self {
        GroupFunction {
            values: group
                .elements()
                .map(|x| self.values[group.mul(g, x)].clone())
                .collect(),
        }
    }

    pub fn close(&self, other: &Self) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.close(b))
    }

    fn check(&self, group: &FiniteGroup) -> Result<()> {
        if self.values.len() != group.order() {
            return Err(Error::ShapeMismatch(format!(
                "function has {} values, group has {} elements",
                self.values.len(),
                group.order()
            )));
        }
        Ok(())
    }
}

/// An element of `sum_i End(E_i)`: one square block per irrep.
#[derive(Debug, Clone, PartialEq)]
pub struct DualElement<S> {
    pub blocks: Vec<SMat<S>>,
}

impl<S: Scalar> DualElement<S> {
    pub fn new<T>(table: &IrrepTable<T>, blocks: Vec<SMat<S>>) -> Result<Self>
    where
        T: Scalar,
    {
        let ok = blocks.len() == table.len()
            && blocks
                .iter()
                .zip(table.degrees())
                .all(|(b, d)| b.size() == d);
        if !ok {
            return Err(Error::ShapeMismatch(
                "block sizes do not match the irrep degrees".into(),
            ));
        }
        Ok(DualElement { blocks })
    }

    /// The unit `1_i` of the `i`-th block.
    pub fn unit(table: &IrrepTable<S>, i: usize) -> Self {
        let blocks = table
            .degrees()
            .into_iter()
            .enumerate()
            .map(|(j, d)| {
                if i == j {
                    SMat::identity(d)
                } else {
                    SMat::zeros(d)
                }
            })
            .collect();
        DualElement { blocks }
    }

    pub fn mul(&self, other: &Self) -> Self {
        DualElement {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DualElement {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        DualElement {
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    /// `tr(A) = sum_i n_i tr(A_i)`.
    pub fn trace(&self) -> S {
        self.blocks.iter().fold(S::zero(), |acc, b| {
            acc + S::from_int(b.size() as i64) * b.trace()
        })
    }

    /// `g . A`: block `i` becomes `rho_i(g) A_i`.
    pub fn translate_left(&self, table: &IrrepTable<S>, g: usize) -> Self {
        DualElement {
            blocks: self
                .blocks
                .iter()
                .enumerate()
                .map(|(i, b)| table.rho(i, g).mul(b))
                .collect(),
        }
    }

    /// `A . g`: block `i` becomes `A_i rho_i(g)`.
    pub fn translate_right(&self, table: &IrrepTable<S>, g: usize) -> Self {
        DualElement {
            blocks: self
                .blocks
                .iter()
                .enumerate()
                .map(|(i, b)| b.mul(table.rho(i, g)))
                .collect(),
        }
    }

    /// The involution matching `a -> a*` on functions: block `i` becomes
    /// `C_i A_j^T C_i^-1` where `j` is the dual irrep and `C_i` intertwines
    /// `rho_i` with `g -> rho_j(g^-1)^T`.
    pub fn star(&self, table: &IrrepTable<S>) -> Self {
        let blocks = (0..self.blocks.len())
            .map(|i| {
                let (c, c_inv) = table.intertwiner(i);
                c.mul(&self.blocks[table.dual_index(i)].transpose())
                    .mul(c_inv)
            })
            .collect();
        DualElement { blocks }
    }

    pub fn close(&self, other: &Self) -> bool {
        self.blocks.len() == other.blocks.len()
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a.close(b))
    }
}

fn inv_order<S: Scalar>(group: &FiniteGroup) -> S {
    S::one() / S::from_int(group.order() as i64)
}

/// `w_G(a) = (1/|G|) sum_g a(g)`.
pub fn invariant_integral<S: Scalar>(group: &FiniteGroup, a: &GroupFunction<S>) -> Result<S> {
    a.check(group)?;
    Ok(a.values.iter().fold(S::zero(), |acc, x| acc + x.clone()) * inv_order(group))
}

/// Block `i` is `(1/|G|) sum_g a(g) rho_i(g)^-1`.
pub fn fourier<S: Scalar>(a: &GroupFunction<S>, table: &IrrepTable<S>) -> Result<DualElement<S>> {
    let group = table.group();
    a.check(group)?;
    let scale = inv_order::<S>(group);
    let blocks = (0..table.len())
        .map(|i| {
            group
                .elements()
                .filter(|&g| !a.values[g].is_negligible())
                .fold(SMat::zeros(table.degrees()[i]), |acc, g| {
                    acc.add(&table.rho(i, group.inv(g)).scale(&a.values[g]))
                })
                .scale(&scale)
        })
        .collect();
    Ok(DualElement { blocks })
}

/// `a(g) = sum_i n_i tr(A_i rho_i(g))`.
pub fn inverse_fourier<S: Scalar>(
    hat: &DualElement<S>,
    table: &IrrepTable<S>,
) -> Result<GroupFunction<S>> {
    DualElement::new(table, hat.blocks.clone())?;
    let values = table
        .group()
        .elements()
        .map(|g| {
            hat.blocks
                .iter()
                .enumerate()
                .fold(S::zero(), |acc, (i, b)| {
                    acc + S::from_int(b.size() as i64) * b.mul(table.rho(i, g)).trace()
                })
        })
        .collect();
    Ok(GroupFunction { values })
}

/// `(a * b)(x) = (1/|G|) sum_g a(g^-1) b(x g)`.
pub fn convolution<S: Scalar>(
    a: &GroupFunction<S>,
    b: &GroupFunction<S>,
    group: &FiniteGroup,
) -> Result<GroupFunction<S>> {
    a.check(group)?;
    b.check(group)?;
    let scale = inv_order::<S>(group);
    let values = group
        .elements()
        .map(|x| {
            group.elements().fold(S::zero(), |acc, g| {
                acc + a.values[group.inv(g)].clone() * b.values[group.mul(x, g)].clone()
            }) * scale.clone()
        })
        .collect();
    Ok(GroupFunction { values })
}

/// `T^2(a, b) = (1/|G|) sum_g a(g^-1) b(g)`.
pub fn pairing<S: Scalar>(
    a: &GroupFunction<S>,
    b: &GroupFunction<S>,
    group: &FiniteGroup,
) -> Result<S> {
    a.check(group)?;
    b.check(group)?;
    Ok(group.elements().fold(S::zero(), |acc, g| {
        acc + a.values[group.inv(g)].clone() * b.values[g].clone()
    }) * inv_order(group))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsevalResult<S> {
    /// `(1/|G|) sum_g a(g^-1) b(g)`.
    pub direct: S,
    /// `tr(F(a) F(b))`.
    pub spectral: S,
    pub equal: bool,
}

pub fn parseval_pairing<S: Scalar>(
    a: &GroupFunction<S>,
    b: &GroupFunction<S>,
    table: &IrrepTable<S>,
) -> Result<ParsevalResult<S>> {
    let direct = pairing(a, b, table.group())?;
    let spectral = fourier(a, table)?.mul(&fourier(b, table)?).trace();
    let equal = direct.close(&spectral);
    Ok(ParsevalResult {
        direct,
        spectral,
        equal,
    })
}

/// Gram matrix of all matrix coefficients `(i, r, s)` under `T^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeterWeylGram<S> {
    pub labels: Vec<(usize, usize, usize)>,
    pub gram: Vec<Vec<S>>,
}

/// Computes the Gram matrix and checks `T^2(d^i_rs, d^j_r's') = [i=j][r=s'][s=r'] / n_i`.
pub fn peter_weyl_gram<S: Scalar>(table: &IrrepTable<S>) -> Result<PeterWeylGram<S>> {
    let group = table.group();
    let mut labels = Vec::new();
    let mut coeffs = Vec::new();
    for (i, d) in table.degrees().into_iter().enumerate() {
        for r in 0..d {
            for s in 0..d {
                labels.push((i, r, s));
                coeffs.push(GroupFunction::matrix_coefficient(table, i, r, s));
            }
        }
    }
    let mut gram = Vec::with_capacity(labels.len());
    for (x, &(i, r, s)) in labels.iter().enumerate() {
        let mut row = Vec::with_capacity(labels.len());
        for (y, &(j, r2, s2)) in labels.iter().enumerate() {
            let value = pairing(&coeffs[x], &coeffs[y], group)?;
            let expected = if i == j && r == s2 && s == r2 {
                S::one() / S::from_int(table.degrees()[i] as i64)
            } else {
                S::zero()
            };
            if !value.close(&expected) {
                return Err(Error::IdentityViolation(format!(
                    "T^2(d^{i}_({r},{s}), d^{j}_({r2},{s2})) = {value:?}, expected {expected:?}"
                )));
            }
            row.push(value);
        }
        gram.push(row);
    }
    Ok(PeterWeylGram { labels, gram })
}

/// `P_i = (n_i / |G|) sum_g chi_i(g^-1) rep(g)` on a representation `rep`.
pub fn isotypic_projection<S: Scalar>(
    rep: &[SMat<S>],
    i: usize,
    table: &IrrepTable<S>,
) -> Result<SMat<S>> {
    let group = table.group();
    check_homomorphism(group, rep)?;
    if i >= table.len() {
        return Err(Error::InvalidArgument(format!(
            "irrep index {i} out of range"
        )));
    }
    let chi = table.character(i);
    let scale = S::from_int(table.degrees()[i] as i64) * inv_order::<S>(group);
    Ok(group
        .elements()
        .fold(SMat::zeros(rep[0].size()), |acc, g| {
            acc.add(&rep[g].scale(&chi[group.inv(g)]))
        })
        .scale(&scale))
}

/// The left regular representation: `rep(g) e_x = e_(g x)`.
pub fn regular_representation<S: Scalar>(group: &FiniteGroup) -> Vec<SMat<S>> {
    group
        .elements()
        .map(|g| {
            SMat::from_fn(group.order(), |row, col| {
                if group.mul(g, col) == row {
                    S::one()
                } else {
                    S::zero()
                }
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoissonReport<S> {
    /// `(1/|H|) sum_(h in H) a(h)`.
    pub lhs: S,
    /// `sum n_i tr(F(a)_i)` over irreps trivial on `H`.
    pub rhs: S,
    pub equal: bool,
    /// Irreps that factor through `G/H`.
    pub quotient_irreps: Vec<usize>,
}

pub fn poisson_check<S: Scalar>(
    subgroup: &[usize],
    a: &GroupFunction<S>,
    table: &IrrepTable<S>,
) -> Result<PoissonReport<S>> {
    let group = table.group();
    let h = group.normal_subgroup(subgroup)?;
    a.check(group)?;
    let lhs = h
        .iter()
        .fold(S::zero(), |acc, &x| acc + a.values[x].clone())
        / S::from_int(h.len() as i64);
    let quotient_irreps: Vec<usize> = (0..table.len())
        .filter(|&i| {
            h.iter()
                .all(|&x| table.rho(i, x).close(&SMat::identity(table.degrees()[i])))
        })
        .collect();
    let hat = fourier(a, table)?;
    let rhs = quotient_irreps.iter().fold(S::zero(), |acc, &i| {
        acc + S::from_int(table.degrees()[i] as i64) * hat.blocks[i].trace()
    });
    let equal = lhs.close(&rhs);
    Ok(PoissonReport {
        lhs,
        rhs,
        equal,
        quotient_irreps,
    })
}

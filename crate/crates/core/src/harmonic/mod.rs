//! Harmonic analysis on finite groups with explicit irreducible
//! representations: invariant integral, Fourier transform and its inverse,
//! convolution, Parseval and Peter-Weyl identities, isotypic projections and
//! Poisson summation.
//!
//! Conventions: `F(a)_i = (1/|G|) sum_g a(g) rho_i(g)^-1`,
//! `(a * b)(x) = (1/|G|) sum_g a(g^-1) b(x g)`, `(g . a)(x) = a(x g)`.
//! With these, `F(a * b) = F(a) F(b)` and `F(g . a)_i = rho_i(g) F(a)_i`.

mod catalog;
mod group;
mod irreps;
mod ops;
mod scalar;
#[cfg(test)]
mod tests;

pub use catalog::{builtin, builtin_names, cyclic_table, Builtin};
pub use group::FiniteGroup;
pub use irreps::{check_homomorphism, Irrep, IrrepTable};
pub use ops::{
    convolution, fourier, invariant_integral, inverse_fourier, isotypic_projection, pairing,
    parseval_pairing, peter_weyl_gram, poisson_check, regular_representation, DualElement,
    GroupFunction, ParsevalResult, PeterWeylGram, PoissonReport,
};
pub use scalar::{Backend, SMat, Scalar, COMPLEX_TOLERANCE};

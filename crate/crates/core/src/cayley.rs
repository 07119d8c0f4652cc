//! The Cayley operator `D = det(d/dx_ij)` and the closed-form invariant
//! integrals on `Gl_n` and `Sl_n` built from it.
//!
//! `D` lowers `det^r` to `mu_r det^(r-1)` with `mu_r = r (r+1) ... (r+n-1)`,
//! so `D^r det^r = mu_r ... mu_1`. The `Gl_n` integral of `p / det^s` keeps only
//! the degree `n s` part of `p`, and the `Sl_n` integral sums those pieces
//! over all `s`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::limits::{limits, Limits};
use crate::poly::{poly_det, DiffOp, Poly};
use crate::rat::Rat;

/// `det(d/dx_ij)`: the signed `S_n` sum of products of partials.
pub fn cayley_operator(n: usize) -> Result<DiffOp> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "matrix size must be positive".into(),
        ));
    }
    Limits::check(n, limits().max_dim, "matrix size n")?;
    Ok(DiffOp::from_symbol(poly_det(n)))
}

/// `mu_r = r (r+1) ... (r+n-1) = (r+n-1)! / (r-1)!`.
pub fn mu(r: u32, n: usize) -> BigInt {
    (0..n as u32).map(|k| BigInt::from(r + k)).product()
}

/// `D^r(det^r) = mu_r mu_(r-1) ... mu_1`; equals 1 for `r = 0`.
pub fn cayley_power_on_det_power(r: u32, n: usize) -> BigInt {
    (1..=r).map(|i| mu(i, n)).product()
}

/// Applies `D` to `p` `times` times in sequence rather than expanding `D^times`.
pub fn apply_cayley_power(p: &Poly, times: u32) -> Result<Poly> {
    let d = cayley_operator(p.n())?;
    let mut acc = p.clone();
    for _ in 0..times {
        if acc.is_zero() {
            break;
        }
        acc = d.apply(&acc)?;
    }
    Ok(acc)
}

/// The argument `p / det^s` of the `Gl_n` invariant integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlIntegralQuery {
    pub n: usize,
    pub numerator: Poly,
    pub det_power: u32,
}

impl GlIntegralQuery {
    pub fn new(numerator: Poly, det_power: u32) -> Self {
        GlIntegralQuery {
            n: numerator.n(),
            numerator,
            det_power,
        }
    }
}

/// `D^s(p_(n s)) / D^s(det^s)` where `p_(n s)` is the degree `n s` part of the
/// numerator. Other components integrate to zero.
pub fn gl_integral(q: &GlIntegralQuery) -> Result<Rat> {
    if q.numerator.n() != q.n {
        return Err(Error::MatrixSizeMismatch {
            left: q.n,
            right: q.numerator.n(),
        });
    }
    Limits::check(q.det_power as usize, limits().max_det_power, "det power s")?;
    let component = q.numerator.homogeneous_component(q.n as u32 * q.det_power);
    if component.is_zero() {
        return Ok(Rat::ZERO);
    }
    let value = apply_cayley_power(&component, q.det_power)?.eval_at_zero();
    Ok(value / Rat::from_bigint(cayley_power_on_det_power(q.det_power, q.n)))
}

/// `sum_i D_0^i(p) / D_0^i(det^i)` where `D_0^i` is `D^i` followed by
/// evaluation at zero. Only the degree `n i` components of `p` contribute.
pub fn sl_integral(p: &Poly, n: usize) -> Result<Rat> {
    if p.n() != n {
        return Err(Error::MatrixSizeMismatch {
            left: n,
            right: p.n(),
        });
    }
    let Some(deg) = p.degree() else {
        return Ok(Rat::ZERO);
    };
    let mut total = p.eval_at_zero();
    for i in 1..=deg / n as u32 {
        let component = p.homogeneous_component(n as u32 * i);
        if component.is_zero() {
            continue;
        }
        Limits::check(i as usize, limits().max_det_power, "det power i")?;
        let value = apply_cayley_power(&component, i)?.eval_at_zero();
        total += value / Rat::from_bigint(cayley_power_on_det_power(i, n));
    }
    Ok(total)
}

/// Dimension of the `Sl_n` invariants in `E^(x nm)`: `(mn)! / D^m(det^m)`.
pub fn sl_invariant_dim(n: usize, m: u32) -> BigInt {
    assert!(n >= 1, "matrix size must be positive");
    let total = (1..=(m as usize * n)).fold(BigInt::from(1), |acc, k| acc * k);
    let denom = cayley_power_on_det_power(m, n);
    let (q, r) = total.div_rem(&denom);
    assert!(
        r.is_zero(),
        "(mn)! / D^m(det^m) is not integral for n={n}, m={m}"
    );
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize, j: usize) -> Poly {
        Poly::var(n, i - 1, j - 1)
    }

    #[test]
    fn operator_shapes() {
        assert_eq!(cayley_operator(1).unwrap().to_string(), "d11");
        assert_eq!(cayley_operator(2).unwrap().to_string(), "d11*d22 - d12*d21");
        let d3 = cayley_operator(3).unwrap();
        assert_eq!(d3.num_terms(), 6);
        assert!(matches!(cayley_operator(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn operator_bound_is_enforced() {
        if limits().max_dim == crate::limits::DEFAULT_MAX_DIM {
            assert!(matches!(
                cayley_operator(5),
                Err(Error::BoundExceeded { .. })
            ));
        }
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(1, 2), BigInt::from(2));
        assert_eq!(mu(2, 3), BigInt::from(24));
        assert_eq!(mu(1, 1), BigInt::from(1));
    }

    #[test]
    fn cayley_power_values() {
        assert_eq!(cayley_power_on_det_power(0, 3), BigInt::from(1));
        assert_eq!(cayley_power_on_det_power(1, 2), BigInt::from(2));
        assert_eq!(cayley_power_on_det_power(2, 2), BigInt::from(12));
        // literal repeated differentiation
        let lit = apply_cayley_power(&poly_det(2).pow(2), 2).unwrap();
        assert_eq!(lit, Poly::constant(2, Rat::from_int(12)));
    }

    #[test]
    fn lemma_on_small_cases() {
        for n in 1..=3 {
            let d = cayley_operator(n).unwrap();
            let det = poly_det(n);
            for r in 1..=3u32 {
                let lhs = d.apply(&det.pow(r)).unwrap();
                let rhs = det.pow(r - 1).scale(&Rat::from_bigint(mu(r, n)));
                assert_eq!(lhs, rhs, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn gl_integral_examples() {
        let q = GlIntegralQuery::new(poly_det(2).pow(2), 2);
        assert_eq!(gl_integral(&q).unwrap(), Rat::ONE);
        let q = GlIntegralQuery::new(x(2, 1, 1).mul(&x(2, 2, 2)).unwrap(), 1);
        assert_eq!(gl_integral(&q).unwrap(), Rat::new(1, 2));
        let q = GlIntegralQuery::new(x(2, 1, 1), 1);
        assert_eq!(gl_integral(&q).unwrap(), Rat::ZERO);
    }

    #[test]
    fn gl_integral_rejects_inconsistent_query() {
        let q = GlIntegralQuery {
            n: 3,
            numerator: poly_det(2),
            det_power: 1,
        };
        assert!(matches!(
            gl_integral(&q),
            Err(Error::MatrixSizeMismatch { .. })
        ));
    }

    #[test]
    fn gl_normalization() {
        for n in 1..=3 {
            for s in 0..=3u32 {
                let q = GlIntegralQuery::new(poly_det(n).pow(s), s);
                assert_eq!(gl_integral(&q).unwrap(), Rat::ONE, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn gl_integral_ignores_off_degree_components() {
        let p = x(2, 1, 2).pow(3).add(&x(2, 1, 1)).unwrap();
        for s in 0..=3 {
            assert_eq!(
                gl_integral(&GlIntegralQuery::new(p.clone(), s)).unwrap(),
                Rat::ZERO
            );
        }
    }

    #[test]
    fn sl_integral_examples() {
        assert_eq!(sl_integral(&Poly::one(2), 2).unwrap(), Rat::ONE);
        let det = poly_det(2);
        let p = det.pow(3).sub(&det.pow(2)).unwrap();
        assert_eq!(sl_integral(&p, 2).unwrap(), Rat::ZERO);
        assert_eq!(
            sl_integral(&x(2, 1, 1).mul(&x(2, 2, 2)).unwrap(), 2).unwrap(),
            Rat::new(1, 2)
        );
        assert_eq!(sl_integral(&Poly::zero(2), 2).unwrap(), Rat::ZERO);
    }

    #[test]
    fn sl_agrees_with_gl_componentwise() {
        // on a homogeneous p of degree n s, sl_integral(p) = gl_integral(p / det^s),
        // and multiplying by det^t shifts both windows consistently
        let p = x(2, 1, 1)
            .mul(&x(2, 2, 2))
            .unwrap()
            .add(
                &x(2, 1, 2)
                    .mul(&x(2, 2, 1))
                    .unwrap()
                    .scale(&Rat::from_int(3)),
            )
            .unwrap();
        let base = gl_integral(&GlIntegralQuery::new(p.clone(), 1)).unwrap();
        assert_eq!(sl_integral(&p, 2).unwrap(), base);
        for t in 1..=2u32 {
            let shifted = p.mul(&poly_det(2).pow(t)).unwrap();
            assert_eq!(
                gl_integral(&GlIntegralQuery::new(shifted.clone(), 1 + t)).unwrap(),
                base
            );
            assert_eq!(sl_integral(&shifted, 2).unwrap(), base);
        }
    }

    #[test]
    fn sl_dimensions() {
        assert_eq!(sl_invariant_dim(2, 1), BigInt::from(1));
        assert_eq!(sl_invariant_dim(2, 2), BigInt::from(2));
        assert_eq!(sl_invariant_dim(2, 3), BigInt::from(5));
        assert_eq!(sl_invariant_dim(3, 0), BigInt::from(1));
        // Catalan closed form for n = 2
        for m in 0..=5u32 {
            let m_ = m as usize;
            let catalan = crate::perm::factorial(2 * m_)
                / (crate::perm::factorial(m_) * crate::perm::factorial(m_ + 1));
            assert_eq!(sl_invariant_dim(2, m), catalan);
        }
    }
}

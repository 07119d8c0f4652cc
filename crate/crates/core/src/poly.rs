//! Polynomials in the entries `x_ij` of an `n x n` matrix, and
//! constant-coefficient differential operators in the partials `d/dx_ij`.
//!
//! Exponent vectors are dense, length `n^2`, in row-major order: position
//! `i * n + j` holds the exponent of `x_(i+1)(j+1)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::all_perms;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// Graded lexicographic: total degree first, then exponent vectors
/// lexicographically (so `x11` outranks `x12` at equal degree).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over `Rat` in the `n^2` matrix entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = Poly::zero(n);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(n * n), c);
        }
        p
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, Rat::ONE)
    }

    /// The entry `x_(row+1)(col+1)`; indices are zero-based.
    pub fn var(n: usize, row: usize, col: usize) -> Self {
        assert!(row < n && col < n, "variable index out of range");
        let mut exps = vec![0; n * n];
        exps[row * n + col] = 1;
        Poly::from_terms(n, [(Monomial(exps), Rat::ONE)])
    }

    /// Builds a polynomial, dropping zero coefficients and merging repeats.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Poly::zero(n);
        for (m, c) in terms {
            assert_eq!(m.0.len(), n * n, "exponent vector must have n^2 entries");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn from_map(n: usize, acc: HashMap<Monomial, Rat>) -> Self {
        Poly {
            n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or(Rat::ZERO)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    fn check_same_n(&self, other: &Poly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MatrixSizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rat::ONE)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same_n(other)?;
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert(Rat::ZERO) += ca * cb;
            }
        }
        Ok(Poly::from_map(self.n, acc))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same matrix size");
        }
        acc
    }

    /// The sum of the terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The constant term.
    pub fn eval_at_zero(&self) -> Rat {
        self.coefficient(&Monomial::one(self.n * self.n))
    }

    /// Evaluates at a matrix given row-major.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(
            point.len(),
            self.n * self.n,
            "evaluation point must have n^2 entries"
        );
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = c.clone();
                for (x, &e) in point.iter().zip(&m.0) {
                    if e > 0 {
                        v *= x.pow(e as u32);
                    }
                }
                v
            })
            .sum()
    }

    /// Formal partial derivative with respect to `x_(row+1)(col+1)`.
    pub fn partial(&self, row: usize, col: usize) -> Poly {
        DiffOp::partial(self.n, row, col)
            .apply(self)
            .expect("same matrix size")
    }
}

/// `det(x_ij)` as a polynomial: the signed sum over `S_n` of
/// `x_1σ(1) ... x_nσ(n)`.
pub fn poly_det(n: usize) -> Poly {
    assert!(n >= 1, "matrix size must be positive");
    let terms = all_perms(n).into_iter().map(|p| {
        let mut exps = vec![0u16; n * n];
        for i in 0..n {
            exps[i * n + p.apply(i)] += 1;
        }
        (Monomial(exps), Rat::from_int(p.sign()))
    });
    Poly::from_terms(n, terms)
}

pub fn poly_mul(p: &Poly, q: &Poly) -> Result<Poly> {
    p.mul(q)
}

pub fn homogeneous_component(p: &Poly, d: u32) -> Poly {
    p.homogeneous_component(d)
}

pub fn eval_at_zero(p: &Poly) -> Rat {
    p.eval_at_zero()
}

pub fn apply_diff_op(d: &DiffOp, p: &Poly) -> Result<Poly> {
    d.apply(p)
}

/// A constant-coefficient differential operator, i.e. a polynomial in the
/// partials `d/dx_ij`, with the same exponent layout as [`Poly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOp {
    symbol: Poly,
}

impl DiffOp {
    /// The operator whose symbol is `symbol`, with `x_ij` read as `d/dx_ij`.
    pub fn from_symbol(symbol: Poly) -> Self {
        DiffOp { symbol }
    }

    pub fn symbol(&self) -> &Poly {
        &self.symbol
    }

    pub fn identity(n: usize) -> Self {
        DiffOp {
            symbol: Poly::one(n),
        }
    }

    pub fn partial(n: usize, row: usize, col: usize) -> Self {
        DiffOp {
            symbol: Poly::var(n, row, col),
        }
    }

    pub fn n(&self) -> usize {
        self.symbol.n
    }

    pub fn num_terms(&self) -> usize {
        self.symbol.num_terms()
    }

    pub fn add(&self, other: &DiffOp) -> Result<DiffOp> {
        Ok(DiffOp {
            symbol: self.symbol.add(&other.symbol)?,
        })
    }

    /// Composition; constant-coefficient operators commute.
    pub fn compose(&self, other: &DiffOp) -> Result<DiffOp> {
        Ok(DiffOp {
            symbol: self.symbol.mul(&other.symbol)?,
        })
    }

    pub fn scale(&self, c: &Rat) -> DiffOp {
        DiffOp {
            symbol: self.symbol.scale(c),
        }
    }

    /// Applies the operator: each monomial `d^b` differentiates `x^a` to
    /// `(prod a_k! / (a_k - b_k)!) x^(a - b)`, or to zero if `b` does not divide `a`.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        self.symbol.check_same_n(p)?;
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (b, cd) in &self.symbol.terms {
            for (a, cp) in &p.terms {
                if !b.divides(a) {
                    continue;
                }
                let mut factor: i64 = 1;
                let mut big = Rat::ONE;
                let mut exps = Vec::with_capacity(a.0.len());
                for (&ak, &bk) in a.0.iter().zip(&b.0) {
                    for f in (ak - bk + 1)..=ak {
                        match factor.checked_mul(f as i64) {
                            Some(v) => factor = v,
                            None => {
                                big *= Rat::from_int(factor);
                                factor = f as i64;
                            }
                        }
                    }
                    exps.push(ak - bk);
                }
                let coeff = cd * cp * big * Rat::from_int(factor);
                *acc.entry(Monomial(exps)).or_insert(Rat::ZERO) += coeff;
            }
        }
        Ok(Poly::from_map(p.n, acc))
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, p: &Poly, var: &str) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let n = p.n;
    for (k, (m, c)) in p.terms.iter().rev().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if negative { " - " } else { " + " })?;
        }
        let mut factors = Vec::new();
        for (idx, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = variable_name(var, n, idx / n, idx % n);
            factors.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        if factors.is_empty() {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", factors.join("*"))?;
        }
    }
    Ok(())
}

/// `x12`-style names for `n <= 9`, `x1_12`-style beyond.
pub fn variable_name(prefix: &str, n: usize, row: usize, col: usize) -> String {
    if n <= 9 {
        format!("{prefix}{}{}", row + 1, col + 1)
    } else {
        format!("{prefix}{}_{}", row + 1, col + 1)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, "x")
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.symbol, "d")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize, j: usize) -> Poly {
        Poly::var(n, i - 1, j - 1)
    }

    fn d(n: usize, i: usize, j: usize) -> DiffOp {
        DiffOp::partial(n, i - 1, j - 1)
    }

    #[test]
    fn determinant_expansions() {
        assert_eq!(poly_det(1), x(1, 1, 1));
        let det2 = x(2, 1, 1)
            .mul(&x(2, 2, 2))
            .unwrap()
            .sub(&x(2, 1, 2).mul(&x(2, 2, 1)).unwrap())
            .unwrap();
        assert_eq!(poly_det(2), det2);
        assert_eq!(poly_det(2).to_string(), "x11*x22 - x12*x21");
    }

    #[test]
    fn determinant_matches_leibniz_oracle_n3() {
        // cofactor expansion along the first row, built independently of poly_det
        let n = 3;
        let minor = |a: (usize, usize), b: (usize, usize), c: (usize, usize), e: (usize, usize)| {
            x(n, a.0, a.1)
                .mul(&x(n, b.0, b.1))
                .unwrap()
                .sub(&x(n, c.0, c.1).mul(&x(n, e.0, e.1)).unwrap())
                .unwrap()
        };
        let m11 = minor((2, 2), (3, 3), (2, 3), (3, 2));
        let m12 = minor((2, 1), (3, 3), (2, 3), (3, 1));
        let m13 = minor((2, 1), (3, 2), (2, 2), (3, 1));
        let expected = x(n, 1, 1)
            .mul(&m11)
            .unwrap()
            .sub(&x(n, 1, 2).mul(&m12).unwrap())
            .unwrap()
            .add(&x(n, 1, 3).mul(&m13).unwrap())
            .unwrap();
        let det = poly_det(3);
        assert_eq!(det, expected);
        assert_eq!(det.num_terms(), 6);
        assert!(det.terms().all(|(_, c)| c.abs().is_one()));
    }

    #[test]
    fn products() {
        assert_eq!(
            poly_mul(&x(2, 1, 1), &x(2, 2, 2)).unwrap().to_string(),
            "x11*x22"
        );
        assert_eq!(poly_mul(&poly_det(2), &Poly::one(2)).unwrap(), poly_det(2));
        let a = x(2, 1, 1).add(&x(2, 1, 2)).unwrap();
        let b = x(2, 1, 1).sub(&x(2, 1, 2)).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "x11^2 - x12^2");
        assert_eq!(
            poly_mul(&Poly::one(2), &Poly::one(3)),
            Err(Error::MatrixSizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn homogeneous_components() {
        let p = x(2, 1, 1)
            .add(&x(2, 1, 1).mul(&x(2, 2, 2)).unwrap())
            .unwrap();
        assert_eq!(
            homogeneous_component(&p, 2),
            x(2, 1, 1).mul(&x(2, 2, 2)).unwrap()
        );
        assert!(homogeneous_component(&p, 3).is_zero());
        let det_sq = poly_det(2).pow(2);
        assert_eq!(homogeneous_component(&det_sq, 4), det_sq);
    }

    #[test]
    fn differentiation() {
        let x11_sq = x(2, 1, 1).pow(2);
        assert_eq!(
            d(2, 1, 1).apply(&x11_sq).unwrap(),
            x(2, 1, 1).scale(&Rat::from_int(2))
        );
        let cayley = d(2, 1, 1)
            .compose(&d(2, 2, 2))
            .unwrap()
            .add(&d(2, 1, 2).compose(&d(2, 2, 1)).unwrap().scale(&-Rat::ONE))
            .unwrap();
        assert_eq!(cayley.to_string(), "d11*d22 - d12*d21");
        assert_eq!(
            apply_diff_op(&cayley, &x(2, 1, 1).mul(&x(2, 2, 2)).unwrap()).unwrap(),
            Poly::one(2)
        );
        assert!(d(2, 1, 1).apply(&x(2, 2, 2)).unwrap().is_zero());
        assert!(d(2, 1, 1).apply(&Poly::one(3)).is_err());
    }

    #[test]
    fn constant_terms() {
        assert_eq!(
            eval_at_zero(
                &Poly::constant(2, Rat::from_int(3))
                    .add(&x(2, 1, 1))
                    .unwrap()
            ),
            Rat::from_int(3)
        );
        assert_eq!(eval_at_zero(&poly_det(2)), Rat::ZERO);
        assert_eq!(eval_at_zero(&Poly::zero(2)), Rat::ZERO);
    }

    #[test]
    fn det_is_homogeneous() {
        for n in 1..=4 {
            let det = poly_det(n);
            assert!(det.is_homogeneous());
            assert_eq!(det.degree(), Some(n as u32));
            assert_eq!(homogeneous_component(&det, n as u32), det);
        }
    }

    #[test]
    fn evaluation() {
        let m: Vec<Rat> = [2, 3, 5, 7].iter().map(|&v| Rat::from_int(v)).collect();
        assert_eq!(poly_det(2).eval(&m), Rat::from_int(14 - 15));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 4), -4i64..5), 0..5).prop_map(
            |terms| {
                Poly::from_terms(
                    2,
                    terms
                        .into_iter()
                        .map(|(e, c)| (Monomial(e), Rat::from_int(c))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert!(a.sub(&a).unwrap().is_zero());
        }

        #[test]
        fn leibniz_rule(a in arb_poly(), b in arb_poly(), i in 0usize..2, j in 0usize..2) {
            let lhs = a.mul(&b).unwrap().partial(i, j);
            let rhs = a.partial(i, j).mul(&b).unwrap().add(&a.mul(&b.partial(i, j)).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

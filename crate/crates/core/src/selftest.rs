//! Exact identity checks over the whole library, grouped into numbered
//! acceptance criteria plus supplementary invariants.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cayley::{
    apply_cayley_power, cayley_operator, cayley_power_on_det_power, gl_integral, mu, sl_integral,
    sl_invariant_dim, GlIntegralQuery,
};
use crate::harmonic::{
    builtin, convolution, cyclic_table, fourier, inverse_fourier, isotypic_projection,
    parseval_pairing, peter_weyl_gram, poisson_check, regular_representation, DualElement,
    GroupFunction, IrrepTable, SMat, Scalar,
};
use crate::json::AnyIrrepTable;
use crate::perm::factorial;
use crate::poly::poly_det;
use crate::rat::Rat;
use crate::tensor::{lie_invariant_dim_oracle, GroupKind, OracleKind, Tensor, Variance};
use crate::weingarten::{
    check_representative_independence, orthosymplectic_invariant_basis, rational_group_elements,
    weingarten_coefficients, InvariantProjector,
};

/// Outcome of one check.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl Check {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    /// One-line summary: `PASS  6  title (0.12s): detail`.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let budget = match self.budget {
            Some(b) => format!(" / {}s budget", b.as_secs()),
            None => String::new(),
        };
        format!(
            "{status}  {:<4} {} ({:.2}s{budget}): {}",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Body = fn() -> std::result::Result<String, String>;

struct CheckDef {
    id: &'static str,
    title: &'static str,
    budget_secs: Option<u64>,
    body: Body,
}

const CRITERIA: &[CheckDef] = &[
    CheckDef {
        id: "1",
        title: "Cayley lemma D(det^r) = mu_r det^(r-1)",
        budget_secs: Some(5),
        body: criterion_1,
    },
    CheckDef {
        id: "2",
        title: "D^r(det^r) = mu_r ... mu_1 by repeated differentiation",
        budget_secs: Some(10),
        body: criterion_2,
    },
    CheckDef {
        id: "3",
        title: "Sl_2 invariant dimensions are Catalan numbers",
        budget_secs: Some(30),
        body: criterion_3,
    },
    CheckDef {
        id: "4",
        title: "Sl_n integral vanishes on det^r - det^(r-1)",
        budget_secs: Some(5),
        body: criterion_4,
    },
    CheckDef {
        id: "5",
        title: "O_n coefficients, m=1",
        budget_secs: Some(5),
        body: criterion_5,
    },
    CheckDef {
        id: "6",
        title: "O_n coefficients, m=2, reference rational functions",
        budget_secs: Some(60),
        body: criterion_6,
    },
    CheckDef {
        id: "7",
        title: "Sp coefficients, m=1 and m=2 reference rational functions",
        budget_secs: Some(60),
        body: criterion_7,
    },
    CheckDef {
        id: "8",
        title: "projection idempotent, rank = oracle, group invariant",
        budget_secs: Some(120),
        body: criterion_8,
    },
    CheckDef {
        id: "9",
        title: "odd-degree invariants vanish",
        budget_secs: Some(10),
        body: criterion_9,
    },
    CheckDef {
        id: "10",
        title: "finite harmonic suite on S3 (exact) and C5 (1e-9)",
        budget_secs: Some(10),
        body: criterion_10,
    },
    CheckDef {
        id: "11",
        title: "isotypic projections of the S3 regular representation",
        budget_secs: Some(5),
        body: criterion_11,
    },
];

const EXTRAS: &[CheckDef] = &[
    CheckDef {
        id: "x1",
        title: "Gl_n normalization and degree window",
        budget_secs: None,
        body: extra_gl,
    },
    CheckDef {
        id: "x2",
        title: "Gram entries independent of representatives",
        budget_secs: None,
        body: extra_representatives,
    },
    CheckDef {
        id: "x3",
        title: "normalization system of the coefficients",
        budget_secs: None,
        body: extra_normalization,
    },
    CheckDef {
        id: "x4",
        title: "pair-partition span matches oracle",
        budget_secs: None,
        body: extra_pair_span,
    },
    CheckDef {
        id: "x5",
        title: "Fourier equivariance, star, idempotent w_G on D4",
        budget_secs: None,
        body: extra_fourier,
    },
];

fn run(def: &CheckDef) -> Check {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(def.body).unwrap_or_else(|_| Err("panicked".into()));
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check {
        id: def.id.to_string(),
        title: def.title,
        passed,
        detail,
        elapsed,
        budget: def.budget_secs.map(Duration::from_secs),
    }
}

/// Number of acceptance criteria.
pub fn criterion_count() -> usize {
    CRITERIA.len()
}

/// Runs criterion `n` (1-based).
pub fn run_criterion(n: usize) -> Option<Check> {
    CRITERIA.get(n.checked_sub(1)?).map(run)
}

pub fn run_criteria() -> Vec<Check> {
    CRITERIA.iter().map(run).collect()
}

pub fn run_extras() -> Vec<Check> {
    EXTRAS.iter().map(run).collect()
}

pub fn run_all() -> Vec<Check> {
    let mut out = run_criteria();
    out.extend(run_extras());
    out
}

// ------------------------------------------------------------------ helpers

fn collect(failures: Vec<String>, ok: String) -> std::result::Result<String, String> {
    if failures.is_empty() {
        Ok(ok)
    } else {
        Err(failures.join("; "))
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn exact_table(name: &str) -> std::result::Result<IrrepTable<Rat>, String> {
    match builtin(name).map_err(e)? {
        AnyIrrepTable::Exact(t) => Ok(t),
        AnyIrrepTable::Complex(_) => Err(format!("{name} is not exact")),
    }
}

// ---------------------------------------------------------------- criteria

fn criterion_1() -> std::result::Result<String, String> {
    let mut failures = Vec::new();
    for n in 1..=3 {
        let d = cayley_operator(n).map_err(e)?;
        let det = poly_det(n);
        for r in 1..=3u32 {
            let lhs = d.apply(&det.pow(r)).map_err(e)?;
            let rhs = det.pow(r - 1).scale(&Rat::from_bigint(mu(r, n)));
            if lhs != rhs {
                failures.push(format!("n={n} r={r}"));
            }
        }
    }
    collect(failures, "9 cases exact".into())
}

fn criterion_2() -> std::result::Result<String, String> {
    let mut failures = Vec::new();
    for n in 1..=3 {
        for r in 1..=3u32 {
            let literal = apply_cayley_power(&poly_det(n).pow(r), r).map_err(e)?;
            let product: BigInt = (1..=r).map(|i| mu(i, n)).product();
            let closed = cayley_power_on_det_power(r, n);
            if literal.num_terms() > 1
                || literal.eval_at_zero() != Rat::from_bigint(product.clone())
                || closed != product
            {
                failures.push(format!("n={n} r={r}: literal {literal}, product {product}"));
            }
        }
    }
    collect(failures, "9 cases exact".into())
}

fn criterion_3() -> std::result::Result<String, String> {
    let mut failures = Vec::new();
    for m in 0..=5usize {
        let catalan = factorial(2 * m) / (factorial(m) * factorial(m + 1));
        let dim = sl_invariant_dim(2, m as u32);
        if dim != catalan {
            failures.push(format!("m={m}: {dim} vs Catalan {catalan}"));
        }
        if (1..=3).contains(&m) {
            let oracle =
                lie_invariant_dim_oracle(OracleKind::SpecialLinear, 2, 2 * m).map_err(e)?;
            if BigInt::from(oracle) != dim {
                failures.push(format!("m={m}: oracle {oracle} vs {dim}"));
            }
        }
    }
    collect(
        failures,
        "C_0..C_5 = 1,1,2,5,14,42; oracle agrees for m<=3".into(),
    )
}

fn criterion_4() -> std::result::Result<String, String> {
    let mut failures = Vec::new();
    for n in 1..=3 {
        let det = poly_det(n);
        for r in 1..=3u32 {
            let p = det.pow(r).sub(&det.pow(r - 1)).map_err(e)?;
            let value = sl_integral(&p, n).map_err(e)?;
            if !value.is_zero() {
                failures.push(format!("n={n} r={r}: {value}"));
            }
        }
    }
    collect(failures, "9 cases are exactly 0".into())
}

fn criterion_5() -> std::result::Result<String, String> {
    let mut failures = Vec::new();
    for n in 2..=5usize {
        let t = weingarten_coefficients(1, n, GroupKind::Orthogonal).map_err(e)?;
        let expected = Rat::new(1, n as i64);
        if t.coeffs.len() != 1 || t.get(&[1]) != Some(&expected) {
            failures.push(format!("n={n}: {:?}", t.coeffs));
        }
    }
    collect(failures, "1/2, 1/3, 1/4, 1/5".into())
}

fn compare_pair(
    label: String,
    table: &crate::weingarten::WeingartenTable,
    c11: Rat,
    c2: Rat,
    failures: &mut Vec<String>,
    passes: &mut Vec<String>,
) {
    let got11 = table.get(&[1, 1]).cloned();
    let got2 = table.get(&[2]).cloned();
    let show = |x: &Option<Rat>| x.as_ref().map_or("-".into(), Rat::to_string);
    if got11.as_ref() == Some(&c11) && got2.as_ref() == Some(&c2) {
        passes.push(format!("{label}: {c11}, {c2}"));
    } else {
        failures.push(format!(
            "{label}: computed (1,1)={} (2)={}, reference {c11}, {c2}",
            show(&got11),
            show(&got2)
        ));
    }
}

fn criterion_6() -> std::result::Result<String, String> {
    let (mut failures, mut passes) = (Vec::new(), Vec::new());
    for n in 2..=5i64 {
        let t = weingarten_coefficients(2, n as usize, GroupKind::Orthogonal).map_err(e)?;
        let den = n.pow(4) + n.pow(3) + n * n - 3 * n;
        compare_pair(
            format!("n={n}"),
            &t,
            Rat::new(3 * n * n + 3 * n + 3, den),
            Rat::new(-3 * n - 6, den),
            &mut failures,
            &mut passes,
        );
    }
    collect(failures, passes.join("; "))
}

fn criterion_7() -> std::result::Result<String, String> {
    let (mut failures, mut passes) = (Vec::new(), Vec::new());
    for d in [2usize, 4, 6] {
        let t = weingarten_coefficients(1, d, GroupKind::Symplectic).map_err(e)?;
        let expected = Rat::new(1, d as i64);
        if t.get(&[1]) == Some(&expected) {
            passes.push(format!("m=1 dim={d}: {expected}"));
        } else {
            failures.push(format!("m=1 dim={d}: {:?}", t.coeffs));
        }
    }
    for d in [4i64, 6] {
        let t = weingarten_coefficients(2, d as usize, GroupKind::Symplectic).map_err(e)?;
        let den = d.pow(4) - d.pow(3) + d * d + 3 * d;
        compare_pair(
            format!("m=2 dim={d}"),
            &t,
            Rat::new(3 * d * d - 3 * d + 3, den),
            Rat::new(3 * d - 6, den),
            &mut failures,
            &mut passes,
        );
    }
    collect(failures, passes.join("; "))
}

fn criterion_8() -> std::result::Result<String, String> {
    let (mut failures, mut passes) = (Vec::new(), Vec::new());
    let cases = [
        (GroupKind::Orthogonal, OracleKind::Orthogonal, 2),
        (GroupKind::Orthogonal, OracleKind::Orthogonal, 3),
        (GroupKind::Symplectic, OracleKind::Symplectic, 4),
        (GroupKind::Symplectic, OracleKind::Symplectic, 6),
    ];
    for (kind, oracle_kind, dim) in cases {
        for m in 1..=2usize {
            let p = InvariantProjector::new(kind, dim, 2 * m).map_err(e)?;
            let idempotent = p.is_idempotent().map_err(e)?;
            let rank = p.rank();
            let oracle = lie_invariant_dim_oracle(oracle_kind, dim, 2 * m).map_err(e)?;
            let mut fixed = true;
            for s in rational_group_elements(kind, dim).map_err(e)? {
                fixed &= p.is_fixed_by(&s).map_err(e)?;
            }
            let label = format!("{kind} dim={dim} m={m}");
            if idempotent && rank == oracle && fixed {
                passes.push(format!("{label} rank {rank}"));
            } else {
                failures.push(format!("{label}: idempotent={idempotent} rank={rank} oracle={oracle} invariant={fixed}"));
            }
        }
    }
    collect(failures, passes.join("; "))
}

fn criterion_9() -> std::result::Result<String, String> {
    let (mut failures, mut count) = (Vec::new(), 0);
    let cases = [
        (GroupKind::Orthogonal, OracleKind::Orthogonal, vec![1, 2, 3]),
        (GroupKind::Symplectic, OracleKind::Symplectic, vec![2, 4, 6]),
    ];
    for (kind, oracle_kind, dims) in cases {
        for dim in dims {
            for m in 0..=1usize {
                let order = 2 * m + 1;
                let p = InvariantProjector::new(kind, dim, order).map_err(e)?;
                let oracle = lie_invariant_dim_oracle(oracle_kind, dim, order).map_err(e)?;
                // every basis tensor projects to zero
                let len = dim.pow(order as u32);
                let mut all_zero = p.component().is_zero();
                for flat in 0..len {
                    let mut entries = vec![Rat::ZERO; len];
                    entries[flat] = Rat::ONE;
                    let v = Tensor::from_entries(dim, vec![Variance::Vector; order], entries)
                        .map_err(e)?;
                    all_zero &= p.apply(&v).map_err(e)?.is_zero();
                }
                count += 1;
                if !all_zero || oracle != 0 {
                    failures.push(format!("{kind} dim={dim} order={order}: projection zero={all_zero}, oracle={oracle}"));
                }
            }
        }
    }
    collect(
        failures,
        format!("{count} cases vanish by component and oracle"),
    )
}

fn harmonic_suite<S: Scalar>(
    table: &IrrepTable<S>,
    random: &mut dyn FnMut() -> S,
    a3: Option<Vec<usize>>,
) -> Vec<String> {
    let mut failures = Vec::new();
    let g = table.group();
    let order = g.order();
    let mut rand_fn = || GroupFunction::new((0..order).map(|_| random()).collect());
    for _ in 0..20 {
        let (a, b) = (rand_fn(), rand_fn());
        let (fa, fb) = (fourier(&a, table).unwrap(), fourier(&b, table).unwrap());
        if !fourier(&convolution(&a, &b, g).unwrap(), table)
            .unwrap()
            .close(&fa.mul(&fb))
        {
            failures.push("convolution theorem".to_string());
        }
        if !parseval_pairing(&a, &b, table).unwrap().equal {
            failures.push("Parseval".to_string());
        }
        if !fa.trace().close(&a.values[g.identity()]) {
            failures.push("tr F(a) = a(e)".to_string());
        }
    }
    if let Err(err) = peter_weyl_gram(table) {
        failures.push(format!("Peter-Weyl: {err}"));
    }
    for x in g.elements() {
        let delta = GroupFunction::indicator(g, x);
        if !inverse_fourier(&fourier(&delta, table).unwrap(), table)
            .unwrap()
            .close(&delta)
        {
            failures.push(format!("inversion at delta_{x}"));
        }
    }
    for i in 0..table.len() {
        let n = S::from_int(table.degrees()[i] as i64);
        let expected = DualElement::unit(table, i).scale(&(S::one() / n));
        if !fourier(&GroupFunction::character(table, i), table)
            .unwrap()
            .close(&expected)
        {
            failures.push(format!("F(chi_{i}) != 1_{i}/n_{i}"));
        }
    }
    if let Some(h) = a3 {
        let r = poisson_check(&h, &GroupFunction::regular_character(g), table).unwrap();
        let a = rand_fn();
        let r2 = poisson_check(&h, &a, table).unwrap();
        if !(r.equal && r.lhs.close(&S::from_int(2)) && r2.equal) {
            failures.push(format!("Poisson: {r:?}"));
        }
    }
    failures.sort();
    failures.dedup();
    failures
}

fn criterion_10() -> std::result::Result<String, String> {
    let s3 = exact_table("s3")?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let names = s3.group().names();
    let a3: Vec<usize> = ["e", "(123)", "(132)"]
        .iter()
        .map(|n| {
            names
                .iter()
                .position(|x| x == n)
                .ok_or(format!("S3 element {n} missing"))
        })
        .collect::<std::result::Result<_, _>>()?;
    let mut rand_rat = || Rat::new(rng.gen_range(-20..=20), rng.gen_range(1..=6));
    let mut failures: Vec<String> = harmonic_suite(&s3, &mut rand_rat, Some(a3))
        .into_iter()
        .map(|f| format!("S3 {f}"))
        .collect();
    let c5 = match builtin("c5").map_err(e)? {
        AnyIrrepTable::Complex(t) => t,
        AnyIrrepTable::Exact(_) => return Err("c5 should be complex".into()),
    };
    let mut rng = StdRng::seed_from_u64(0xc5);
    let mut rand_c = || Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    failures.extend(
        harmonic_suite(&c5, &mut rand_c, None)
            .into_iter()
            .map(|f| format!("C5 {f}")),
    );
    collect(
        failures,
        "Parseval, Peter-Weyl, 20 convolution pairs, inversion, trace, characters, Poisson".into(),
    )
}

fn criterion_11() -> std::result::Result<String, String> {
    let s3 = exact_table("s3")?;
    let reg = regular_representation::<Rat>(s3.group());
    let projections = (0..s3.len())
        .map(|i| isotypic_projection(&reg, i, &s3))
        .collect::<crate::Result<Vec<_>>>()
        .map_err(e)?;
    let mut ranks: Vec<usize> = projections.iter().map(SMat::rank).collect();
    ranks.sort_unstable();
    let total = projections.iter().fold(SMat::zeros(6), |acc, p| acc.add(p));
    if ranks == [1, 1, 4] && total == SMat::identity(6) {
        Ok("ranks 1, 1, 4; sum is the identity".into())
    } else {
        Err(format!(
            "ranks {ranks:?}, sum is identity: {}",
            total == SMat::identity(6)
        ))
    }
}

// ------------------------------------------------------------------- extras

fn extra_gl() -> std::result::Result<String, String> {
    let mut failures = Vec::new();
    for n in 1..=3 {
        for s in 0..=3u32 {
            let v = gl_integral(&GlIntegralQuery::new(poly_det(n).pow(s), s)).map_err(e)?;
            if v != Rat::ONE {
                failures.push(format!("normalization n={n} s={s}: {v}"));
            }
        }
    }
    let x11 = crate::poly::Poly::var(2, 0, 0);
    if gl_integral(&GlIntegralQuery::new(x11, 1)).map_err(e)? != Rat::ZERO {
        failures.push("off-degree numerator".into());
    }
    collect(
        failures,
        "normalization for n, s <= 3; off-degree parts vanish".into(),
    )
}

fn extra_representatives() -> std::result::Result<String, String> {
    let cases = [
        (3, 2, GroupKind::Orthogonal),
        (2, 3, GroupKind::Orthogonal),
        (2, 4, GroupKind::Symplectic),
    ];
    for (m, dim, kind) in cases {
        check_representative_independence(m, dim, kind).map_err(e)?;
    }
    Ok("O m=3 dim=2, O m=2 dim=3, Sp m=2 dim=4".into())
}

fn extra_normalization() -> std::result::Result<String, String> {
    use crate::tensor::{contract_full, metric};
    use crate::weingarten::{
        a_tensor_for_perm, canonical_perm, cycle_types, integral_component, max_part,
        sigma_tilde_id,
    };
    let mut failures = Vec::new();
    for (kind, dim) in [
        (GroupKind::Orthogonal, 3),
        (GroupKind::Orthogonal, 2),
        (GroupKind::Symplectic, 4),
    ] {
        let comp = integral_component(4, dim, kind).map_err(e)?;
        let met = metric(kind, dim).map_err(e)?;
        for ct in cycle_types(2, max_part(kind, dim)) {
            let a = a_tensor_for_perm(&canonical_perm(&ct), &met).map_err(e)?;
            let v =
                contract_full(&comp, &a).map_err(e)? / Rat::from_bigint(sigma_tilde_id(&ct, dim));
            if v != Rat::ONE {
                failures.push(format!("{kind} dim={dim} {ct}: {v}"));
            }
        }
    }
    collect(
        failures,
        "component paired with every a_sigma / sigma~(Id) is 1".into(),
    )
}

fn extra_pair_span() -> std::result::Result<String, String> {
    let mut failures = Vec::new();
    for (kind, ok, dim) in [
        (GroupKind::Orthogonal, OracleKind::Orthogonal, 2),
        (GroupKind::Orthogonal, OracleKind::Orthogonal, 3),
        (GroupKind::Symplectic, OracleKind::Symplectic, 2),
        (GroupKind::Symplectic, OracleKind::Symplectic, 4),
    ] {
        for m in 1..=2 {
            let span = orthosymplectic_invariant_basis(m, dim, kind).map_err(e)?;
            let oracle = lie_invariant_dim_oracle(ok, dim, 2 * m).map_err(e)?;
            if span.rank != oracle {
                failures.push(format!(
                    "{kind} dim={dim} m={m}: span {} oracle {oracle}",
                    span.rank
                ));
            }
        }
    }
    collect(failures, "ranks agree".into())
}

fn extra_fourier() -> std::result::Result<String, String> {
    let d4 = exact_table("d4")?;
    let g = d4.group();
    let a = GroupFunction::new((0..8).map(|k| Rat::new(k * k - 5, 3)).collect());
    let hat = fourier(&a, &d4).map_err(e)?;
    let mut failures = Vec::new();
    for x in g.elements() {
        if fourier(&a.translate_left(g, x), &d4).map_err(e)? != hat.translate_left(&d4, x) {
            failures.push(format!("left equivariance at {x}"));
        }
        if fourier(&a.translate_right(g, x), &d4).map_err(e)? != hat.translate_right(&d4, x) {
            failures.push(format!("right equivariance at {x}"));
        }
    }
    if fourier(&a.star(g), &d4).map_err(e)? != hat.star(&d4) {
        failures.push("star".into());
    }
    let w = DualElement::unit(&d4, 0);
    if w.mul(&w) != w || fourier(&GroupFunction::constant(g, Rat::ONE), &d4).map_err(e)? != w {
        failures.push("w_G".into());
    }
    let c7 = cyclic_table(7).map_err(e)?;
    let b = GroupFunction::new((0..7).map(|k| Complex64::new(k as f64, 0.5)).collect());
    if !fourier(&b.star(c7.group()), &c7)
        .map_err(e)?
        .close(&fourier(&b, &c7).map_err(e)?.star(&c7))
    {
        failures.push("star on C7".into());
    }
    collect(failures, "D4 exact, C7 within 1e-9".into())
}

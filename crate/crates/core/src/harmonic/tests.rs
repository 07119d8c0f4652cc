use num_complex::Complex64;
use proptest::prelude::*;

use super::*;
use crate::json::AnyIrrepTable;
use crate::rat::Rat;

fn exact(name: &str) -> IrrepTable<Rat> {
    match builtin(name).unwrap() {
        AnyIrrepTable::Exact(t) => t,
        AnyIrrepTable::Complex(_) => panic!("{name} should be exact"),
    }
}

fn complex(name: &str) -> IrrepTable<Complex64> {
    match builtin(name).unwrap() {
        AnyIrrepTable::Complex(t) => t,
        AnyIrrepTable::Exact(_) => panic!("{name} should be complex"),
    }
}

fn s3_index(t: &IrrepTable<Rat>, name: &str) -> usize {
    t.group().names().iter().position(|n| n == name).unwrap()
}

#[test]
fn all_builtins_load() {
    for name in builtin_names() {
        builtin(name).unwrap();
    }
    assert_eq!(exact("s3xc2").group().order(), 12);
    assert_eq!(exact("s3xc2").len(), 6);
    assert_eq!(complex("c7").len(), 7);
    assert!(builtin("q8").is_err());
}

#[test]
fn shipped_cyclic_tables_match_generated_ones() {
    for n in [3, 5] {
        let shipped = complex(&format!("c{n}"));
        let generated = cyclic_table(n).unwrap();
        for i in 0..n {
            for g in 0..n {
                assert!(shipped.rho(i, g).close(generated.rho(i, g)));
            }
        }
    }
}

#[test]
fn invariant_integral_examples() {
    let c2 = exact("c2");
    assert_eq!(
        invariant_integral(c2.group(), &GroupFunction::constant(c2.group(), Rat::ONE)).unwrap(),
        Rat::ONE
    );
    let s3 = exact("s3");
    let reg = GroupFunction::<Rat>::regular_character(s3.group());
    assert_eq!(invariant_integral(s3.group(), &reg).unwrap(), Rat::ONE);
    assert_eq!(
        invariant_integral(s3.group(), &GroupFunction::character(&s3, 1)).unwrap(),
        Rat::ZERO
    );
    // translation invariance
    let a = GroupFunction::new((0..6).map(|k| Rat::from_int(k * k - 3)).collect());
    for g in s3.group().elements() {
        assert_eq!(
            invariant_integral(s3.group(), &a.translate_left(s3.group(), g)).unwrap(),
            invariant_integral(s3.group(), &a).unwrap()
        );
    }
}

#[test]
fn fourier_examples() {
    let s3 = exact("s3");
    let g = s3.group();
    let one = fourier(&GroupFunction::constant(g, Rat::ONE), &s3).unwrap();
    assert_eq!(one, DualElement::unit(&s3, 0));
    assert_eq!(one.mul(&one), one);
    for i in 0..s3.len() {
        let hat = fourier(&GroupFunction::character(&s3, i), &s3).unwrap();
        let n = Rat::from_int(s3.degrees()[i] as i64);
        assert_eq!(hat, DualElement::unit(&s3, i).scale(&n.recip().unwrap()));
    }
    let delta = fourier(&GroupFunction::delta(g, g.identity()), &s3).unwrap();
    assert!(delta.blocks.iter().all(|b| *b == SMat::identity(b.size())));
}

#[test]
fn inversion_roundtrip_on_delta_basis() {
    let s3 = exact("s3");
    for x in s3.group().elements() {
        let a = GroupFunction::indicator(s3.group(), x);
        assert_eq!(inverse_fourier(&fourier(&a, &s3).unwrap(), &s3).unwrap(), a);
    }
    let unit = DualElement::unit(&s3, 0);
    assert_eq!(
        inverse_fourier(&unit, &s3).unwrap(),
        GroupFunction::constant(s3.group(), Rat::ONE)
    );
}

#[test]
fn convolution_examples() {
    let s3 = exact("s3");
    let g = s3.group();
    for x in g.elements() {
        for y in g.elements() {
            let c = convolution(
                &GroupFunction::<Rat>::delta(g, x),
                &GroupFunction::delta(g, y),
                g,
            )
            .unwrap();
            assert_eq!(c, GroupFunction::delta(g, g.mul(y, x)));
        }
    }
    let sign = GroupFunction::character(&s3, 1);
    let trivial = GroupFunction::character(&s3, 0);
    assert!(convolution(&sign, &trivial, g)
        .unwrap()
        .values
        .iter()
        .all(Rat::is_zero));
    let a = GroupFunction::new((0..6).map(|k| Rat::new(k + 1, 2)).collect());
    let b = GroupFunction::new((0..6).map(|k| Rat::from_int(3 - k)).collect());
    assert_eq!(
        convolution(&a, &b, g).unwrap().values[g.identity()],
        pairing(&a, &b, g).unwrap()
    );
}

#[test]
fn parseval_examples() {
    let s3 = exact("s3");
    let g = s3.group();
    for i in 0..s3.len() {
        for j in 0..s3.len() {
            let p = parseval_pairing(
                &GroupFunction::character(&s3, i),
                &GroupFunction::character(&s3, j),
                &s3,
            )
            .unwrap();
            assert!(p.equal);
            assert_eq!(p.direct, if i == j { Rat::ONE } else { Rat::ZERO });
        }
    }
    let one = GroupFunction::constant(g, Rat::ONE);
    assert_eq!(parseval_pairing(&one, &one, &s3).unwrap().direct, Rat::ONE);
    let d12 = GroupFunction::matrix_coefficient(&s3, 2, 0, 1);
    let d21 = GroupFunction::matrix_coefficient(&s3, 2, 1, 0);
    let p = parseval_pairing(&d12, &d21, &s3).unwrap();
    assert!(p.equal);
    assert_eq!(p.direct, Rat::new(1, 2));
}

#[test]
fn peter_weyl_patterns() {
    let s3 = peter_weyl_gram(&exact("s3")).unwrap();
    assert_eq!(s3.labels.len(), 6);
    let values: std::collections::BTreeSet<Rat> = s3.gram.iter().flatten().cloned().collect();
    assert_eq!(
        values,
        [Rat::ZERO, Rat::new(1, 2), Rat::ONE].into_iter().collect()
    );
    peter_weyl_gram(&exact("d4")).unwrap();
    peter_weyl_gram(&complex("c3")).unwrap();
    assert_eq!(
        peter_weyl_gram(&exact("trivial")).unwrap().gram,
        vec![vec![Rat::ONE]]
    );
}

#[test]
fn isotypic_projections_of_the_regular_representation() {
    let s3 = exact("s3");
    let reg = regular_representation::<Rat>(s3.group());
    let projections: Vec<SMat<Rat>> = (0..s3.len())
        .map(|i| isotypic_projection(&reg, i, &s3).unwrap())
        .collect();
    let ranks: Vec<usize> = projections.iter().map(SMat::rank).collect();
    assert_eq!(ranks, vec![1, 1, 4]);
    let total = projections.iter().fold(SMat::zeros(6), |acc, p| acc.add(p));
    assert_eq!(total, SMat::identity(6));
    for (i, p) in projections.iter().enumerate() {
        assert_eq!(p.mul(p), *p);
        for (j, q) in projections.iter().enumerate() {
            if i != j {
                assert_eq!(p.mul(q), SMat::zeros(6));
            }
        }
    }
    let bad = vec![SMat::identity(2); 5];
    assert!(isotypic_projection(&bad, 0, &s3).is_err());
}

#[test]
fn poisson_summation() {
    let s3 = exact("s3");
    let g = s3.group();
    let a3: Vec<usize> = ["e", "(123)", "(132)"]
        .iter()
        .map(|n| s3_index(&s3, n))
        .collect();
    let report = poisson_check(&a3, &GroupFunction::regular_character(g), &s3).unwrap();
    assert!(report.equal);
    assert_eq!(report.lhs, Rat::from_int(2));
    assert_eq!(report.quotient_irreps, vec![0, 1]);
    let a = GroupFunction::new((0..6).map(|k| Rat::new(k * k + 1, 3)).collect());
    let all: Vec<usize> = g.elements().collect();
    let whole = poisson_check(&all, &a, &s3).unwrap();
    assert!(whole.equal);
    assert_eq!(whole.lhs, invariant_integral(g, &a).unwrap());
    let trivial = poisson_check(&[g.identity()], &a, &s3).unwrap();
    assert_eq!(trivial.rhs, a.values[g.identity()]);
    let transposition = [g.identity(), s3_index(&s3, "(12)")];
    assert!(matches!(
        poisson_check(&transposition, &a, &s3),
        Err(crate::Error::NotNormal(_))
    ));
}

#[test]
fn complex_backend_suite() {
    let c5 = complex("c5");
    let g = c5.group();
    let a = GroupFunction::new(
        (0..5)
            .map(|k| Complex64::new(k as f64, 1.0 - k as f64))
            .collect(),
    );
    let b = GroupFunction::new(
        (0..5)
            .map(|k| Complex64::new(0.5, k as f64 * 0.25))
            .collect(),
    );
    let lhs = fourier(&convolution(&a, &b, g).unwrap(), &c5).unwrap();
    assert!(lhs.close(&fourier(&a, &c5).unwrap().mul(&fourier(&b, &c5).unwrap())));
    assert!(parseval_pairing(&a, &b, &c5).unwrap().equal);
    peter_weyl_gram(&c5).unwrap();
    let roundtrip = inverse_fourier(&fourier(&a, &c5).unwrap(), &c5).unwrap();
    assert!(roundtrip.close(&a));
    assert!(fourier(&a.star(g), &c5)
        .unwrap()
        .close(&fourier(&a, &c5).unwrap().star(&c5)));
}

fn arb_function(order: usize) -> impl Strategy<Value = GroupFunction<Rat>> {
    proptest::collection::vec((-9i64..10, 1i64..4), order)
        .prop_map(|xs| GroupFunction::new(xs.into_iter().map(|(p, q)| Rat::new(p, q)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn convolution_theorem_s3(a in arb_function(6), b in arb_function(6)) {
        let s3 = exact("s3");
        let lhs = fourier(&convolution(&a, &b, s3.group()).unwrap(), &s3).unwrap();
        prop_assert_eq!(lhs, fourier(&a, &s3).unwrap().mul(&fourier(&b, &s3).unwrap()));
    }

    #[test]
    fn convolution_theorem_d4(a in arb_function(8), b in arb_function(8)) {
        let d4 = exact("d4");
        let lhs = fourier(&convolution(&a, &b, d4.group()).unwrap(), &d4).unwrap();
        prop_assert_eq!(lhs, fourier(&a, &d4).unwrap().mul(&fourier(&b, &d4).unwrap()));
    }

    #[test]
    fn trace_of_transform_is_evaluation_at_identity(a in arb_function(8)) {
        let d4 = exact("d4");
        prop_assert_eq!(fourier(&a, &d4).unwrap().trace(), a.values[d4.group().identity()].clone());
    }

    #[test]
    fn transform_is_equivariant(a in arb_function(6), g in 0usize..6) {
        let s3 = exact("s3");
        let hat = fourier(&a, &s3).unwrap();
        let grp = s3.group();
        prop_assert_eq!(fourier(&a.translate_left(grp, g), &s3).unwrap(), hat.translate_left(&s3, g));
        prop_assert_eq!(fourier(&a.translate_right(grp, g), &s3).unwrap(), hat.translate_right(&s3, g));
    }

    #[test]
    fn transform_commutes_with_star(a in arb_function(6), b in arb_function(12)) {
        let s3 = exact("s3");
        prop_assert_eq!(fourier(&a.star(s3.group()), &s3).unwrap(), fourier(&a, &s3).unwrap().star(&s3));
        let prod = exact("s3xc2");
        prop_assert_eq!(fourier(&b.star(prod.group()), &prod).unwrap(), fourier(&b, &prod).unwrap().star(&prod));
    }
}

#[test]
fn rejects_bad_irrep_tables() {
    let s3 = exact("s3");
    let g = s3.group().clone();
    // drop the 2-dimensional irrep
    let partial = s3.irreps()[..2].to_vec();
    assert!(matches!(
        IrrepTable::new(g.clone(), partial),
        Err(crate::Error::InvalidIrreps(_))
    ));
    // the sign character listed first
    let mut swapped = s3.irreps().to_vec();
    swapped.swap(0, 1);
    assert!(IrrepTable::new(g.clone(), swapped).is_err());
    // a non-homomorphism
    let mut broken = s3.irreps().to_vec();
    broken[1].matrices[1] = SMat::identity(1);
    assert!(IrrepTable::new(g, broken).is_err());
}

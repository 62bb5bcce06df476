mod common;

use std::collections::BTreeMap;

use common::{seeded, Naive};
use dialgebra::free::{free_product, BasisWord, FreeMda};
use dialgebra::homology::*;
use dialgebra::linalg::Rational;
use dialgebra::operad::CombSequence;
use dialgebra::samples;
use dialgebra::structure::{BilinearProduct, FiniteAlgebra};
use proptest::prelude::*;

fn word(s: &str) -> BasisWord {
    s.parse().unwrap()
}

/// Word products for the free algebra on `m` letters.
fn free_mul(m: u32) -> impl Fn(u8, &BasisWord, &BasisWord) -> Vec<(BasisWord, Rational)> {
    let f = FreeMda::new(m, 2);
    move |l, a, b| {
        let p = free_product(l, &f.word(a.clone()).unwrap(), &f.word(b.clone()).unwrap()).unwrap();
        p.terms().iter().map(|(w, c)| (w.clone(), c.clone())).collect()
    }
}

fn el(labels: &[u8], args: &[&str]) -> KoszulBasisElement<BasisWord> {
    KoszulBasisElement {
        lambda: CombSequence::new(labels.to_vec()),
        args: args.iter().map(|s| word(s)).collect(),
    }
}

fn collect<T: Ord + Clone>(terms: Vec<(T, Rational)>) -> BTreeMap<T, Rational> {
    let mut out: BTreeMap<T, Rational> = BTreeMap::new();
    for (t, c) in terms {
        let e = out.entry(t).or_insert_with(Rational::zero);
        *e = &*e + &c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn differential_examples() {
    let mul = free_mul(3);
    let d = differential(&el(&[1], &["x1", "x2"]), 2, LabelRule::Direct, &mul);
    assert_eq!(d, vec![(el(&[], &["x1 *1 x2"]), Rational::one())]);

    let d = collect(differential(&el(&[1, 2], &["x1", "x2", "x3"]), 2, LabelRule::Direct, &mul));
    let expected = collect(vec![
        (el(&[2], &["x1 *1 x2", "x3"]), Rational::one()),
        (el(&[1], &["x1", "x2 *2 x3"]), -Rational::one()),
    ]);
    assert_eq!(d, expected);

    // applying d again realizes (x *1 y) *2 z = x *1 (y *2 z), which holds for words
    let dd: Vec<_> = d
        .iter()
        .flat_map(|(e, c)| {
            differential(e, 2, LabelRule::Direct, &mul)
                .into_iter()
                .map(move |(e2, c2)| (e2, c * &c2))
        })
        .collect();
    assert!(collect(dd).is_empty());
    assert_eq!(el(&[1, 2], &["x1", "x2", "x3"]).to_string(), "(1, 2) ⊗ (x1, x2, x3)");
}

fn field() -> FiniteAlgebra {
    let p = BilinearProduct::from_sparse(1, &[(0, 0, 0, 1)]);
    FiniteAlgebra::two_product(p.clone(), p).unwrap()
}

#[test]
fn finite_complex_examples() {
    let c = build_complex_finite(&field(), 3).unwrap();
    assert_eq!(c.dims(), vec![1, 2, 4, 8]);
    assert!(c.verify_d_squared().is_none());
    let c = build_complex_finite(&samples::epsilon_mda(), 6).unwrap();
    assert!(c.verify_d_squared().is_none());
    let c = build_complex_finite(&samples::epsilon_mda(), 2).unwrap();
    assert_eq!(c.dims(), vec![2, 8, 32]);
    for (n, dim) in c.dims().into_iter().enumerate() {
        assert_eq!(dim, 2usize.pow(n as u32) * 2usize.pow(n as u32 + 1));
    }
    let broken = FiniteAlgebra::two_product(
        samples::epsilon_mda().pair().unwrap().0.clone(),
        BilinearProduct::from_sparse(2, &[(0, 0, 0, 1)]),
    )
    .unwrap();
    assert!(matches!(build_complex_finite(&broken, 2), Err(HomologyError::NotMda { .. })));
    assert!(matches!(build_complex_finite(&field(), 0), Err(HomologyError::Invalid(_))));
}

#[test]
fn unchecked_complex_of_the_failing_pair() {
    let eps = samples::epsilon_mda();
    let (p1, _) = eps.pair().unwrap();
    let q2 = BilinearProduct::from_sparse(2, &[(0, 0, 0, 1)]);
    let broken = FiniteAlgebra::two_product(p1.clone(), q2.clone()).unwrap();
    let c = build_complex_finite_unchecked(&broken, 2, LabelRule::Direct);
    let w = c.verify_d_squared().expect("d² ≠ 0");
    assert_eq!(w.degree, 2);
    let src = &c.degrees[2][w.source_index];
    let (l1, l2) = (src.lambda.labels()[0], src.lambda.labels()[1]);
    let pick = |l: u8| if l == 1 { Naive::of(p1) } else { Naive::of(&q2) };
    let residual = common::mixed(&pick(l1), &pick(l2), src.args[0].0, src.args[1].0, src.args[2].0);
    let mut image = vec![Rational::zero(); 2];
    for (i, v) in &w.image {
        image[*i] = v.clone();
    }
    assert_eq!(image, residual);
    assert!(dialgebra::structure::is_matching_dialgebra(p1, &q2)
        .get(&axiom_for_labels(l1, l2))
        .is_some_and(|c| !c.holds()));
}

/// Basis size of the weight-`w` free complex in degree `n - 1`, counted by
/// compositions of `w` into `n` word lengths.
fn free_count(m: usize, w: usize, n: usize) -> usize {
    fn go(m: usize, left: usize, parts: usize) -> usize {
        if parts == 0 {
            return usize::from(left == 0);
        }
        (1..=left).map(|len| m.pow(len as u32) * 2usize.pow(len as u32 - 1) * go(m, left - len, parts - 1)).sum()
    }
    2usize.pow(n as u32 - 1) * go(m, w, n)
}

#[test]
fn free_complex_examples() {
    let c = build_complex_free(1, 1, 2, LabelRule::Direct).unwrap();
    assert_eq!(c.dims(), vec![1]);
    assert_eq!(c.homology_ranks().unwrap(), vec![1]);
    let c = build_complex_free(1, 2, 2, LabelRule::Direct).unwrap();
    assert_eq!(c.dims(), vec![2, 2]);
    assert_eq!(c.differential_ranks(), vec![0, 2]);
    assert_eq!(c.homology_ranks().unwrap(), vec![0, 0]);
    let c = build_complex_free(1, 3, 2, LabelRule::Direct).unwrap();
    assert_eq!(c.dims(), vec![4, 8, 4]);
    let c = build_complex_free(2, 3, 2, LabelRule::Direct).unwrap();
    assert_eq!(c.homology_ranks().unwrap(), vec![0, 0, 0]);
    for (m, w) in [(1, 4), (1, 5), (2, 4), (3, 3)] {
        let c = build_complex_free(m as u32, w, 2, LabelRule::Direct).unwrap();
        let expected: Vec<usize> = (1..=w).map(|n| free_count(m, w, n)).collect();
        assert_eq!(c.dims(), expected);
        let euler: i64 = expected.iter().enumerate().map(|(i, d)| if i % 2 == 0 { *d as i64 } else { -(*d as i64) }).sum();
        assert_eq!(euler, 0);
    }
}

#[test]
fn free_complexes_are_acyclic_above_weight_one() {
    for m in 1..=2u32 {
        for w in 1..=5 {
            let h = build_complex_free(m, w, 2, LabelRule::Direct).unwrap().homology_ranks().unwrap();
            let expected: Vec<usize> = (0..w).map(|d| if (d, w) == (0, 1) { m as usize } else { 0 }).collect();
            assert_eq!(h, expected, "m={m} w={w}");
        }
    }
    let h = build_complex_free(1, 4, 3, LabelRule::Direct).unwrap().homology_ranks().unwrap();
    assert_eq!(h, vec![0; 4]);
}

#[test]
fn swapped_labels_also_square_to_zero() {
    // swapping which product a label contracts with renames the products;
    // the axioms are symmetric under that, so acyclicity cannot tell the
    // two rules apart
    for w in 1..=4 {
        let c = build_complex_free(2, w, 2, LabelRule::Swapped).unwrap();
        assert!(c.verify_d_squared().is_none());
        let h = c.homology_ranks().unwrap();
        assert_eq!(h.iter().sum::<usize>(), if w == 1 { 2 } else { 0 });
    }
    let c = build_complex_finite_unchecked(&samples::epsilon_mda(), 3, LabelRule::Swapped);
    assert!(c.verify_d_squared().is_none());
}

#[test]
fn homology_table_records() {
    let c = build_complex_free(1, 3, 2, LabelRule::Direct).unwrap();
    let t = homology_table(&c, Some(3)).unwrap();
    assert_eq!(t.len(), 3);
    assert_eq!(t.iter().map(|r| r.dim).collect::<Vec<_>>(), vec![4, 8, 4]);
    assert!(t.iter().all(|r| r.homology == Some(0) && r.weight == Some(3)));
    let truncated = build_complex_finite(&samples::epsilon_mda(), 2).unwrap();
    let t = homology_table(&truncated, None).unwrap();
    assert_eq!(t.last().unwrap().homology, None);
}

fn valid_mda(seed: u64, which: u8) -> FiniteAlgebra {
    let mut rng = seeded(seed);
    match which {
        0 => samples::random_commutative_mda(&mut rng, 2),
        1 => samples::random_commutative_mda(&mut rng, 3),
        _ => samples::random_noncommutative_mda(&mut rng),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn valid_algebras_square_to_zero(seed in any::<u64>(), which in 0u8..3) {
        let alg = valid_mda(seed, which);
        let top = match which { 0 => 5, 1 => 3, _ => 3 };
        let c = build_complex_finite(&alg, top).unwrap();
        prop_assert!(c.verify_d_squared().is_none());
        for (i, d) in c.differentials.iter().enumerate() {
            prop_assert_eq!((d.rows(), d.cols()), (c.degrees[i].len(), c.degrees[i + 1].len()));
        }
        prop_assert_eq!(c.homology_ranks().unwrap().len(), top);
    }

    #[test]
    fn free_differential_preserves_weight(m in 1u32..=2, w in 1usize..=5) {
        let c = build_complex_free(m, w, 2, LabelRule::Direct).unwrap();
        for deg in &c.degrees {
            for e in deg {
                prop_assert_eq!(e.args.iter().map(BasisWord::len).sum::<usize>(), w);
                prop_assert_eq!(e.args.len(), e.lambda.arity());
            }
        }
        prop_assert_eq!(c.differentials.len(), c.degrees.len() - 1);
    }
}

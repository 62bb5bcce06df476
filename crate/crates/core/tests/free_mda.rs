mod common;

use common::{seeded, Naive};
use dialgebra::free::*;
use dialgebra::linalg::{basis_vector, Rational};
use dialgebra::samples;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;

fn word(s: &str) -> BasisWord {
    s.parse().unwrap()
}

#[test]
fn product_examples() {
    let f = FreeMda::new(3, 2);
    let (x, y, z) = (f.letter(0).unwrap(), f.letter(1).unwrap(), f.letter(2).unwrap());
    assert_eq!(free_product(1, &x, &y).unwrap(), f.parse_word("x1 *1 x2").unwrap());
    let xy = free_product(1, &x, &y).unwrap();
    let lhs = free_product(2, &xy, &z).unwrap();
    assert_eq!(lhs, f.parse_word("x1 *1 x2 *2 x3").unwrap());
    let rhs = free_product(1, &x, &free_product(2, &y, &z).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    let other = FreeMda::new(2, 2).letter(0).unwrap();
    assert!(free_product(1, &x, &other).is_err());
    assert!(free_product(3, &x, &y).is_err());
}

#[test]
fn word_syntax_round_trips() {
    for s in ["x1", "x1 *1 x2 *2 x3", "x2 *3 x2"] {
        assert_eq!(word(s).to_string(), s);
    }
    assert!("x1 *1".parse::<BasisWord>().is_err());
    assert!("x0".parse::<BasisWord>().is_err());
}

/// Every letter string of length `n` and every label string, independently
/// of the library's enumeration.
fn all_words(m: u32, n: usize, k: u8) -> Vec<BasisWord> {
    let mut out = Vec::new();
    let letters = (m as usize).pow(n as u32);
    let labels = (k as usize).pow(n as u32 - 1);
    for a in 0..letters {
        let ls: Vec<u32> = (0..n).map(|i| ((a / (m as usize).pow(i as u32)) % m as usize) as u32).collect();
        for b in 0..labels {
            let os: Vec<u8> = (0..n - 1).map(|i| ((b / (k as usize).pow(i as u32)) % k as usize) as u8 + 1).collect();
            out.push(BasisWord::new(ls.clone(), os).unwrap());
        }
    }
    out
}

#[test]
fn graded_dimension_matches_enumeration() {
    assert_eq!(graded_dimension(1, 1, 2), BigUint::from(1u32));
    assert_eq!(graded_dimension(2, 3, 2), BigUint::from(32u32));
    assert_eq!(graded_dimension(1, 4, 2), BigUint::from(8u32));
    for (m, n, k) in [(1, 3, 3), (2, 4, 2), (3, 3, 2), (2, 2, 4)] {
        let mine = all_words(m, n, k);
        let theirs: Vec<BasisWord> = words(m, n, k).collect();
        assert_eq!(BigUint::from(mine.len()), graded_dimension(m, n, k));
        let mut a = mine.clone();
        a.sort();
        let mut b = theirs.clone();
        b.sort();
        assert_eq!(a, b);
        assert!(theirs.windows(2).all(|p| p[0] < p[1]), "enumeration is in word order");
    }
}

#[test]
fn axioms_hold_on_basis_words() {
    let f = FreeMda::new(2, 2);
    let by_len: Vec<Vec<FreeElement>> = (1..=4)
        .map(|n| all_words(2, n, 2).into_iter().map(|w| f.word(w).unwrap()).collect())
        .collect();
    let mut count = 0;
    // every triple of words with at most six letters in total
    let shapes = itertools::iproduct!(1..=4usize, 1..=4usize, 1..=4usize).filter(|(a, b, c)| a + b + c <= 6);
    for (lu, lv, lw) in shapes {
        for u in &by_len[lu - 1] {
            for v in &by_len[lv - 1] {
                for w in &by_len[lw - 1] {
                    for i in 1..=2 {
                        for j in 1..=2 {
                            let l = free_product(j, &free_product(i, u, v).unwrap(), w).unwrap();
                            let r = free_product(i, u, &free_product(j, v, w).unwrap()).unwrap();
                            assert_eq!(l, r);
                            assert_eq!(l.terms().len(), 1);
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(count > 20_000);
}

#[test]
fn evaluation_examples() {
    let eps = samples::epsilon_mda();
    let f = FreeMda::new(1, 2);
    let x = f.letter(0).unwrap();
    let e1 = basis_vector(2, 0);
    assert_eq!(evaluate_hom(std::slice::from_ref(&e1), &eps, &x).unwrap(), e1);
    let xx = free_product(1, &x, &x).unwrap();
    assert_eq!(evaluate_hom(std::slice::from_ref(&e1), &eps, &xx).unwrap(), basis_vector(2, 1));

    let broken = dialgebra::structure::FiniteAlgebra::two_product(
        eps.pair().unwrap().0.clone(),
        dialgebra::structure::BilinearProduct::from_sparse(2, &[(0, 0, 0, 1)]),
    )
    .unwrap();
    assert!(matches!(evaluate_hom(&[e1], &broken, &xx), Err(FreeError::NotMda { .. })));
}

fn random_element(rng: &mut impl Rng, f: &FreeMda, m: u32) -> FreeElement {
    let mut e = f.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let n = rng.gen_range(1..=3);
        let letters = (0..n).map(|_| rng.gen_range(0..m)).collect();
        let ops = (0..n - 1).map(|_| rng.gen_range(1..=2)).collect();
        e.add_term(&Rational::from_integer(rng.gen_range(-3..=3)), BasisWord::new(letters, ops).unwrap());
    }
    e
}

#[test]
fn evaluation_is_multiplicative() {
    let mut rng = seeded(21);
    let target = samples::random_noncommutative_mda(&mut rng);
    let (p1, p2) = target.pair().unwrap();
    let naive = [Naive::of(p1), Naive::of(p2)];
    let assignment: Vec<_> = (0..3).map(|i| basis_vector(3, i)).collect();
    let f = FreeMda::new(3, 2);
    for _ in 0..100 {
        let (u, v) = (random_element(&mut rng, &f, 3), random_element(&mut rng, &f, 3));
        let label = rng.gen_range(1..=2u8);
        let uv = free_product(label, &u, &v).unwrap();
        let lhs = evaluate_hom(&assignment, &target, &uv).unwrap();
        let (eu, ev) = (
            evaluate_hom(&assignment, &target, &u).unwrap(),
            evaluate_hom(&assignment, &target, &v).unwrap(),
        );
        assert_eq!(lhs, naive[label as usize - 1].mul(&eu, &ev));
    }
}

#[test]
fn a_second_extension_is_caught_at_its_shortest_difference() {
    let mut rng = seeded(22);
    let target = samples::random_commutative_mda(&mut rng, 3);
    let assignment = vec![basis_vector(3, 0), basis_vector(3, 1)];
    let eval = Evaluator::new(&target, &assignment, 2).unwrap();
    let bad = word("x2 *1 x1 *2 x1");
    let found = first_disagreement(&assignment, &target, 2, 4, |w| {
        let mut v = eval.word(w).unwrap();
        if *w == bad {
            v[0] = &v[0] + &Rational::one();
        }
        v
    })
    .unwrap();
    assert_eq!(found, Some(bad));
    let none = first_disagreement(&assignment, &target, 2, 4, |w| eval.word(w).unwrap()).unwrap();
    assert_eq!(none, None);
}

#[test]
fn nested_word_examples() {
    let (o12, o21) = (Orientation::Outer1Inner2, Orientation::Outer2Inner1);
    let n = NestedWord::new(vec![vec![0], vec![1, 2]], o12).unwrap();
    assert_eq!(flatten_phi(&n), word("x1 *1 x2 *2 x3"));
    assert_eq!(flatten_phi(&NestedWord::new(vec![vec![0]], o12).unwrap()), word("x1"));
    let n = NestedWord::new(vec![vec![0, 1], vec![2]], o21).unwrap();
    assert_eq!(flatten_phi(&n), word("x1 *1 x2 *2 x3"));
    assert_eq!(split_psi(&word("x1 *2 x2 *1 x3"), o12).unwrap().blocks(), &[vec![0, 1], vec![2]]);
    assert_eq!(split_psi(&word("x2"), o21).unwrap().blocks(), &[vec![1]]);
    assert!(NestedWord::new(vec![vec![0], vec![]], o12).is_err());
    assert!(split_psi(&word("x1 *3 x2"), o12).is_err());
}

fn orientation() -> impl Strategy<Value = Orientation> {
    prop_oneof![Just(Orientation::Outer1Inner2), Just(Orientation::Outer2Inner1)]
}

fn nested(o: Orientation) -> impl Strategy<Value = NestedWord> {
    proptest::collection::vec(proptest::collection::vec(0u32..3, 1..=3), 1..=3)
        .prop_map(move |blocks| NestedWord::new(blocks, o).unwrap())
}

proptest! {
    #[test]
    fn phi_preserves_products((u, v, o) in orientation().prop_flat_map(|o| (nested(o), nested(o), Just(o))), label in 1u8..=2) {
        let prod = u.product(label, &v).unwrap();
        prop_assert_eq!(prod.orientation(), o);
        let f = FreeMda::new(3, 2);
        let expected = free_product(label, &f.word(flatten_phi(&u)).unwrap(), &f.word(flatten_phi(&v)).unwrap()).unwrap();
        prop_assert_eq!(f.word(flatten_phi(&prod)).unwrap(), expected);
        prop_assert_eq!(split_psi(&flatten_phi(&prod), o).unwrap(), prod);
    }

    #[test]
    fn splice_is_the_free_product(a in 0usize..40, b in 0usize..40, label in 1u8..=3) {
        let ws: Vec<BasisWord> = (1..=3).flat_map(|n| all_words(2, n, 3)).collect();
        let (u, v) = (&ws[a * 7 % ws.len()], &ws[b * 13 % ws.len()]);
        let f = FreeMda::new(2, 3);
        let p = free_product(label, &f.word(u.clone()).unwrap(), &f.word(v.clone()).unwrap()).unwrap();
        prop_assert_eq!(p, f.word(u.splice(label, v)).unwrap());
        prop_assert_eq!(u.splice(label, v).len(), u.len() + v.len());
    }
}

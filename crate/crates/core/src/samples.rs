//! Small algebras used by the examples and tests, plus random generators
//! of matching dialgebras.

use rand::Rng;

use crate::linalg::{Matrix, Rational};
use crate::structure::{BilinearProduct, FiniteAlgebra, LinearOperator};

/// `k[ε]/(ε²)` with basis `1, ε`.
pub fn dual_numbers() -> BilinearProduct {
    BilinearProduct::from_sparse(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
}

/// On `k[ε]/(ε²)`: `x *1 y = ε x y` and `x *2 y = x y`.
pub fn epsilon_mda() -> FiniteAlgebra {
    let o1 = BilinearProduct::from_sparse(2, &[(0, 0, 1, 1)]);
    FiniteAlgebra::two_product(o1, dual_numbers()).expect("same dimension")
}

/// Basis `a, b` with `a a = a`, `a b = b` and every other product zero.
pub fn left_unit_algebra() -> BilinearProduct {
    BilinearProduct::from_sparse(2, &[(0, 0, 0, 1), (0, 1, 1, 1)])
}

/// The projection `a ↦ 0`, `b ↦ b`.
pub fn project_b() -> LinearOperator {
    LinearOperator(Matrix::from_i64_rows(&[&[0, 0], &[0, 1]]))
}

/// `n × n` matrices with basis `E_ij` at index `i n + j`.
pub fn matrix_algebra(n: usize) -> BilinearProduct {
    BilinearProduct::from_fn(n * n, |a, b, c| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k && c == i * n + l {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Upper triangular `2 × 2` matrices with basis `E11, E12, E22`.
pub fn upper_triangular() -> BilinearProduct {
    BilinearProduct::from_sparse(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)])
}

/// The truncated polynomial algebra `k[t]/(t^n)` with basis `1, t, …, t^(n-1)`.
pub fn truncated_polynomials(n: usize) -> BilinearProduct {
    BilinearProduct::from_fn(n, |i, j, l| {
        if i + j == l {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// The direct product algebra on `A ⊕ B`, coordinates of `A` first.
pub fn direct_product(p: &BilinearProduct, q: &BilinearProduct) -> BilinearProduct {
    let (n, m) = (p.dim(), q.dim());
    BilinearProduct::from_fn(n + m, |i, j, l| match (i < n, j < n, l < n) {
        (true, true, true) => p.coeff(i, j, l).clone(),
        (false, false, false) => q.coeff(i - n, j - n, l - n).clone(),
        _ => Rational::zero(),
    })
}

/// Upper triangular matrices times `k[ε]/(ε²)`; noncommutative with a
/// nontrivial centre.
pub fn upper_triangular_times_dual_numbers() -> BilinearProduct {
    direct_product(&upper_triangular(), &dual_numbers())
}

fn small(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::from_integer(rng.gen_range(-bound..=bound))
}

fn random_vector(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| small(rng, bound)).collect()
}

/// A random invertible integer matrix: unit lower times unit upper triangular.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rational::one(),
        std::cmp::Ordering::Greater => small(rng, 1),
        std::cmp::Ordering::Less => Rational::zero(),
    });
    let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rational::one(),
        std::cmp::Ordering::Less => small(rng, 1),
        std::cmp::Ordering::Greater => Rational::zero(),
    });
    lower.mul(&upper).expect("square")
}

/// Two products with integer constants in `[-bound, bound]`; almost never an MDA.
pub fn random_two_product(rng: &mut impl Rng, dim: usize, bound: i64) -> FiniteAlgebra {
    let mut draw = || BilinearProduct::from_fn(dim, |_, _, _| small(rng, bound));
    let (p1, p2) = (draw(), draw());
    FiniteAlgebra::two_product(p1, p2).expect("same dimension")
}

/// A commutative MDA on `k[t]/(t^n)`: `x *1 y = c x y`, `x *2 y = d x y`
/// for random `c, d`.
pub fn random_commutative_mda(rng: &mut impl Rng, n: usize) -> FiniteAlgebra {
    let base = truncated_polynomials(n);
    let c = random_vector(rng, n, 2);
    let d = random_vector(rng, n, 2);
    let left = |v: &[Rational]| LinearOperator::left_multiplication(&base, v);
    let scaled = |m: &LinearOperator| BilinearProduct::from_basis_products(n, |i, j| m.apply(base.basis_product(i, j)));
    FiniteAlgebra::two_product(scaled(&left(&c)), scaled(&left(&d))).expect("same dimension")
}

/// A noncommutative MDA on upper triangular matrices: `x *1 y = x y` and
/// `x *2 y = x r y` for a random `r`, transported by a random basis change.
pub fn random_noncommutative_mda(rng: &mut impl Rng) -> FiniteAlgebra {
    let base = upper_triangular();
    let r = random_vector(rng, 3, 2);
    let f = LinearOperator::right_multiplication(&base, &r);
    let o2 = BilinearProduct::from_basis_products(3, |i, j| base.apply(&f.image_of_basis(i), &unit(3, j)));
    let change = random_invertible(rng, 3);
    FiniteAlgebra::two_product(
        base.transport(&change).expect("invertible"),
        o2.transport(&change).expect("invertible"),
    )
    .expect("same dimension")
}

/// A `k`-fold family `x *i y = x r_i y` on `n × n` matrices.
pub fn random_multi_matching(rng: &mut impl Rng, n: usize, k: usize) -> FiniteAlgebra {
    let base = matrix_algebra(n);
    let dim = n * n;
    let mut alg = FiniteAlgebra::new(dim);
    for i in 0..k {
        let r = random_vector(rng, dim, 1);
        let f = LinearOperator::right_multiplication(&base, &r);
        let p = BilinearProduct::from_basis_products(dim, |a, b| base.apply(&f.image_of_basis(a), &unit(dim, b)));
        alg = alg.with_product(format!("o{}", i + 1), p).expect("same dimension");
    }
    alg
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    crate::linalg::basis_vector(n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_associative, is_matching_dialgebra, is_multi_matching};
    use rand::SeedableRng;

    #[test]
    fn fixed_samples_are_associative() {
        for p in [dual_numbers(), left_unit_algebra(), matrix_algebra(2), upper_triangular(), truncated_polynomials(4)] {
            assert!(is_associative(&p).holds());
        }
        let (o1, o2) = epsilon_mda().pair().map(|(a, b)| (a.clone(), b.clone())).unwrap();
        assert!(is_matching_dialgebra(&o1, &o2).holds());
    }

    #[test]
    fn generators_produce_mdas() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..5 {
            let a = random_commutative_mda(&mut rng, 3);
            let (p, q) = a.pair().unwrap();
            assert!(is_matching_dialgebra(p, q).holds());
            let b = random_noncommutative_mda(&mut rng);
            let (p, q) = b.pair().unwrap();
            assert!(is_matching_dialgebra(p, q).holds());
        }
        let c = random_multi_matching(&mut rng, 2, 3);
        let ps: Vec<_> = c.products().iter().map(|(_, p)| p).collect();
        assert!(is_multi_matching(&ps).holds());
    }
}

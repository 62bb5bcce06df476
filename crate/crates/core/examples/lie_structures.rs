//! Brackets derived from two products: Lie, pre-Lie, PostLie.

use dialgebra::lie::{
    commutator_bracket, equal_commutator_search, is_lie, is_post_lie, is_pre_lie, lemma_residual, mixed_bracket,
    BracketOrder, LemmaIdentity,
};
use dialgebra::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = samples::matrix_algebra(2);
    println!("commutator of 2×2 matrices is Lie: {}", is_lie(&commutator_bracket(&p)).holds());
    println!("matrix product is pre-Lie: {}", is_pre_lie(&p).holds());

    let alg = samples::epsilon_mda();
    let (p1, p2) = alg.pair()?;
    let mixed = mixed_bracket(p1, p2, BracketOrder::Twelve)?;
    println!("[x,y] = x *1 y - y *2 x is Lie: {}", is_lie(&mixed).holds());
    for which in [LemmaIdentity::Plie2, LemmaIdentity::Plie3] {
        let (vanish, _) = lemma_residual(p1, p2, which)?;
        println!("{which:?} residuals vanish: {vanish}");
    }

    // a noncommutative pair with equal commutators
    let base = samples::upper_triangular_times_dual_numbers();
    let second = equal_commutator_search(&base, 1).expect("the search space contains one");
    let star = base.sub(&second.opposite());
    let report = is_post_lie(&star, &commutator_bracket(&base))?;
    println!("equal-commutator pair on dimension {}:\n{report}", base.dim());
    Ok(())
}

//! From a matching dialgebra to matched pairs, their doubles, and the sum
//! construction on A ⊕ A.

use dialgebra::structure::{
    double_product, is_associative, is_matched_pair, is_matching_dialgebra, matched_pair_from_mda, sum_products, Variant,
};
use dialgebra::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = samples::epsilon_mda();
    for variant in [Variant::L, Variant::R] {
        let mp = matched_pair_from_mda(&alg, variant)?;
        let report = is_matched_pair(&mp)?;
        let double = double_product(&mp)?;
        println!(
            "variant {variant}: matched pair {}, double of dimension {} associative {}",
            report.holds(),
            double.dim(),
            is_associative(&double).holds()
        );
    }

    let (p1, p2) = alg.pair()?;
    let (s1, s2) = sum_products(p1, p2);
    println!(
        "A ⊕ A: MDA {} · associative {} ∘ associative {}",
        is_matching_dialgebra(p1, p2).holds(),
        is_associative(&s1).holds(),
        is_associative(&s2).holds()
    );
    Ok(())
}

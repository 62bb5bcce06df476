//! Koszul complexes: d² on a finite algebra, acyclicity on free ones.

use dialgebra::homology::{build_complex_finite, build_complex_finite_unchecked, build_complex_free, LabelRule};
use dialgebra::samples;
use dialgebra::structure::{BilinearProduct, FiniteAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = build_complex_finite(&samples::epsilon_mda(), 3)?;
    println!("ε-algebra, degrees 0..3: {:?}", c.dims());

    let broken = FiniteAlgebra::two_product(
        BilinearProduct::from_sparse(2, &[(0, 0, 1, 1)]),
        BilinearProduct::from_sparse(2, &[(0, 0, 0, 1)]),
    )?;
    let unchecked = build_complex_finite_unchecked(&broken, 2, LabelRule::Direct);
    match unchecked.verify_d_squared() {
        Some(w) => println!("not a matching dialgebra, {w}"),
        None => println!("d² = 0"),
    }

    for m in 1..=2 {
        for w in 1..=5 {
            let c = build_complex_free(m, w, 2, LabelRule::Direct)?;
            println!("alphabet {m} weight {w}: dims {:?} homology {:?}", c.dims(), c.homology_ranks()?);
        }
    }
    Ok(())
}

//! Semi-homomorphisms and the two products they induce.

use dialgebra::linalg::Matrix;
use dialgebra::structure::{is_matching_dialgebra, mda_from_semi_hom, semi_hom_kind, LinearOperator, Side};
use dialgebra::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a·a = a, a·b = b
    let p = samples::left_unit_algebra();
    let f = samples::project_b();
    let report = semi_hom_kind(&p, &f);
    println!("projection onto b: {}", report.kind());
    println!("  {}", report.left);
    println!("  {}", report.right);

    let alg = mda_from_semi_hom(&p, &f, Side::Left)?;
    let (p1, p2) = alg.pair()?;
    println!("x *1 y = xy, x *2 y = f(x)y:\n{}", is_matching_dialgebra(p1, p2));

    // multiplication by t on k[t]/t³ is two-sided
    let q = samples::truncated_polynomials(3);
    let t = LinearOperator::new(Matrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]))?;
    println!("multiplication by t on k[t]/t³: {}", semi_hom_kind(&q, &t).kind());
    Ok(())
}

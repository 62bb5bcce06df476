//! Words of the free matching dialgebra, the universal property, and the
//! nested tensor models.

use dialgebra::free::{evaluate_hom, flatten_phi, free_product, graded_dimension, split_psi, FreeMda, NestedWord, Orientation};
use dialgebra::linalg::{basis_vector, format_vector};
use dialgebra::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FreeMda::new(3, 2);
    let (x, y, z) = (f.letter(0)?, f.letter(1)?, f.letter(2)?);

    // both bracketings give the same basis word
    let left = free_product(2, &free_product(1, &x, &y)?, &z)?;
    let right = free_product(1, &x, &free_product(2, &y, &z)?)?;
    println!("(x1 *1 x2) *2 x3 = {left}");
    println!("x1 *1 (x2 *2 x3) = {right}");
    assert_eq!(left, right);

    for n in 1..=4 {
        println!("words of length {n} on 2 letters: {}", graded_dimension(2, n, 2));
    }

    let eps = samples::epsilon_mda();
    let assignment = vec![basis_vector(2, 0)];
    let e = FreeMda::new(1, 2).parse_word("x1 *1 x1")?;
    println!("x1 *1 x1 under x1 ↦ e1: {}", format_vector(&evaluate_hom(&assignment, &eps, &e)?));

    let nested = NestedWord::new(vec![vec![0], vec![1, 2]], Orientation::Outer1Inner2)?;
    let flat = flatten_phi(&nested);
    println!("φ([x1 | x2 x3]) = {flat}");
    assert_eq!(split_psi(&flat, Orientation::Outer1Inner2)?, nested);
    Ok(())
}

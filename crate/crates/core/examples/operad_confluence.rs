//! Critical monomials of the two presentations, and normal forms.

use dialgebra::operad::{check_confluence, normalize_to_comb, quotient_dimension, Presentation, TreeMonomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mda = Presentation::mda(2);
    let report = check_confluence(&mda);
    println!("{report}\n");

    let paper = Presentation::paper(2);
    let report = check_confluence(&paper);
    println!(
        "{}: {}/{} critical monomials confluent",
        paper.name(),
        report.confluent_count(),
        report.critical.len()
    );
    for n in 1..=5 {
        println!(
            "arity {n}: mda {} paper {}",
            quotient_dimension(&mda, n),
            quotient_dimension(&paper, n)
        );
    }

    let t = TreeMonomial::node(
        1,
        TreeMonomial::node(2, TreeMonomial::leaf(), TreeMonomial::generator(1)),
        TreeMonomial::leaf(),
    );
    println!("{t} normalizes to the comb {}", normalize_to_comb(&t, &mda)?);
    Ok(())
}

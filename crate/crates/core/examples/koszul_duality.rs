//! Annihilators of the relation spaces under both pairings.

use dialgebra::operad::{koszul_dual_relations, Pairing, Presentation};

fn main() {
    println!("{}", koszul_dual_relations(&Presentation::mda(2), Pairing::Signed));
    for k in 2..=4 {
        for pres in [Presentation::paper(k), Presentation::mda(k)] {
            for pairing in [Pairing::Signed, Pairing::Unsigned] {
                let d = koszul_dual_relations(&pres, pairing);
                println!("k = {k} {:>5} {pairing:?}: self-dual {}", pres.name(), d.self_dual);
            }
        }
    }
}

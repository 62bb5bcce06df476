use std::fmt;

use serde::Serialize;

use super::presentation::{weight_two_index, weight_two_monomial, Presentation};
use crate::linalg::{Matrix, Rational};

/// The pairing between the weight-2 space and its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pairing {
    /// `+1` on `mu_a ∘_1 mu_b`, `-1` on `mu_a ∘_2 mu_b`.
    Signed,
    /// `+1` on every basis monomial.
    Unsigned,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualReport {
    pub k: u8,
    pub pairing: Pairing,
    /// One row per relation over the `2k²` weight-2 monomials.
    pub relations: Matrix,
    /// A basis of the annihilator of the relations.
    pub annihilator: Vec<Vec<Rational>>,
    /// Whether the annihilator equals the relation span with starred generators.
    pub self_dual: bool,
}

impl DualReport {
    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn space_dim(&self) -> usize {
        self.relations.cols()
    }
}

/// Writes a weight-2 vector as a combination of starred monomials.
pub fn format_dual_relation(k: u8, v: &[Rational]) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = weight_two_monomial(k, i).to_string().replace("mu", "nu");
        parts.push(if c.is_one() {
            t
        } else if *c == -Rational::one() {
            format!("-{t}")
        } else {
            format!("{c} {t}")
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

pub fn relation_matrix(pres: &Presentation) -> Matrix {
    let k = pres.k();
    let n = 2 * (k as usize).pow(2);
    let rows = pres
        .relations()
        .iter()
        .map(|r| {
            let mut row = vec![Rational::zero(); n];
            row[weight_two_index(k, &r.lead).expect("arity 3")] += &Rational::one();
            row[weight_two_index(k, &r.reduct).expect("arity 3")] -= &Rational::one();
            row
        })
        .collect::<Vec<_>>();
    if rows.is_empty() {
        return Matrix::zeros(0, n);
    }
    Matrix::from_rows(rows).expect("equal lengths")
}

/// The annihilator `{v : <r, v> = 0 for every relation r}` and whether it
/// coincides with the relation span, compared by reduced row echelon form.
pub fn koszul_dual_relations(pres: &Presentation, pairing: Pairing) -> DualReport {
    let k = pres.k();
    let half = (k as usize).pow(2);
    let rel = relation_matrix(pres);
    let gram = Matrix::from_fn(2 * half, 2 * half, |i, j| {
        if i != j {
            Rational::zero()
        } else if pairing == Pairing::Signed && i >= half {
            -Rational::one()
        } else {
            Rational::one()
        }
    });
    let paired = rel.mul(&gram).expect("shapes");
    let annihilator = paired.kernel_basis();
    let self_dual = if annihilator.is_empty() {
        rel.rank() == 0
    } else {
        Matrix::from_rows(annihilator.clone()).expect("equal lengths").same_row_space(&rel)
    };
    DualReport {
        k,
        pairing,
        relations: rel,
        annihilator,
        self_dual,
    }
}

impl fmt::Display for DualReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "weight-2 space: {} monomials, relation rank {}, annihilator dimension {}",
            self.space_dim(),
            self.relation_rank(),
            self.annihilator.len()
        )?;
        for v in &self.annihilator {
            writeln!(f, "  {}", format_dual_relation(self.k, v))?;
        }
        write!(f, "self-dual ({:?} pairing): {}", self.pairing, self.self_dual)
    }
}

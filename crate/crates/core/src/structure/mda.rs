use std::fmt;

use serde::Serialize;

use super::{BilinearProduct, FiniteAlgebra, LinearOperator, StructureError};
use crate::check::{first_failure_uniform, AxiomCheck, Report};
use crate::linalg::sub_vectors;

/// `(x p y) q z - x p (y q z)` vanishes on all basis triples.
pub(crate) fn mixed_associativity(name: impl Into<String>, p: &BilinearProduct, q: &BilinearProduct) -> AxiomCheck {
    assert_eq!(p.dim(), q.dim(), "products must share a dimension");
    let w = first_failure_uniform(p.dim(), 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = q.apply_left_basis(p.basis_product(x, y), z);
        let rhs = p.apply_right_basis(x, q.basis_product(y, z));
        sub_vectors(&lhs, &rhs)
    });
    AxiomCheck::new(name, w)
}

pub fn is_associative(p: &BilinearProduct) -> AxiomCheck {
    mixed_associativity("associativity", p, p)
}

/// Checks both products for associativity and the two mixed identities
/// `(x *1 y) *2 z = x *1 (y *2 z)` and `(x *2 y) *1 z = x *2 (y *1 z)`.
pub fn is_matching_dialgebra(p1: &BilinearProduct, p2: &BilinearProduct) -> Report {
    Report::new(vec![
        mixed_associativity("associativity of *1", p1, p1),
        mixed_associativity("associativity of *2", p2, p2),
        mixed_associativity("(x *1 y) *2 z = x *1 (y *2 z)", p1, p2),
        mixed_associativity("(x *2 y) *1 z = x *2 (y *1 z)", p2, p1),
    ])
}

/// The k-product generalization: `(x *p y) *q z = x *p (y *q z)` for every
/// ordered pair of labels, including `p = q`.
pub fn is_multi_matching(products: &[&BilinearProduct]) -> Report {
    let mut checks = Vec::new();
    for (a, p) in products.iter().enumerate() {
        for (b, q) in products.iter().enumerate() {
            let (a, b) = (a + 1, b + 1);
            checks.push(mixed_associativity(format!("(x *{a} y) *{b} z = x *{a} (y *{b} z)"), p, q));
        }
    }
    Report::new(checks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SemiHomKind {
    Left,
    Right,
    Both,
    None,
}

impl SemiHomKind {
    pub fn admits(self, side: Side) -> bool {
        matches!(
            (self, side),
            (SemiHomKind::Both, _) | (SemiHomKind::Left, Side::Left) | (SemiHomKind::Right, Side::Right)
        )
    }
}

impl fmt::Display for SemiHomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SemiHomKind::Left => "left",
            SemiHomKind::Right => "right",
            SemiHomKind::Both => "both",
            SemiHomKind::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiHomReport {
    /// `f(xy) = x f(y)`
    pub left: AxiomCheck,
    /// `f(xy) = f(x) y`
    pub right: AxiomCheck,
}

impl SemiHomReport {
    pub fn kind(&self) -> SemiHomKind {
        match (self.left.holds(), self.right.holds()) {
            (true, true) => SemiHomKind::Both,
            (true, false) => SemiHomKind::Left,
            (false, true) => SemiHomKind::Right,
            (false, false) => SemiHomKind::None,
        }
    }

    pub fn check(&self, side: Side) -> &AxiomCheck {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

pub fn semi_hom_kind(p: &BilinearProduct, f: &LinearOperator) -> SemiHomReport {
    assert_eq!(p.dim(), f.dim(), "operator and algebra dimensions differ");
    let images: Vec<_> = (0..p.dim()).map(|j| f.image_of_basis(j)).collect();
    let left = first_failure_uniform(p.dim(), 2, |t| {
        let (x, y) = (t[0], t[1]);
        sub_vectors(&f.apply(p.basis_product(x, y)), &p.apply_right_basis(x, &images[y]))
    });
    let right = first_failure_uniform(p.dim(), 2, |t| {
        let (x, y) = (t[0], t[1]);
        sub_vectors(&f.apply(p.basis_product(x, y)), &p.apply_left_basis(&images[x], y))
    });
    SemiHomReport {
        left: AxiomCheck::new("f(xy) = x f(y)", left),
        right: AxiomCheck::new("f(xy) = f(x) y", right),
    }
}

fn require_associative(p: &BilinearProduct) -> Result<(), StructureError> {
    match is_associative(p).witness {
        None => Ok(()),
        Some(witness) => Err(StructureError::NotAssociative {
            product: "A".into(),
            witness,
        }),
    }
}

fn require_semi_hom(p: &BilinearProduct, f: &LinearOperator, sides: &[Side]) -> Result<(), StructureError> {
    let report = semi_hom_kind(p, f);
    for &side in sides {
        if let Some(witness) = report.check(side).witness.clone() {
            return Err(StructureError::NotSemiHomomorphism { side, witness });
        }
    }
    Ok(())
}

fn require_mda(alg: FiniteAlgebra) -> Result<FiniteAlgebra, StructureError> {
    let (p1, p2) = alg.pair()?;
    match is_matching_dialgebra(p1, p2).first_failure() {
        None => Ok(alg),
        Some(c) => Err(StructureError::NotMatchingDialgebra {
            axiom: c.name.clone(),
            witness: c.witness.clone().expect("failed check has a witness"),
        }),
    }
}

/// From an associative product and a one-sided semi-homomorphism `f`:
/// `x *1 y = x·y` and `x *2 y = f(x)·y` (left) or `x·f(y)` (right).
pub fn mda_from_semi_hom(p: &BilinearProduct, f: &LinearOperator, side: Side) -> Result<FiniteAlgebra, StructureError> {
    require_associative(p)?;
    require_semi_hom(p, f, &[side])?;
    let images: Vec<_> = (0..p.dim()).map(|j| f.image_of_basis(j)).collect();
    let second = BilinearProduct::from_basis_products(p.dim(), |i, j| match side {
        Side::Left => p.apply_left_basis(&images[i], j),
        Side::Right => p.apply_right_basis(i, &images[j]),
    });
    require_mda(FiniteAlgebra::two_product(p.clone(), second)?)
}

/// From two semi-homomorphisms: `x *1 y = f(x)·y` and `x *2 y = g(x)·y`.
pub fn mda_from_two_semi_homs(
    p: &BilinearProduct,
    f: &LinearOperator,
    g: &LinearOperator,
) -> Result<FiniteAlgebra, StructureError> {
    require_associative(p)?;
    require_semi_hom(p, f, &[Side::Left, Side::Right])?;
    require_semi_hom(p, g, &[Side::Left, Side::Right])?;
    let via = |op: &LinearOperator| {
        let images: Vec<_> = (0..p.dim()).map(|j| op.image_of_basis(j)).collect();
        BilinearProduct::from_basis_products(p.dim(), |i, j| p.apply_left_basis(&images[i], j))
    };
    require_mda(FiniteAlgebra::two_product(via(f), via(g))?)
}

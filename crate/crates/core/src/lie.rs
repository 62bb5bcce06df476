//! Brackets derived from a pair of products, and the Lie-type identities
//! they satisfy: Lie, compatible pairs, pre-Lie, assosymmetric, PostLie.

use thiserror::Error;

use crate::check::{first_failure_uniform, AxiomCheck, Report, Witness};
use crate::linalg::{sub_vectors, zero_vector, Rational, Vector};
use crate::structure::{is_associative, is_matching_dialgebra, BilinearProduct};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("precondition fails: {which} {witness}")]
    Precondition { which: String, witness: Witness },
}

/// A bilinear product read as a bracket; antisymmetry is checked, not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket(pub BilinearProduct);

impl Bracket {
    pub fn product(&self) -> &BilinearProduct {
        &self.0
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.0.apply(x, y)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

/// `[x, y] = p(x, y) - p(y, x)`.
pub fn commutator_bracket(p: &BilinearProduct) -> Bracket {
    Bracket(p.sub(&p.opposite()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BracketOrder {
    /// `p1(x, y) - p2(y, x)`.
    Twelve,
    /// `p2(x, y) - p1(y, x)`.
    TwentyOne,
}

pub fn mixed_bracket(p1: &BilinearProduct, p2: &BilinearProduct, order: BracketOrder) -> Result<Bracket, LieError> {
    same_dim(p1, p2)?;
    Ok(Bracket(match order {
        BracketOrder::Twelve => p1.sub(&p2.opposite()),
        BracketOrder::TwentyOne => p2.sub(&p1.opposite()),
    }))
}

fn same_dim(p1: &BilinearProduct, p2: &BilinearProduct) -> Result<(), LieError> {
    if p1.dim() != p2.dim() {
        return Err(LieError::Dimension(p1.dim(), p2.dim()));
    }
    Ok(())
}

fn e(n: usize, i: usize) -> Vector {
    crate::linalg::basis_vector(n, i)
}

fn check3(name: &str, dim: usize, mut f: impl FnMut(&Vector, &Vector, &Vector) -> Vector) -> AxiomCheck {
    let w = first_failure_uniform(dim, 3, |t| f(&e(dim, t[0]), &e(dim, t[1]), &e(dim, t[2])));
    AxiomCheck::new(name, w)
}

fn sum(vs: &[Vector], signs: &[i64]) -> Vector {
    let mut out = zero_vector(vs[0].len());
    for (v, &s) in vs.iter().zip(signs) {
        crate::linalg::add_scaled(&mut out, &Rational::from_integer(s), v);
    }
    out
}

/// `(x y) z - x (y z)`.
fn associator(p: &BilinearProduct, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    sub_vectors(&p.apply(&p.apply(x, y), z), &p.apply(x, &p.apply(y, z)))
}

fn antisymmetry(b: &BilinearProduct) -> AxiomCheck {
    let n = b.dim();
    let w = crate::check::first_failure_uniform(n, 2, |t| {
        crate::linalg::add_vectors(&b.apply(&e(n, t[0]), &e(n, t[1])), &b.apply(&e(n, t[1]), &e(n, t[0])))
    });
    AxiomCheck::new("antisymmetry", w)
}

fn jacobi(b: &BilinearProduct) -> AxiomCheck {
    check3("Jacobi identity", b.dim(), |x, y, z| {
        sum(
            &[
                b.apply(&b.apply(x, y), z),
                b.apply(&b.apply(z, x), y),
                b.apply(&b.apply(y, z), x),
            ],
            &[1, 1, 1],
        )
    })
}

/// Antisymmetry on basis pairs (which covers `[x, x] = 0` in characteristic
/// zero) and the Jacobi identity on basis triples.
pub fn is_lie(b: &Bracket) -> Report {
    Report::new(vec![antisymmetry(&b.0), jacobi(&b.0)])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompatibleKind {
    Associative,
    Lie,
}

fn precondition(report: Report, prefix: &str) -> Result<(), LieError> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(LieError::Precondition {
            which: format!("{prefix}: {}", c.name),
            witness: c.witness.clone().expect("failed check has a witness"),
        }),
    }
}

/// Whether every combination `a p1 + b p2` is again associative (resp. Lie).
/// Over an infinite field this is the polarized identity below.
pub fn are_compatible(p1: &BilinearProduct, p2: &BilinearProduct, kind: CompatibleKind) -> Result<AxiomCheck, LieError> {
    same_dim(p1, p2)?;
    let n = p1.dim();
    match kind {
        CompatibleKind::Associative => {
            precondition(Report::new(vec![is_associative(p1)]), "first product")?;
            precondition(Report::new(vec![is_associative(p2)]), "second product")?;
            Ok(check3("polarized associativity", n, |x, y, z| {
                sum(
                    &[
                        p2.apply(&p1.apply(x, y), z),
                        p1.apply(&p2.apply(x, y), z),
                        p1.apply(x, &p2.apply(y, z)),
                        p2.apply(x, &p1.apply(y, z)),
                    ],
                    &[1, 1, -1, -1],
                )
            }))
        }
        CompatibleKind::Lie => {
            precondition(is_lie(&Bracket(p1.clone())), "first bracket")?;
            precondition(is_lie(&Bracket(p2.clone())), "second bracket")?;
            Ok(check3("polarized Jacobi identity", n, |x, y, z| {
                let cyc = |a: &Vector, b: &Vector, c: &Vector| {
                    crate::linalg::add_vectors(&p1.apply(&p2.apply(a, b), c), &p2.apply(&p1.apply(a, b), c))
                };
                sum(&[cyc(x, y, z), cyc(z, x, y), cyc(y, z, x)], &[1, 1, 1])
            }))
        }
    }
}

fn left_symmetry(p: &BilinearProduct) -> AxiomCheck {
    check3("left-symmetric associator", p.dim(), |x, y, z| {
        sub_vectors(&associator(p, x, y, z), &associator(p, y, x, z))
    })
}

fn right_symmetry(p: &BilinearProduct) -> AxiomCheck {
    check3("right-symmetric associator", p.dim(), |x, y, z| {
        sub_vectors(&associator(p, x, y, z), &associator(p, x, z, y))
    })
}

pub fn is_pre_lie(p: &BilinearProduct) -> AxiomCheck {
    left_symmetry(p)
}

pub fn is_assosymmetric(p: &BilinearProduct) -> Report {
    Report::new(vec![left_symmetry(p), right_symmetry(p)])
}

/// Left PostLie: `b` is Lie, and on basis triples
/// `(x∘y)∘z - x∘(y∘z) - (y∘x)∘z + y∘(x∘z) - [x,y]∘z = 0` and
/// `z∘[x,y] - [z∘x,y] - [x,z∘y] = 0`.
pub fn is_post_lie(circ: &BilinearProduct, b: &Bracket) -> Result<Report, LieError> {
    same_dim(circ, &b.0)?;
    let n = circ.dim();
    let br = &b.0;
    let mut report = Report::new(vec![
        AxiomCheck::new("bracket antisymmetry", antisymmetry(br).witness),
        AxiomCheck::new("bracket Jacobi identity", jacobi(br).witness),
    ]);
    report.checks.push(check3("PostLie associator relation", n, |x, y, z| {
        sub_vectors(
            &sub_vectors(&associator(circ, x, y, z), &associator(circ, y, x, z)),
            &circ.apply(&br.apply(x, y), z),
        )
    }));
    report.checks.push(check3("PostLie derivation relation", n, |x, y, z| {
        sum(
            &[
                circ.apply(z, &br.apply(x, y)),
                br.apply(&circ.apply(z, x), y),
                br.apply(x, &circ.apply(z, y)),
            ],
            &[1, -1, -1],
        )
    }));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaIdentity {
    /// The pre-Lie defect of `[ , ]_{1,2}` equals `[x,y]_2 *1 z - z *2 [x,y]_1`.
    Plie2,
    /// The same with the two products exchanged.
    Plie3,
}

/// A basis triple with the residual found there.
pub type TripleResidual = (Vec<usize>, Vector);

/// Left side minus right side of the chosen identity on every basis triple,
/// in odometer order, together with whether all of them vanish.
pub fn lemma_residual(
    p1: &BilinearProduct,
    p2: &BilinearProduct,
    which: LemmaIdentity,
) -> Result<(bool, Vec<TripleResidual>), LieError> {
    same_dim(p1, p2)?;
    precondition(is_matching_dialgebra(p1, p2), "matching dialgebra")?;
    let (a, b) = match which {
        LemmaIdentity::Plie2 => (p1, p2),
        LemmaIdentity::Plie3 => (p2, p1),
    };
    let star = a.sub(&b.opposite());
    let (ca, cb) = (commutator_bracket(a).0, commutator_bracket(b).0);
    let n = a.dim();
    let mut out = Vec::with_capacity(n * n * n);
    let mut all_zero = true;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, l));
                let lhs = sub_vectors(&associator(&star, &x, &y, &z), &associator(&star, &y, &x, &z));
                let rhs = sub_vectors(&a.apply(&cb.apply(&x, &y), &z), &b.apply(&z, &ca.apply(&x, &y)));
                let r = sub_vectors(&lhs, &rhs);
                all_zero &= crate::linalg::is_zero_vector(&r);
                out.push((vec![i, j, l], r));
            }
        }
    }
    Ok((all_zero, out))
}

/// Whether the two commutator brackets agree as tensors.
pub fn equal_commutators(p1: &BilinearProduct, p2: &BilinearProduct) -> bool {
    commutator_bracket(p1) == commutator_bracket(p2)
}

/// Scans `c` with coordinates in `[-bound, bound]` (odometer order) for the
/// first second product `p2 = p1 + s`, `s(x, y) = c (p1(x, y))`, such that
/// `s` is nonzero and symmetric, `(p1, p2)` is a matching dialgebra and the
/// commutator brackets agree.
pub fn equal_commutator_search(p1: &BilinearProduct, bound: i64) -> Option<BilinearProduct> {
    let n = p1.dim();
    let values: Vec<Rational> = (-bound..=bound).map(Rational::from_integer).collect();
    let total = values.len().checked_pow(n as u32)?;
    (0..total).find_map(|mut code| {
        let c: Vec<Rational> = (0..n)
            .map(|_| {
                let v = values[code % values.len()].clone();
                code /= values.len();
                v
            })
            .collect();
        let s = BilinearProduct::from_basis_products(n, |i, j| p1.apply(&c, p1.basis_product(i, j)));
        if s == BilinearProduct::zero(n) || s != s.opposite() {
            return None;
        }
        let p2 = p1.add(&s);
        (is_matching_dialgebra(p1, &p2).holds() && equal_commutators(p1, &p2)).then_some(p2)
    })
}

use std::fmt;

use serde::Serialize;

use super::mda::{is_associative, is_matching_dialgebra};
use super::{BilinearProduct, FiniteAlgebra, StructureError};
use crate::check::{first_failure, AxiomCheck, Report};
use crate::linalg::{add_scaled, sub_vectors, zero_vector, Matrix, Rational, Vector};

/// Applies the family member indexed by `index` (a vector in the acting
/// algebra) to `v`: `(Σ index_i · family[i]) v`.
fn act(family: &[Matrix], index: &[Rational], v: &[Rational]) -> Vector {
    let mut out = zero_vector(v.len());
    for (i, c) in index.iter().enumerate() {
        if !c.is_zero() {
            add_scaled(&mut out, c, &family[i].mul_vec(v).expect("action shape"));
        }
    }
    out
}

fn act_basis(family: &[Matrix], i: usize, v: &[Rational]) -> Vector {
    family[i].mul_vec(v).expect("action shape")
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

fn check_family(family: &[Matrix], index_dim: usize, module_dim: usize, name: &str) -> Result<(), StructureError> {
    if family.len() != index_dim || family.iter().any(|m| m.rows() != module_dim || m.cols() != module_dim) {
        return Err(StructureError::Dimension(format!(
            "{name} must hold {index_dim} matrices of size {module_dim}x{module_dim}"
        )));
    }
    Ok(())
}

/// Checks that `l, r` make the `module_dim`-dimensional space a bimodule over
/// the algebra with product `p`: `l(xy) = l(x)l(y)`, `r(xy) = r(y)r(x)` and
/// `l(x)r(y) = r(y)l(x)`.
pub fn is_bimodule(p: &BilinearProduct, l: &[Matrix], r: &[Matrix]) -> Result<Report, StructureError> {
    let n = p.dim();
    let m = l.first().or(r.first()).map_or(0, Matrix::rows);
    check_family(l, n, m, "left action")?;
    check_family(r, n, m, "right action")?;
    let combine = |family: &[Matrix], coeffs: &[Rational]| -> Matrix {
        let mut out = Matrix::zeros(m, m);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&family[i].scale(c)).expect("same shape");
            }
        }
        out
    };
    let dims = [n, n];
    let left = first_failure(&dims, |t| {
        let lhs = combine(l, p.basis_product(t[0], t[1]));
        let rhs = l[t[0]].mul(&l[t[1]]).expect("square");
        sub_vectors(&flatten(&lhs), &flatten(&rhs))
    });
    let right = first_failure(&dims, |t| {
        let lhs = combine(r, p.basis_product(t[0], t[1]));
        let rhs = r[t[1]].mul(&r[t[0]]).expect("square");
        sub_vectors(&flatten(&lhs), &flatten(&rhs))
    });
    let commute = first_failure(&dims, |t| {
        let lhs = l[t[0]].mul(&r[t[1]]).expect("square");
        let rhs = r[t[1]].mul(&l[t[0]]).expect("square");
        sub_vectors(&flatten(&lhs), &flatten(&rhs))
    });
    Ok(Report::new(vec![
        AxiomCheck::new("l(xy) = l(x) l(y)", left),
        AxiomCheck::new("r(xy) = r(y) r(x)", right),
        AxiomCheck::new("l(x) r(y) = r(y) l(x)", commute),
    ]))
}

/// Two algebras `(A, ·)` and `(B, ∘)` with actions `l_A, r_A: A → gl(B)` and
/// `l_B, r_B: B → gl(A)`, stored as one matrix per basis vector of the acting
/// algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a: BilinearProduct,
    pub b: BilinearProduct,
    pub l_a: Vec<Matrix>,
    pub r_a: Vec<Matrix>,
    pub l_b: Vec<Matrix>,
    pub r_b: Vec<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// `(A_{*1}, A_{*2}, (L_{*1}, 0), (L_{*2}, 0))`
    L,
    /// `(A_{*1}, A_{*2}, (0, R_{*1}), (0, R_{*2}))`
    R,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::L => "L",
            Variant::R => "R",
        })
    }
}

impl MatchedPairData {
    /// Regular-representation data on one space with two products, built
    /// without checking anything about the products.
    pub fn from_products(p1: &BilinearProduct, p2: &BilinearProduct, variant: Variant) -> Self {
        let n = p1.dim();
        let zeros = vec![Matrix::zeros(n, n); n];
        let left = |p: &BilinearProduct| (0..n).map(|i| p.left_mult(i)).collect::<Vec<_>>();
        let right = |p: &BilinearProduct| (0..n).map(|i| p.right_mult(i)).collect::<Vec<_>>();
        match variant {
            Variant::L => MatchedPairData {
                a: p1.clone(),
                b: p2.clone(),
                l_a: left(p1),
                r_a: zeros.clone(),
                l_b: left(p2),
                r_b: zeros,
            },
            Variant::R => MatchedPairData {
                a: p1.clone(),
                b: p2.clone(),
                l_a: zeros.clone(),
                r_a: right(p1),
                l_b: zeros,
                r_b: right(p2),
            },
        }
    }

    pub fn validate(&self) -> Result<(), StructureError> {
        let (na, nb) = (self.a.dim(), self.b.dim());
        check_family(&self.l_a, na, nb, "l_A")?;
        check_family(&self.r_a, na, nb, "r_A")?;
        check_family(&self.l_b, nb, na, "l_B")?;
        check_family(&self.r_b, nb, na, "r_B")
    }

    /// The hypotheses: both algebras associative and both bimodule structures.
    pub fn hypotheses(&self) -> Result<Report, StructureError> {
        self.validate()?;
        let mut checks = vec![
            AxiomCheck::new("A associative", is_associative(&self.a).witness),
            AxiomCheck::new("B associative", is_associative(&self.b).witness),
        ];
        for c in is_bimodule(&self.a, &self.l_a, &self.r_a)?.checks {
            checks.push(AxiomCheck::new(format!("(B, l_A, r_A) bimodule of A: {}", c.name), c.witness));
        }
        for c in is_bimodule(&self.b, &self.l_b, &self.r_b)?.checks {
            checks.push(AxiomCheck::new(format!("(A, l_B, r_B) bimodule of B: {}", c.name), c.witness));
        }
        Ok(Report::new(checks))
    }

    /// The six compatibility equations, without the hypotheses.
    pub fn equations(&self) -> Report {
        let (na, nb) = (self.a.dim(), self.b.dim());
        let (a, b) = (&self.a, &self.b);
        let (l_a, r_a, l_b, r_b) = (&self.l_a, &self.r_a, &self.l_b, &self.r_b);
        let e = |n: usize, i: usize| crate::linalg::basis_vector(n, i);

        // slots (x, a, b) with x in A and a, b in B
        let eq1 = first_failure(&[na, nb, nb], |t| {
            let (x, ea, eb) = (t[0], e(nb, t[1]), e(nb, t[2]));
            let lhs = act_basis(l_a, x, b.basis_product(t[1], t[2]));
            let r1 = act(l_a, &act_basis(r_b, t[1], &e(na, x)), &eb);
            let r2 = b.apply(&act_basis(l_a, x, &ea), &eb);
            sub_vectors(&sub_vectors(&lhs, &r1), &r2)
        });
        let eq2 = first_failure(&[na, nb, nb], |t| {
            let (x, ea, eb) = (t[0], e(nb, t[1]), e(nb, t[2]));
            let lhs = act_basis(r_a, x, b.basis_product(t[1], t[2]));
            let r1 = act(r_a, &act_basis(l_b, t[2], &e(na, x)), &ea);
            let r2 = b.apply(&ea, &act_basis(r_a, x, &eb));
            sub_vectors(&sub_vectors(&lhs, &r1), &r2)
        });
        // slots (a, x, y) with a in B and x, y in A
        let eq3 = first_failure(&[nb, na, na], |t| {
            let (ea, ex, ey) = (t[0], e(na, t[1]), e(na, t[2]));
            let lhs = act_basis(l_b, ea, a.basis_product(t[1], t[2]));
            let r1 = act(l_b, &act_basis(r_a, t[1], &e(nb, ea)), &ey);
            let r2 = a.apply(&act_basis(l_b, ea, &ex), &ey);
            sub_vectors(&sub_vectors(&lhs, &r1), &r2)
        });
        let eq4 = first_failure(&[nb, na, na], |t| {
            let (ea, ex, ey) = (t[0], e(na, t[1]), e(na, t[2]));
            let lhs = act_basis(r_b, ea, a.basis_product(t[1], t[2]));
            let r1 = act(r_b, &act_basis(l_a, t[2], &e(nb, ea)), &ex);
            let r2 = a.apply(&ex, &act_basis(r_b, ea, &ey));
            sub_vectors(&sub_vectors(&lhs, &r1), &r2)
        });
        let eq5 = first_failure(&[na, nb, nb], |t| {
            let (x, ea, eb) = (t[0], e(nb, t[1]), e(nb, t[2]));
            let ex = e(na, x);
            let mut v = act(l_a, &act_basis(l_b, t[1], &ex), &eb);
            v = crate::linalg::add_vectors(&v, &b.apply(&act_basis(r_a, x, &ea), &eb));
            v = sub_vectors(&v, &act(r_a, &act_basis(r_b, t[2], &ex), &ea));
            sub_vectors(&v, &b.apply(&ea, &act_basis(l_a, x, &eb)))
        });
        let eq6 = first_failure(&[nb, na, na], |t| {
            let (ea, ex, ey) = (t[0], e(na, t[1]), e(na, t[2]));
            let eb = e(nb, ea);
            let mut v = act(l_b, &act_basis(l_a, t[1], &eb), &ey);
            v = crate::linalg::add_vectors(&v, &a.apply(&act_basis(r_b, ea, &ex), &ey));
            v = sub_vectors(&v, &act(r_b, &act_basis(r_a, t[2], &eb), &ex));
            sub_vectors(&v, &a.apply(&ex, &act_basis(l_b, ea, &ey)))
        });
        Report::new(vec![
            AxiomCheck::new("l_A(x)(a∘b) = l_A(r_B(a)x)b + (l_A(x)a)∘b", eq1),
            AxiomCheck::new("r_A(x)(a∘b) = r_A(l_B(b)x)a + a∘(r_A(x)b)", eq2),
            AxiomCheck::new("l_B(a)(x·y) = l_B(r_A(x)a)y + (l_B(a)x)·y", eq3),
            AxiomCheck::new("r_B(a)(x·y) = r_B(l_A(y)a)x + x·(r_B(a)y)", eq4),
            AxiomCheck::new("l_A(l_B(a)x)b + (r_A(x)a)∘b - r_A(r_B(b)x)a - a∘(l_A(x)b) = 0", eq5),
            AxiomCheck::new("l_B(l_A(x)a)y + (r_B(a)x)·y - r_B(r_A(y)a)x - x·(l_B(a)y) = 0", eq6),
        ])
    }
}

/// Checks the hypotheses first (an error names the one that fails), then
/// reports the status of each of the six compatibility equations.
pub fn is_matched_pair(mp: &MatchedPairData) -> Result<Report, StructureError> {
    let hyp = mp.hypotheses()?;
    if let Some(c) = hyp.first_failure() {
        return Err(StructureError::Hypothesis {
            which: c.name.clone(),
            witness: c.witness.clone().expect("failed check has a witness"),
        });
    }
    Ok(mp.equations())
}

/// The regular-representation matched pair of a matching dialgebra.
pub fn matched_pair_from_mda(alg: &FiniteAlgebra, variant: Variant) -> Result<MatchedPairData, StructureError> {
    let (p1, p2) = alg.pair()?;
    if let Some(c) = is_matching_dialgebra(p1, p2).first_failure() {
        return Err(StructureError::NotMatchingDialgebra {
            axiom: c.name.clone(),
            witness: c.witness.clone().expect("failed check has a witness"),
        });
    }
    Ok(MatchedPairData::from_products(p1, p2, variant))
}

/// The product on `A ⊕ B` (coordinates of `A` first):
/// `(x,a)*(y,b) = (x·y + l_B(a)y + r_B(b)x, a∘b + l_A(x)b + r_A(y)a)`.
pub fn double_product_unchecked(mp: &MatchedPairData) -> BilinearProduct {
    let (na, nb) = (mp.a.dim(), mp.b.dim());
    let n = na + nb;
    BilinearProduct::from_basis_products(n, |i, j| {
        let u = crate::linalg::basis_vector(n, i);
        let v = crate::linalg::basis_vector(n, j);
        let (x, a) = u.split_at(na);
        let (y, b) = v.split_at(na);
        let mut first = mp.a.apply(x, y);
        add_scaled(&mut first, &Rational::one(), &act(&mp.l_b, a, y));
        add_scaled(&mut first, &Rational::one(), &act(&mp.r_b, b, x));
        let mut second = mp.b.apply(a, b);
        add_scaled(&mut second, &Rational::one(), &act(&mp.l_a, x, b));
        add_scaled(&mut second, &Rational::one(), &act(&mp.r_a, y, a));
        first.extend(second);
        first
    })
}

/// [`double_product_unchecked`] after verifying the matched-pair conditions.
pub fn double_product(mp: &MatchedPairData) -> Result<BilinearProduct, StructureError> {
    let report = is_matched_pair(mp)?;
    if let Some(c) = report.first_failure() {
        return Err(StructureError::NotMatchedPair {
            equation: c.name.clone(),
            witness: c.witness.clone().expect("failed check has a witness"),
        });
    }
    Ok(double_product_unchecked(mp))
}

/// The two products on `A ⊕ A` (first summand first):
/// `(a,b)·(c,d) = (a*1c + a*2d, b*2d + b*1c)` and
/// `(a,b)∘(c,d) = (a*1c + b*2c, b*2d + a*1d)`.
pub fn sum_products(p1: &BilinearProduct, p2: &BilinearProduct) -> (BilinearProduct, BilinearProduct) {
    let n = p1.dim();
    let build = |second: bool| {
        BilinearProduct::from_basis_products(2 * n, |i, j| {
            let u = crate::linalg::basis_vector(2 * n, i);
            let v = crate::linalg::basis_vector(2 * n, j);
            let (a, b) = u.split_at(n);
            let (c, d) = v.split_at(n);
            let (mut left, right) = if !second {
                (
                    crate::linalg::add_vectors(&p1.apply(a, c), &p2.apply(a, d)),
                    crate::linalg::add_vectors(&p2.apply(b, d), &p1.apply(b, c)),
                )
            } else {
                (
                    crate::linalg::add_vectors(&p1.apply(a, c), &p2.apply(b, c)),
                    crate::linalg::add_vectors(&p2.apply(b, d), &p1.apply(a, d)),
                )
            };
            left.extend(right);
            left
        })
    };
    (build(false), build(true))
}

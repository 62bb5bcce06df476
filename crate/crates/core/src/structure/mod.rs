//! Finite-dimensional algebras given by structure constants, and checkers
//! and constructions for matching dialgebras, semi-homomorphisms, bimodules
//! and matched pairs.
//!
//! Every identity is checked on basis tuples only. The products are bilinear,
//! so this is equivalent to checking it on all elements.

mod format;
mod matched;
mod mda;

pub use format::{AlgebraFile, ParseError, PartnerAlgebra};
pub use matched::{
    double_product, double_product_unchecked, is_bimodule, is_matched_pair, matched_pair_from_mda, sum_products,
    MatchedPairData, Variant,
};
pub use mda::{
    is_associative, is_matching_dialgebra, is_multi_matching, mda_from_semi_hom, mda_from_two_semi_homs,
    semi_hom_kind, SemiHomKind, SemiHomReport, Side,
};

use thiserror::Error;

use crate::check::Witness;
use crate::linalg::{add_scaled, zero_vector, LinalgError, Matrix, Rational, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("product {product} is not associative {witness}")]
    NotAssociative { product: String, witness: Witness },
    #[error("not a matching dialgebra: axiom {axiom} fails {witness}")]
    NotMatchingDialgebra { axiom: String, witness: Witness },
    #[error("operator is not a {side} semi-homomorphism: {witness}")]
    NotSemiHomomorphism { side: Side, witness: Witness },
    #[error("matched-pair hypothesis fails: {which} {witness}")]
    Hypothesis { which: String, witness: Witness },
    #[error("not a matched pair: {equation} fails {witness}")]
    NotMatchedPair { equation: String, witness: Witness },
    #[error("algebra has {found} products, {needed} needed")]
    MissingProduct { needed: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A bilinear product on a `dim`-dimensional space: `c[i][j][l]` is the
/// coefficient of `e_l` in `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearProduct {
    dim: usize,
    c: Vec<Rational>,
}

impl BilinearProduct {
    pub fn zero(dim: usize) -> Self {
        BilinearProduct {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Takes `dim³` constants in `[i][j][l]` order.
    pub fn from_constants(dim: usize, c: Vec<Rational>) -> Result<Self, StructureError> {
        if c.len() != dim * dim * dim {
            return Err(StructureError::Dimension(format!(
                "expected {} structure constants for dim {dim}, found {}",
                dim * dim * dim,
                c.len()
            )));
        }
        Ok(BilinearProduct { dim, c })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    c.push(f(i, j, l));
                }
            }
        }
        BilinearProduct { dim, c }
    }

    /// Builds a product from the value of `e_i · e_j` for every pair.
    pub fn from_basis_products(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "basis product has wrong length");
                c.extend(v);
            }
        }
        BilinearProduct { dim, c }
    }

    /// Integer constants, listed as `(i, j, l, value)`; everything else is zero.
    pub fn from_sparse(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut p = Self::zero(dim);
        for &(i, j, l, v) in entries {
            p.set(i, j, l, Rational::from_integer(v));
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Rational] {
        &self.c
    }

    pub fn coeff(&self, i: usize, j: usize, l: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + l]
    }

    pub fn set(&mut self, i: usize, j: usize, l: usize, value: Rational) {
        let d = self.dim;
        self.c[(i * d + j) * d + l] = value;
    }

    /// `e_i · e_j` in coordinates.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.c[start..start + self.dim]
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                add_scaled(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    /// `x · e_j`
    pub fn apply_left_basis(&self, x: &[Rational], j: usize) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            add_scaled(&mut out, xi, self.basis_product(i, j));
        }
        out
    }

    /// `e_i · y`
    pub fn apply_right_basis(&self, i: usize, y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (j, yj) in y.iter().enumerate() {
            add_scaled(&mut out, yj, self.basis_product(i, j));
        }
        out
    }

    /// Matrix of left multiplication by `e_i`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |l, j| self.coeff(i, j, l).clone())
    }

    /// Matrix of right multiplication by `e_j`.
    pub fn right_mult(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |l, i| self.coeff(i, j, l).clone())
    }

    pub fn opposite(&self) -> Self {
        Self::from_fn(self.dim, |i, j, l| self.coeff(j, i, l).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        BilinearProduct {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        BilinearProduct {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        BilinearProduct {
            dim: self.dim,
            c: self.c.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// The same product written in the basis given by the columns of `change`:
    /// `x *' y = P⁻¹ (P x · P y)`.
    pub fn transport(&self, change: &Matrix) -> Result<Self, StructureError> {
        let inv = change
            .inverse()
            .ok_or_else(|| StructureError::Dimension("basis change is singular".into()))?;
        if change.rows() != self.dim {
            return Err(StructureError::Dimension("basis change has wrong size".into()));
        }
        Ok(Self::from_basis_products(self.dim, |i, j| {
            let pi = change.column(i);
            let pj = change.column(j);
            inv.mul_vec(&self.apply(&pi, &pj)).expect("square")
        }))
    }
}

/// A linear self-map, stored as the matrix whose column `j` is `f(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOperator(pub Matrix);

impl LinearOperator {
    pub fn new(m: Matrix) -> Result<Self, StructureError> {
        if m.rows() != m.cols() {
            return Err(StructureError::Dimension(format!(
                "operator must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(LinearOperator(m))
    }

    pub fn identity(dim: usize) -> Self {
        LinearOperator(Matrix::identity(dim))
    }

    pub fn zero(dim: usize) -> Self {
        LinearOperator(Matrix::zeros(dim, dim))
    }

    /// Left multiplication `x ↦ c · x` by a fixed element.
    pub fn left_multiplication(p: &BilinearProduct, c: &[Rational]) -> Self {
        LinearOperator(Matrix::from_fn(p.dim(), p.dim(), |l, j| p.apply_left_basis(c, j)[l].clone()))
    }

    /// Right multiplication `x ↦ x · c` by a fixed element.
    pub fn right_multiplication(p: &BilinearProduct, c: &[Rational]) -> Self {
        LinearOperator(Matrix::from_fn(p.dim(), p.dim(), |l, i| p.apply_right_basis(i, c)[l].clone()))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.0.mul_vec(v).expect("operator applied to vector of wrong length")
    }

    /// `f(e_j)`
    pub fn image_of_basis(&self, j: usize) -> Vector {
        self.0.column(j)
    }
}

/// A vector space with one or more named bilinear products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    dim: usize,
    products: Vec<(String, BilinearProduct)>,
}

impl FiniteAlgebra {
    pub fn new(dim: usize) -> Self {
        FiniteAlgebra {
            dim,
            products: Vec::new(),
        }
    }

    pub fn with_product(mut self, name: impl Into<String>, p: BilinearProduct) -> Result<Self, StructureError> {
        if p.dim() != self.dim {
            return Err(StructureError::Dimension(format!(
                "product of dim {} added to algebra of dim {}",
                p.dim(),
                self.dim
            )));
        }
        self.products.push((name.into(), p));
        Ok(self)
    }

    /// The algebra with products named `o1` and `o2`.
    pub fn two_product(p1: BilinearProduct, p2: BilinearProduct) -> Result<Self, StructureError> {
        FiniteAlgebra::new(p1.dim()).with_product("o1", p1)?.with_product("o2", p2)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn products(&self) -> &[(String, BilinearProduct)] {
        &self.products
    }

    pub fn product(&self, i: usize) -> Option<&BilinearProduct> {
        self.products.get(i).map(|(_, p)| p)
    }

    pub fn product_named(&self, name: &str) -> Option<&BilinearProduct> {
        self.products.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    /// The first two products, read as `∘₁` and `∘₂`.
    pub fn pair(&self) -> Result<(&BilinearProduct, &BilinearProduct), StructureError> {
        match self.products.as_slice() {
            [(_, a), (_, b), ..] => Ok((a, b)),
            _ => Err(StructureError::MissingProduct {
                needed: 2,
                found: self.products.len(),
            }),
        }
    }
}

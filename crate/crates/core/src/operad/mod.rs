//! The nonsymmetric operad with `k` binary generators subject to quadratic
//! relations: tree monomials, presentations, rewriting to right-comb normal
//! forms, confluence of critical monomials, dimensions and Koszul duals.
//!
//! `f ∘_i g` grafts `g` onto input `i` of `f`, so `mu_i ∘_1 mu_j` is the
//! tree `mu_i(mu_j(a,b),c)`.

mod dual;
mod presentation;
mod rewrite;
mod tree;

pub use dual::{format_dual_relation, koszul_dual_relations, relation_matrix, DualReport, Pairing};
pub use presentation::{graft2, parse_term, weight_two_index, weight_two_monomial, Presentation, Relation};
pub use rewrite::{
    apply, check_confluence, critical_monomials, first_redex, normalize, normalize_to_comb, operad_dimension,
    quotient_dimension, reachable_normal_forms, redexes, reduce_with_trace, Branch, ConfluenceReport, CriticalReport,
    Redex,
};
pub use tree::{format_position, leaf_names, tree_order, CombSequence, Position, TreeMonomial};

use thiserror::Error;

use crate::free::{free_product, FreeElement, FreeError, FreeMda};
use crate::linalg::Vector;
use crate::structure::FiniteAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("label {label} outside 1..={k}")]
    Label { label: u8, k: u8 },
    #[error("slot {slot} outside 1..={arity}")]
    Slot { slot: usize, arity: usize },
    #[error("tree of arity {expected} applied to {found} arguments")]
    Arity { expected: usize, found: usize },
    #[error("presentation {0} has no confluence certificate; run check_confluence")]
    NotCertified(String),
    #[error("rewriting from {0} did not stop")]
    NotTerminating(String),
    #[error("normal form {0} is not a right comb")]
    NotComb(String),
    #[error(transparent)]
    Free(#[from] FreeError),
}

/// Something with numbered binary products in which trees can be evaluated.
pub trait Products {
    type Elem: Clone;
    fn product(&self, label: u8, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, OperadError>;
}

impl Products for FreeMda {
    type Elem = FreeElement;

    fn product(&self, label: u8, a: &FreeElement, b: &FreeElement) -> Result<FreeElement, OperadError> {
        Ok(free_product(label, a, b)?)
    }
}

impl Products for FiniteAlgebra {
    type Elem = Vector;

    fn product(&self, label: u8, a: &Vector, b: &Vector) -> Result<Vector, OperadError> {
        let p = self.product((label as usize).wrapping_sub(1)).ok_or(OperadError::Label {
            label,
            k: self.products().len() as u8,
        })?;
        Ok(p.apply(a, b))
    }
}

/// Evaluates `t` on `args`, applying product `i` at every vertex labelled `i`.
pub fn evaluate_tree<P: Products>(t: &TreeMonomial, args: &[P::Elem], algebra: &P) -> Result<P::Elem, OperadError> {
    if args.len() != t.arity() {
        return Err(OperadError::Arity {
            expected: t.arity(),
            found: args.len(),
        });
    }
    fn go<P: Products>(t: &TreeMonomial, args: &[P::Elem], alg: &P) -> Result<P::Elem, OperadError> {
        match t {
            TreeMonomial::Leaf => Ok(args[0].clone()),
            TreeMonomial::Node(i, l, r) => {
                let (la, ra) = args.split_at(l.arity());
                alg.product(*i, &go(l, la, alg)?, &go(r, ra, alg)?)
            }
        }
    }
    go(t, args, algebra)
}

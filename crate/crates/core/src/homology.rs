//! Koszul complexes of algebras with `k` products.
//!
//! Degree `n - 1` is spanned by `λ ⊗ (a_1, ..., a_n)` with `λ` a comb
//! sequence of arity `n`. The differential is
//!
//! ```text
//! d(λ ⊗ (a_1..a_n)) = Σ_i (-1)^(i+1) (λ without λ_i) ⊗ (.., a_i *λ_i a_{i+1}, ..)
//! ```
//!
//! and `d² = 0` is exactly the family of matching identities. Complexes of
//! free algebras split by weight (total letter count), each piece finite.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::check::Witness;
use crate::free::{words, BasisWord};
use crate::linalg::{Rational, SparseMatrix};
use crate::operad::CombSequence;
use crate::structure::{is_multi_matching, FiniteAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("not a matching dialgebra: {axiom} fails {witness}")]
    NotMda { axiom: String, witness: Witness },
    #[error("d² ≠ 0: {0}")]
    DSquared(DSquaredWitness),
    #[error("invalid request: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KoszulBasisElement<T> {
    pub lambda: CombSequence,
    pub args: Vec<T>,
}

impl<T: fmt::Display> fmt::Display for KoszulBasisElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ ({})", self.lambda, self.args.iter().join(", "))
    }
}

/// A finite-algebra basis index, printed as `e1, e2, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex(pub usize);

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

/// Which product a deleted comb label contracts with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LabelRule {
    /// Label `i` contracts with product `i`.
    Direct,
    /// Label `i` contracts with product `k + 1 - i`.
    Swapped,
}

impl LabelRule {
    fn product_for(self, label: u8, k: u8) -> u8 {
        match self {
            LabelRule::Direct => label,
            LabelRule::Swapped => k + 1 - label,
        }
    }
}

/// `d(el)` as a list of (basis element, coefficient), unsimplified.
pub fn differential<T: Clone>(
    el: &KoszulBasisElement<T>,
    k: u8,
    rule: LabelRule,
    product: &impl Fn(u8, &T, &T) -> Vec<(T, Rational)>,
) -> Vec<(KoszulBasisElement<T>, Rational)> {
    let mut out = Vec::new();
    for i in 0..el.lambda.labels().len() {
        let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
        let label = rule.product_for(el.lambda.labels()[i], k);
        let xi = el.lambda.delete(i);
        for (v, c) in product(label, &el.args[i], &el.args[i + 1]) {
            let mut args = el.args[..i].to_vec();
            args.push(v);
            args.extend_from_slice(&el.args[i + 2..]);
            out.push((
                KoszulBasisElement {
                    lambda: xi.clone(),
                    args,
                },
                &sign * &c,
            ));
        }
    }
    out
}

/// Graded bases and differentials; `differentials[i]` maps degree `i + 1`
/// to degree `i`.
#[derive(Clone, Debug)]
pub struct ChainComplexData<T> {
    pub degrees: Vec<Vec<KoszulBasisElement<T>>>,
    pub differentials: Vec<SparseMatrix>,
    /// Whether the complex vanishes above the top stored degree. A
    /// truncated complex has no homology at its top degree.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSquaredWitness {
    /// Degree of the source basis element.
    pub degree: usize,
    pub source: String,
    pub source_index: usize,
    /// Coordinates of `d²(source)` in degree `degree - 2`.
    pub image: Vec<(usize, Rational)>,
}

impl fmt::Display for DSquaredWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.image.iter().map(|(i, c)| format!("{c} at basis {}", i + 1)).join(", ");
        write!(f, "d² of {} in degree {} is {}", self.source, self.degree, terms)
    }
}

impl<T: Clone + Eq + Hash + fmt::Display + Send + Sync> ChainComplexData<T> {
    fn build(
        degrees: Vec<Vec<KoszulBasisElement<T>>>,
        k: u8,
        rule: LabelRule,
        complete: bool,
        product: impl Fn(u8, &T, &T) -> Vec<(T, Rational)> + Sync,
    ) -> Self {
        let differentials = (1..degrees.len())
            .map(|deg| {
                let index: HashMap<&KoszulBasisElement<T>, usize> =
                    degrees[deg - 1].iter().enumerate().map(|(i, e)| (e, i)).collect();
                let columns = degrees[deg]
                    .par_iter()
                    .map(|el| {
                        differential(el, k, rule, &product)
                            .into_iter()
                            .map(|(t, c)| (*index.get(&t).expect("differential stays in the complex"), c))
                            .collect()
                    })
                    .collect();
                SparseMatrix::from_columns(degrees[deg - 1].len(), columns).expect("indices in range")
            })
            .collect();
        ChainComplexData {
            degrees,
            differentials,
            complete,
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// The first basis element whose image under `d²` is nonzero.
    pub fn verify_d_squared(&self) -> Option<DSquaredWitness> {
        (1..self.differentials.len()).find_map(|i| {
            let dd = self.differentials[i - 1]
                .compose(&self.differentials[i])
                .expect("adjacent shapes agree");
            dd.first_nonzero().map(|(_, col, _)| DSquaredWitness {
                degree: i + 1,
                source: self.degrees[i + 1][col].to_string(),
                source_index: col,
                image: dd.column(col).to_vec(),
            })
        })
    }

    /// Rank of `d` out of each degree (0 for degree 0 and above the top).
    pub fn differential_ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0];
        ranks.extend(self.differentials.par_iter().map(SparseMatrix::rank).collect::<Vec<_>>());
        ranks
    }

    /// `dim ker d_n - rank d_(n+1)` for every degree whose homology is
    /// determined by the stored data.
    pub fn homology_ranks(&self) -> Result<Vec<usize>, HomologyError> {
        if let Some(w) = self.verify_d_squared() {
            return Err(HomologyError::DSquared(w));
        }
        let dims = self.dims();
        let ranks = self.differential_ranks();
        let top = if self.complete { dims.len() } else { dims.len().saturating_sub(1) };
        Ok((0..top)
            .map(|n| {
                let incoming = ranks.get(n + 1).copied().unwrap_or(0);
                dims[n] - ranks[n] - incoming
            })
            .collect())
    }
}

fn finite_product(alg: &FiniteAlgebra) -> impl Fn(u8, &BasisIndex, &BasisIndex) -> Vec<(BasisIndex, Rational)> + Sync + '_ {
    move |label, a, b| {
        let p = alg.product(label as usize - 1).expect("label within the product count");
        p.basis_product(a.0, b.0)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (BasisIndex(l), c.clone()))
            .collect()
    }
}

/// Degrees `0..=max_degree` of the complex of `alg`, skipping the check that
/// `alg` satisfies the matching identities.
pub fn build_complex_finite_unchecked(alg: &FiniteAlgebra, max_degree: usize, rule: LabelRule) -> ChainComplexData<BasisIndex> {
    let k = alg.products().len() as u8;
    let dim = alg.dim();
    let degrees = (0..=max_degree)
        .map(|deg| {
            let n = deg + 1;
            CombSequence::enumerate(n, k)
                .into_iter()
                .flat_map(|lambda| {
                    (0..n)
                        .map(|_| (0..dim).map(BasisIndex))
                        .multi_cartesian_product()
                        .map(move |args| KoszulBasisElement {
                            lambda: lambda.clone(),
                            args,
                        })
                })
                .collect()
        })
        .collect();
    ChainComplexData::build(degrees, k, rule, false, finite_product(alg))
}

/// As [`build_complex_finite_unchecked`], after checking the matching
/// identities and then `d² = 0`.
pub fn build_complex_finite(alg: &FiniteAlgebra, max_degree: usize) -> Result<ChainComplexData<BasisIndex>, HomologyError> {
    if max_degree == 0 {
        return Err(HomologyError::Invalid("max degree must be at least 1".into()));
    }
    let products: Vec<_> = alg.products().iter().map(|(_, p)| p).collect();
    if products.is_empty() {
        return Err(HomologyError::Invalid("algebra has no products".into()));
    }
    if let Some(fail) = is_multi_matching(&products).first_failure() {
        return Err(HomologyError::NotMda {
            axiom: fail.name.clone(),
            witness: fail.witness.clone().expect("failed check has a witness"),
        });
    }
    let c = build_complex_finite_unchecked(alg, max_degree, LabelRule::Direct);
    match c.verify_d_squared() {
        Some(w) => Err(HomologyError::DSquared(w)),
        None => Ok(c),
    }
}

/// The weight-`w` piece of the complex of the free algebra on `m` letters
/// with `k` products. Degree `n - 1` holds `λ ⊗ (u_1..u_n)` with words of
/// total length `w`; the complex is zero above degree `w - 1`.
pub fn build_complex_free(m: u32, w: usize, k: u8, rule: LabelRule) -> Result<ChainComplexData<BasisWord>, HomologyError> {
    if m == 0 || w == 0 || k == 0 {
        return Err(HomologyError::Invalid("alphabet, weight and k must be positive".into()));
    }
    let degrees = (1..=w)
        .map(|n| {
            let mut basis = Vec::new();
            for lambda in CombSequence::enumerate(n, k) {
                for lengths in compositions(w, n) {
                    let factors: Vec<Vec<BasisWord>> = lengths.iter().map(|&l| words(m, l, k).collect()).collect();
                    for args in factors.into_iter().multi_cartesian_product() {
                        basis.push(KoszulBasisElement {
                            lambda: lambda.clone(),
                            args,
                        });
                    }
                }
            }
            basis
        })
        .collect();
    let product = |label: u8, a: &BasisWord, b: &BasisWord| vec![(a.splice(label, b), Rational::one())];
    Ok(ChainComplexData::build(degrees, k, rule, true, product))
}

/// Ordered ways to write `total` as `parts` positive integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (1..=total.saturating_sub(parts - 1))
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// The matching identity whose failure a degree-2 element `(l1, l2) ⊗ (a, b, c)`
/// detects, named as in [`is_multi_matching`]: `d²` of it is `(a *l1 b) *l2 c - a *l1 (b *l2 c)`.
pub fn axiom_for_labels(l1: u8, l2: u8) -> String {
    format!("(x *{l1} y) *{l2} z = x *{l1} (y *{l2} z)")
}

/// One line of a homology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRecord {
    pub weight: Option<usize>,
    pub degree: usize,
    pub dim: usize,
    /// Rank of the differential out of this degree.
    pub rank: usize,
    pub homology: Option<usize>,
}

pub fn homology_table<T: Clone + Eq + Hash + fmt::Display + Send + Sync>(
    c: &ChainComplexData<T>,
    weight: Option<usize>,
) -> Result<Vec<HomologyRecord>, HomologyError> {
    let h = c.homology_ranks()?;
    let ranks = c.differential_ranks();
    Ok(c.dims()
        .into_iter()
        .enumerate()
        .map(|(degree, dim)| HomologyRecord {
            weight,
            degree,
            dim,
            rank: ranks[degree],
            homology: h.get(degree).copied(),
        })
        .collect())
}

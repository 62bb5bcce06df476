//! The free matching dialgebra on a finite alphabet with `k` products, and
//! its nested tensor-algebra models.
//!
//! A basis word is `x_{a1} *i1 x_{a2} *i2 ... x_{an}`; every product of two
//! words splices its label between them. Every bracketing of a word gives
//! the same element, which is why these words form a basis of the free
//! object.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::check::Witness;
use crate::linalg::{add_scaled, zero_vector, Rational, Vector};
use crate::structure::{is_multi_matching, FiniteAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeError {
    #[error("label {label} outside 1..={k}")]
    Label { label: u8, k: u8 },
    #[error("letter x{} outside an alphabet of size {alphabet}", letter + 1)]
    Letter { letter: u32, alphabet: u32 },
    #[error("operands live in different free algebras: (alphabet {0}, k {1}) vs (alphabet {2}, k {3})")]
    Mismatch(u32, u8, u32, u8),
    #[error("target is not a matching dialgebra: {axiom} fails {witness}")]
    NotMda { axiom: String, witness: Witness },
    #[error("target has {found} products, the words use {needed}")]
    ProductCount { needed: usize, found: usize },
    #[error("assignment: {0}")]
    Assignment(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("nested model needs k = 2")]
    NotTwoProducts,
}

/// `letters[0] *ops[0] letters[1] ... letters[n-1]`; letters are 0-based,
/// labels are 1-based and `ops.len() + 1 == letters.len()`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisWord {
    letters: Vec<u32>,
    ops: Vec<u8>,
}

impl BasisWord {
    pub fn letter(x: u32) -> Self {
        BasisWord {
            letters: vec![x],
            ops: Vec::new(),
        }
    }

    pub fn new(letters: Vec<u32>, ops: Vec<u8>) -> Result<Self, FreeError> {
        if letters.is_empty() || ops.len() + 1 != letters.len() {
            return Err(FreeError::Parse(format!("{} letters with {} labels", letters.len(), ops.len())));
        }
        if let Some(&label) = ops.iter().find(|&&l| l == 0) {
            return Err(FreeError::Label { label, k: 0 });
        }
        Ok(BasisWord { letters, ops })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn ops(&self) -> &[u8] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `self *label other`.
    pub fn splice(&self, label: u8, other: &BasisWord) -> BasisWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let mut ops = self.ops.clone();
        ops.push(label);
        ops.extend_from_slice(&other.ops);
        BasisWord { letters, ops }
    }

    fn check_in(&self, alphabet: u32, k: u8) -> Result<(), FreeError> {
        if let Some(&letter) = self.letters.iter().find(|&&x| x >= alphabet) {
            return Err(FreeError::Letter { letter, alphabet });
        }
        if let Some(&label) = self.ops.iter().find(|&&l| l == 0 || l > k) {
            return Err(FreeError::Label { label, k });
        }
        Ok(())
    }
}

impl Ord for BasisWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.ops.cmp(&other.ops))
    }
}

impl PartialOrd for BasisWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.letters[0] + 1)?;
        for (op, x) in self.ops.iter().zip(&self.letters[1..]) {
            write!(f, " *{op} x{}", x + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BasisWord {
    type Err = FreeError;

    /// Parses `x1 *1 x2 *2 x1`.
    fn from_str(s: &str) -> Result<Self, FreeError> {
        let bad = || FreeError::Parse(s.to_string());
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.len().is_multiple_of(2) {
            return Err(bad());
        }
        let letter = |t: &str| -> Result<u32, FreeError> {
            let n: u32 = t.strip_prefix('x').and_then(|d| d.parse().ok()).ok_or_else(bad)?;
            n.checked_sub(1).ok_or_else(bad)
        };
        let label = |t: &str| -> Result<u8, FreeError> {
            t.strip_prefix('*').and_then(|d| d.parse().ok()).filter(|&l| l > 0).ok_or_else(bad)
        };
        let mut letters = vec![letter(tokens[0])?];
        let mut ops = Vec::new();
        for (op, x) in tokens[1..].iter().tuples() {
            ops.push(label(op)?);
            letters.push(letter(x)?);
        }
        BasisWord::new(letters, ops)
    }
}

/// All words with `n` letters over `m` letters and `k` labels, in word order.
pub fn words(m: u32, n: usize, k: u8) -> impl Iterator<Item = BasisWord> {
    (0..n).map(|_| 0..m).multi_cartesian_product().flat_map(move |letters| {
        (1..n)
            .map(|_| 1..=k)
            .multi_cartesian_product()
            .map(move |ops| BasisWord {
                letters: letters.clone(),
                ops,
            })
    })
}

/// `m^n k^(n-1)`, the number of basis words of length `n`.
pub fn graded_dimension(m: u32, n: usize, k: u8) -> BigUint {
    assert!(n >= 1, "words have at least one letter");
    BigUint::from(m).pow(n as u32) * BigUint::from(k).pow(n as u32 - 1)
}

/// A finite linear combination of basis words of one free algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement {
    alphabet: u32,
    k: u8,
    terms: BTreeMap<BasisWord, Rational>,
}

impl FreeElement {
    pub fn zero(alphabet: u32, k: u8) -> Self {
        FreeElement {
            alphabet,
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(alphabet: u32, k: u8, w: BasisWord) -> Result<Self, FreeError> {
        w.check_in(alphabet, k)?;
        let mut e = Self::zero(alphabet, k);
        e.terms.insert(w, Rational::one());
        Ok(e)
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<BasisWord, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &BasisWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, c: &Rational, w: BasisWord) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn same_space(&self, other: &FreeElement) -> Result<(), FreeError> {
        if (self.alphabet, self.k) != (other.alphabet, other.k) {
            return Err(FreeError::Mismatch(self.alphabet, self.k, other.alphabet, other.k));
        }
        Ok(())
    }

    pub fn add(&self, other: &FreeElement) -> Result<FreeElement, FreeError> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(c, w.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> FreeElement {
        let mut out = Self::zero(self.alphabet, self.k);
        if !s.is_zero() {
            out.terms = self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect();
        }
        out
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts = self.terms.iter().map(|(w, c)| format!("{c} · {w}"));
        write!(f, "{}", parts.format(" + "))
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `u *label v`, extended bilinearly.
pub fn free_product(label: u8, u: &FreeElement, v: &FreeElement) -> Result<FreeElement, FreeError> {
    u.same_space(v)?;
    if label == 0 || label > u.k {
        return Err(FreeError::Label { label, k: u.k });
    }
    let mut out = FreeElement::zero(u.alphabet, u.k);
    for (a, ca) in &u.terms {
        for (b, cb) in &v.terms {
            out.add_term(&(ca * cb), a.splice(label, b));
        }
    }
    Ok(out)
}

/// The free algebra on `alphabet` letters with `k` products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeMda {
    pub alphabet: u32,
    pub k: u8,
}

impl FreeMda {
    pub fn new(alphabet: u32, k: u8) -> Self {
        FreeMda { alphabet, k }
    }

    pub fn letter(&self, x: u32) -> Result<FreeElement, FreeError> {
        FreeElement::from_word(self.alphabet, self.k, BasisWord::letter(x))
    }

    pub fn word(&self, w: BasisWord) -> Result<FreeElement, FreeError> {
        FreeElement::from_word(self.alphabet, self.k, w)
    }

    pub fn parse_word(&self, s: &str) -> Result<FreeElement, FreeError> {
        self.word(s.parse()?)
    }

    pub fn zero(&self) -> FreeElement {
        FreeElement::zero(self.alphabet, self.k)
    }

    pub fn words(&self, n: usize) -> impl Iterator<Item = BasisWord> {
        words(self.alphabet, n, self.k)
    }
}

/// Checks a target algebra and letter images once, then evaluates words by
/// folding the target products from the left.
pub struct Evaluator<'a> {
    target: &'a FiniteAlgebra,
    assignment: &'a [Vector],
}

impl<'a> Evaluator<'a> {
    pub fn new(target: &'a FiniteAlgebra, assignment: &'a [Vector], k: u8) -> Result<Self, FreeError> {
        if target.products().len() != k as usize {
            return Err(FreeError::ProductCount {
                needed: k as usize,
                found: target.products().len(),
            });
        }
        if let Some(v) = assignment.iter().find(|v| v.len() != target.dim()) {
            return Err(FreeError::Assignment(format!(
                "image of length {} in a {}-dimensional target",
                v.len(),
                target.dim()
            )));
        }
        let products: Vec<_> = target.products().iter().map(|(_, p)| p).collect();
        if let Some(fail) = is_multi_matching(&products).first_failure() {
            return Err(FreeError::NotMda {
                axiom: fail.name.clone(),
                witness: fail.witness.clone().expect("failed check has a witness"),
            });
        }
        Ok(Evaluator { target, assignment })
    }

    pub fn word(&self, w: &BasisWord) -> Result<Vector, FreeError> {
        let image = |x: u32| {
            self.assignment
                .get(x as usize)
                .ok_or(FreeError::Letter {
                    letter: x,
                    alphabet: self.assignment.len() as u32,
                })
        };
        let mut acc = image(w.letters[0])?.clone();
        for (&op, &x) in w.ops.iter().zip(&w.letters[1..]) {
            let p = self.target.product(op as usize - 1).ok_or(FreeError::Label {
                label: op,
                k: self.target.products().len() as u8,
            })?;
            acc = p.apply(&acc, image(x)?);
        }
        Ok(acc)
    }

    pub fn element(&self, e: &FreeElement) -> Result<Vector, FreeError> {
        let mut out = zero_vector(self.target.dim());
        for (w, c) in &e.terms {
            add_scaled(&mut out, c, &self.word(w)?);
        }
        Ok(out)
    }
}

/// The homomorphism extending `letter i ↦ assignment[i]`, applied to `e`.
pub fn evaluate_hom(assignment: &[Vector], target: &FiniteAlgebra, e: &FreeElement) -> Result<Vector, FreeError> {
    Evaluator::new(target, assignment, e.k)?.element(e)
}

/// The shortest word (in word order) of length at most `max_len` on which
/// `candidate` disagrees with the homomorphism extending `assignment`.
pub fn first_disagreement(
    assignment: &[Vector],
    target: &FiniteAlgebra,
    k: u8,
    max_len: usize,
    mut candidate: impl FnMut(&BasisWord) -> Vector,
) -> Result<Option<BasisWord>, FreeError> {
    let eval = Evaluator::new(target, assignment, k)?;
    for n in 1..=max_len {
        for w in words(assignment.len() as u32, n, k) {
            if eval.word(&w)? != candidate(&w) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// Blocks joined by `*1`, letters inside a block by `*2`.
    Outer1Inner2,
    /// Blocks joined by `*2`, letters inside a block by `*1`.
    Outer2Inner1,
}

impl Orientation {
    pub fn outer(self) -> u8 {
        match self {
            Orientation::Outer1Inner2 => 1,
            Orientation::Outer2Inner1 => 2,
        }
    }

    pub fn inner(self) -> u8 {
        3 - self.outer()
    }
}

/// A basis tensor of the nested tensor algebra: outer tensors of inner
/// tensors of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NestedWord {
    blocks: Vec<Vec<u32>>,
    orientation: Orientation,
}

impl NestedWord {
    pub fn new(blocks: Vec<Vec<u32>>, orientation: Orientation) -> Result<Self, FreeError> {
        if blocks.is_empty() || blocks.iter().any(Vec::is_empty) {
            return Err(FreeError::Parse("nested words need nonempty blocks".into()));
        }
        Ok(NestedWord { blocks, orientation })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// The outer product concatenates block lists; the inner product also
    /// merges the last block of `self` with the first block of `other`.
    pub fn product(&self, label: u8, other: &NestedWord) -> Result<NestedWord, FreeError> {
        if self.orientation != other.orientation {
            return Err(FreeError::Parse("nested words of different orientations".into()));
        }
        if label != 1 && label != 2 {
            return Err(FreeError::Label { label, k: 2 });
        }
        let mut blocks = self.blocks.clone();
        let mut rest = other.blocks.iter();
        if label == self.orientation.inner() {
            let first = rest.next().expect("nonempty");
            blocks.last_mut().expect("nonempty").extend_from_slice(first);
        }
        blocks.extend(rest.cloned());
        Ok(NestedWord {
            blocks,
            orientation: self.orientation,
        })
    }

    /// All nested words whose blocks hold `n` letters in total.
    pub fn enumerate(m: u32, n: usize, orientation: Orientation) -> Vec<NestedWord> {
        words(m, n, 2)
            .filter_map(|w| split_psi(&w, orientation).ok())
            .collect()
    }
}

/// Joins letters inside a block by the inner label and blocks by the outer one.
pub fn flatten_phi(n: &NestedWord) -> BasisWord {
    let (outer, inner) = (n.orientation.outer(), n.orientation.inner());
    let mut letters = Vec::new();
    let mut ops = Vec::new();
    for (b, block) in n.blocks.iter().enumerate() {
        if b > 0 {
            ops.push(outer);
        }
        for (i, &x) in block.iter().enumerate() {
            if i > 0 {
                ops.push(inner);
            }
            letters.push(x);
        }
    }
    BasisWord { letters, ops }
}

/// Cuts `w` at every outer label; the word must use labels 1 and 2 only.
pub fn split_psi(w: &BasisWord, orientation: Orientation) -> Result<NestedWord, FreeError> {
    if let Some(&label) = w.ops.iter().find(|&&l| l != 1 && l != 2) {
        return Err(FreeError::Label { label, k: 2 });
    }
    let mut blocks = vec![vec![w.letters[0]]];
    for (&op, &x) in w.ops.iter().zip(&w.letters[1..]) {
        if op == orientation.outer() {
            blocks.push(vec![x]);
        } else {
            blocks.last_mut().expect("nonempty").push(x);
        }
    }
    Ok(NestedWord { blocks, orientation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vector;
    use crate::samples;

    fn w(s: &str) -> BasisWord {
        s.parse().unwrap()
    }

    #[test]
    fn products_splice_labels() {
        let f = FreeMda::new(3, 2);
        let (x, y, z) = (f.letter(0).unwrap(), f.letter(1).unwrap(), f.letter(2).unwrap());
        let xy = free_product(1, &x, &y).unwrap();
        assert_eq!(xy, f.parse_word("x1 *1 x2").unwrap());
        let left = free_product(2, &xy, &z).unwrap();
        assert_eq!(left.to_string(), "1 · x1 *1 x2 *2 x3");
        let right = free_product(1, &x, &free_product(2, &y, &z).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn mismatched_operands_are_rejected() {
        let a = FreeMda::new(2, 2).letter(0).unwrap();
        let b = FreeMda::new(3, 2).letter(0).unwrap();
        assert!(matches!(free_product(1, &a, &b), Err(FreeError::Mismatch(..))));
        assert!(matches!(free_product(3, &a, &a), Err(FreeError::Label { .. })));
    }

    #[test]
    fn word_syntax() {
        assert_eq!(w("x2 *1 x1 *2 x2").to_string(), "x2 *1 x1 *2 x2");
        for bad in ["", "x0", "x1 *1", "x1 x2", "x1 *0 x2", "y1"] {
            assert!(bad.parse::<BasisWord>().is_err(), "{bad}");
        }
    }

    #[test]
    fn word_counts() {
        assert_eq!(graded_dimension(1, 1, 2), BigUint::from(1u32));
        assert_eq!(graded_dimension(2, 3, 2), BigUint::from(32u32));
        assert_eq!(graded_dimension(1, 4, 2), BigUint::from(8u32));
        assert_eq!(words(2, 3, 2).count(), 32);
        assert_eq!(words(1, 4, 2).count(), 8);
        assert_eq!(words(3, 1, 2).count(), 3);
        assert!(words(2, 3, 3).tuple_windows().all(|(a, b)| a < b));
    }

    #[test]
    fn evaluation_in_the_epsilon_algebra() {
        let target = samples::epsilon_mda();
        let x = vec![basis_vector(2, 0)];
        let f = FreeMda::new(1, 2);
        assert_eq!(evaluate_hom(&x, &target, &f.letter(0).unwrap()).unwrap(), x[0]);
        let xx = f.parse_word("x1 *1 x1").unwrap();
        assert_eq!(evaluate_hom(&x, &target, &xx).unwrap(), basis_vector(2, 1));
    }

    #[test]
    fn evaluation_rejects_non_mda_targets() {
        let p1 = samples::dual_numbers();
        let p2 = crate::structure::BilinearProduct::from_sparse(2, &[(0, 0, 0, 1)]);
        let bad = FiniteAlgebra::two_product(p1, p2).unwrap();
        let f = FreeMda::new(1, 2);
        let err = evaluate_hom(&[basis_vector(2, 0)], &bad, &f.letter(0).unwrap()).unwrap_err();
        assert!(matches!(err, FreeError::NotMda { .. }));
    }

    #[test]
    fn nested_words() {
        let n = NestedWord::new(vec![vec![0], vec![1, 2]], Orientation::Outer1Inner2).unwrap();
        assert_eq!(flatten_phi(&n), w("x1 *1 x2 *2 x3"));
        let n = NestedWord::new(vec![vec![0, 1], vec![2]], Orientation::Outer2Inner1).unwrap();
        assert_eq!(flatten_phi(&n), w("x1 *1 x2 *2 x3"));
        let s = split_psi(&w("x1 *2 x2 *1 x3"), Orientation::Outer1Inner2).unwrap();
        assert_eq!(s.blocks(), &[vec![0, 1], vec![2]]);
        let one = split_psi(&w("x1"), Orientation::Outer2Inner1).unwrap();
        assert_eq!(one.blocks(), &[vec![0]]);
        assert_eq!(flatten_phi(&one), w("x1"));
    }

    #[test]
    fn nested_products() {
        let o = Orientation::Outer1Inner2;
        let u = NestedWord::new(vec![vec![0], vec![1]], o).unwrap();
        let v = NestedWord::new(vec![vec![2], vec![0]], o).unwrap();
        assert_eq!(u.product(1, &v).unwrap().blocks(), &[vec![0], vec![1], vec![2], vec![0]]);
        assert_eq!(u.product(2, &v).unwrap().blocks(), &[vec![0], vec![1, 2], vec![0]]);
        assert_eq!(NestedWord::enumerate(2, 3, o).len(), 32);
    }
}

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::OperadError;

/// A planar binary tree whose internal vertices carry generator labels
/// `1..=k`. `Node(i, l, r)` is `mu_i(l, r)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum TreeMonomial {
    Leaf,
    Node(u8, Box<TreeMonomial>, Box<TreeMonomial>),
}

/// A vertex address: the child indices (1 = left, 2 = right) from the root.
pub type Position = Vec<u8>;

pub fn format_position(p: &[u8]) -> String {
    if p.is_empty() {
        "root".to_string()
    } else {
        p.iter().map(ToString::to_string).collect::<Vec<_>>().join(".")
    }
}

impl TreeMonomial {
    pub fn leaf() -> Self {
        TreeMonomial::Leaf
    }

    pub fn node(label: u8, left: TreeMonomial, right: TreeMonomial) -> Self {
        TreeMonomial::Node(label, Box::new(left), Box::new(right))
    }

    /// `mu_i` itself.
    pub fn generator(label: u8) -> Self {
        Self::node(label, Self::Leaf, Self::Leaf)
    }

    pub fn arity(&self) -> usize {
        match self {
            TreeMonomial::Leaf => 1,
            TreeMonomial::Node(_, l, r) => l.arity() + r.arity(),
        }
    }

    pub fn weight(&self) -> usize {
        self.arity() - 1
    }

    /// Labels in preorder (vertex, left subtree, right subtree).
    pub fn preorder_labels(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_preorder(&mut out);
        out
    }

    fn collect_preorder(&self, out: &mut Vec<u8>) {
        if let TreeMonomial::Node(i, l, r) = self {
            out.push(*i);
            l.collect_preorder(out);
            r.collect_preorder(out);
        }
    }

    /// Labels in left-to-right (in-order) position: the operation between
    /// consecutive leaves.
    pub fn inorder_labels(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_inorder(&mut out);
        out
    }

    fn collect_inorder(&self, out: &mut Vec<u8>) {
        if let TreeMonomial::Node(i, l, r) = self {
            l.collect_inorder(out);
            out.push(*i);
            r.collect_inorder(out);
        }
    }

    pub fn max_label(&self) -> u8 {
        self.preorder_labels().into_iter().max().unwrap_or(0)
    }

    /// Sum over vertices of the number of leaves in the left subtree.
    /// Rotating `(A B) C` to `A (B C)` lowers it by the leaf count of `A`.
    pub fn left_weight(&self) -> usize {
        match self {
            TreeMonomial::Leaf => 0,
            TreeMonomial::Node(_, l, r) => l.arity() + l.left_weight() + r.left_weight(),
        }
    }

    pub fn is_right_comb(&self) -> bool {
        match self {
            TreeMonomial::Leaf => true,
            TreeMonomial::Node(_, l, r) => **l == TreeMonomial::Leaf && r.is_right_comb(),
        }
    }

    pub fn to_comb(&self) -> Option<CombSequence> {
        self.is_right_comb().then(|| CombSequence {
            labels: self.preorder_labels(),
        })
    }

    pub fn subtree(&self, pos: &[u8]) -> Option<&TreeMonomial> {
        match (pos.split_first(), self) {
            (None, t) => Some(t),
            (Some((1, rest)), TreeMonomial::Node(_, l, _)) => l.subtree(rest),
            (Some((2, rest)), TreeMonomial::Node(_, _, r)) => r.subtree(rest),
            _ => None,
        }
    }

    pub fn replace_at(&self, pos: &[u8], new: TreeMonomial) -> Option<TreeMonomial> {
        match (pos.split_first(), self) {
            (None, _) => Some(new),
            (Some((1, rest)), TreeMonomial::Node(i, l, r)) => {
                Some(TreeMonomial::Node(*i, Box::new(l.replace_at(rest, new)?), r.clone()))
            }
            (Some((2, rest)), TreeMonomial::Node(i, l, r)) => {
                Some(TreeMonomial::Node(*i, l.clone(), Box::new(r.replace_at(rest, new)?)))
            }
            _ => None,
        }
    }

    /// Vertex positions in preorder.
    pub fn positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        self.collect_positions(&mut Vec::new(), &mut out);
        out
    }

    fn collect_positions(&self, prefix: &mut Position, out: &mut Vec<Position>) {
        if let TreeMonomial::Node(_, l, r) = self {
            out.push(prefix.clone());
            prefix.push(1);
            l.collect_positions(prefix, out);
            prefix.pop();
            prefix.push(2);
            r.collect_positions(prefix, out);
            prefix.pop();
        }
    }

    /// `self ∘_slot other`: `other` grafted onto leaf `slot` (1-based).
    pub fn graft(&self, slot: usize, other: &TreeMonomial) -> Result<TreeMonomial, OperadError> {
        let arity = self.arity();
        if slot == 0 || slot > arity {
            return Err(OperadError::Slot { slot, arity });
        }
        Ok(self.graft_inner(slot - 1, other))
    }

    fn graft_inner(&self, slot: usize, other: &TreeMonomial) -> TreeMonomial {
        match self {
            TreeMonomial::Leaf => other.clone(),
            TreeMonomial::Node(i, l, r) => {
                let la = l.arity();
                if slot < la {
                    TreeMonomial::Node(*i, Box::new(l.graft_inner(slot, other)), r.clone())
                } else {
                    TreeMonomial::Node(*i, l.clone(), Box::new(r.graft_inner(slot - la, other)))
                }
            }
        }
    }

    /// Substitutes `args[i]` for the `i`-th leaf.
    pub fn substitute(&self, args: &[TreeMonomial]) -> TreeMonomial {
        let mut it = args.iter();
        self.substitute_inner(&mut it)
    }

    fn substitute_inner<'a>(&self, it: &mut impl Iterator<Item = &'a TreeMonomial>) -> TreeMonomial {
        match self {
            TreeMonomial::Leaf => it.next().expect("enough arguments").clone(),
            TreeMonomial::Node(i, l, r) => {
                let l = l.substitute_inner(it);
                TreeMonomial::node(*i, l, r.substitute_inner(it))
            }
        }
    }

    /// Matches `self` as a pattern whose leaves are variables; returns the
    /// subtrees bound to the leaves in order.
    pub fn match_pattern(&self, t: &TreeMonomial) -> Option<Vec<TreeMonomial>> {
        let mut out = Vec::new();
        self.match_inner(t, &mut out).then_some(out)
    }

    fn match_inner(&self, t: &TreeMonomial, out: &mut Vec<TreeMonomial>) -> bool {
        match (self, t) {
            (TreeMonomial::Leaf, _) => {
                out.push(t.clone());
                true
            }
            (TreeMonomial::Node(i, pl, pr), TreeMonomial::Node(j, tl, tr)) => {
                i == j && pl.match_inner(tl, out) && pr.match_inner(tr, out)
            }
            _ => false,
        }
    }

    /// Every tree with `n` leaves and labels in `1..=k`, in a fixed order.
    pub fn enumerate(n: usize, k: u8) -> Vec<TreeMonomial> {
        let mut memo: Vec<Vec<TreeMonomial>> = vec![Vec::new(), vec![TreeMonomial::Leaf]];
        for m in 2..=n {
            let mut here = Vec::new();
            for split in 1..m {
                for l in &memo[split] {
                    for r in &memo[m - split] {
                        for label in 1..=k {
                            here.push(TreeMonomial::node(label, l.clone(), r.clone()));
                        }
                    }
                }
            }
            memo.push(here);
        }
        memo.swap_remove(n)
    }

    /// A random tree with `n` leaves: random splits, uniform labels.
    pub fn random(rng: &mut impl Rng, n: usize, k: u8) -> TreeMonomial {
        if n <= 1 {
            return TreeMonomial::Leaf;
        }
        let split = rng.gen_range(1..n);
        let label = rng.gen_range(1..=k);
        let l = Self::random(rng, split, k);
        TreeMonomial::node(label, l, Self::random(rng, n - split, k))
    }

    pub fn display_with_leaves(&self, names: &[String]) -> String {
        let mut out = String::new();
        let mut it = names.iter();
        self.write_inner(&mut out, &mut it);
        out
    }

    fn write_inner<'a>(&self, out: &mut String, names: &mut impl Iterator<Item = &'a String>) {
        match self {
            TreeMonomial::Leaf => out.push_str(names.next().map_or("?", String::as_str)),
            TreeMonomial::Node(i, l, r) => {
                out.push_str(&format!("mu{i}("));
                l.write_inner(out, names);
                out.push(',');
                r.write_inner(out, names);
                out.push(')');
            }
        }
    }
}

pub fn leaf_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{}", i + 1)
            }
        })
        .collect()
}

/// The rewriting order: larger left weight first, then preorder labels
/// compared with `mu_1 > mu_2 > ...`, then shape. Left combs are maximal
/// and right combs minimal among trees with the same labels.
pub fn tree_order(a: &TreeMonomial, b: &TreeMonomial) -> Ordering {
    a.left_weight()
        .cmp(&b.left_weight())
        .then_with(|| {
            let (la, lb) = (a.preorder_labels(), b.preorder_labels());
            lb.cmp(&la)
        })
        .then_with(|| shape_code(a).cmp(&shape_code(b)))
}

fn shape_code(t: &TreeMonomial) -> Vec<bool> {
    let mut out = Vec::new();
    fn go(t: &TreeMonomial, out: &mut Vec<bool>) {
        match t {
            TreeMonomial::Leaf => out.push(false),
            TreeMonomial::Node(_, l, r) => {
                out.push(true);
                go(l, out);
                go(r, out);
            }
        }
    }
    go(t, &mut out);
    out
}

impl fmt::Display for TreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with_leaves(&leaf_names(self.arity())))
    }
}

impl fmt::Debug for TreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A right comb `mu_{l1}(x1, mu_{l2}(x2, ...))`, stored as its labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CombSequence {
    labels: Vec<u8>,
}

impl CombSequence {
    pub fn new(labels: Vec<u8>) -> Self {
        CombSequence { labels }
    }

    /// The identity operation, arity 1.
    pub fn unit() -> Self {
        CombSequence { labels: Vec::new() }
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn arity(&self) -> usize {
        self.labels.len() + 1
    }

    /// Inserts the labels of `t` before position `slot` (1-based).
    pub fn compose(&self, slot: usize, t: &CombSequence) -> Result<CombSequence, OperadError> {
        if slot == 0 || slot > self.arity() {
            return Err(OperadError::Slot {
                slot,
                arity: self.arity(),
            });
        }
        let mut labels = self.labels[..slot - 1].to_vec();
        labels.extend_from_slice(&t.labels);
        labels.extend_from_slice(&self.labels[slot - 1..]);
        Ok(CombSequence { labels })
    }

    pub fn to_tree(&self) -> TreeMonomial {
        self.labels
            .iter()
            .rev()
            .fold(TreeMonomial::Leaf, |acc, &i| TreeMonomial::node(i, TreeMonomial::Leaf, acc))
    }

    /// The sequence with position `i` (0-based) removed.
    pub fn delete(&self, i: usize) -> CombSequence {
        let mut labels = self.labels.clone();
        labels.remove(i);
        CombSequence { labels }
    }

    /// Every sequence of arity `n` over `1..=k`, lexicographically.
    pub fn enumerate(n: usize, k: u8) -> Vec<CombSequence> {
        let mut out = vec![Vec::new()];
        for _ in 1..n {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u8>| {
                    (1..=k).map(move |i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(CombSequence::new).collect()
    }
}

impl fmt::Display for CombSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for CombSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

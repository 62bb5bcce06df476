//! Rewriting of tree monomials by the oriented relations of a presentation,
//! and the critical-monomial confluence check.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::presentation::Presentation;
use super::tree::{format_position, CombSequence, Position, TreeMonomial};
use super::OperadError;

/// One rule application: rule index and the vertex it is applied at.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Redex {
    pub rule: usize,
    pub position: Position,
}

/// Every applicable redex, in preorder of position then rule index.
pub fn redexes(pres: &Presentation, t: &TreeMonomial) -> Vec<Redex> {
    let mut out = Vec::new();
    for position in t.positions() {
        let sub = t.subtree(&position).expect("own position");
        for (rule, r) in pres.relations().iter().enumerate() {
            if r.lead.match_pattern(sub).is_some() {
                out.push(Redex {
                    rule,
                    position: position.clone(),
                });
            }
        }
    }
    out
}

pub fn apply(pres: &Presentation, t: &TreeMonomial, redex: &Redex) -> Option<TreeMonomial> {
    let rule = pres.relations().get(redex.rule)?;
    let sub = t.subtree(&redex.position)?;
    let bound = rule.lead.match_pattern(sub)?;
    t.replace_at(&redex.position, rule.reduct.substitute(&bound))
}

/// The leftmost-outermost redex, if any.
pub fn first_redex(pres: &Presentation, t: &TreeMonomial) -> Option<Redex> {
    for position in t.positions() {
        let sub = t.subtree(&position).expect("own position");
        if let Some(rule) = pres.relations().iter().position(|r| r.lead.match_pattern(sub).is_some()) {
            return Some(Redex { rule, position });
        }
    }
    None
}

/// Rewrites leftmost-outermost until no rule applies. `limit` bounds the
/// number of steps for systems that are not known to terminate.
pub fn reduce_with_trace(pres: &Presentation, t: &TreeMonomial, limit: usize) -> Result<Vec<(Redex, TreeMonomial)>, OperadError> {
    let mut cur = t.clone();
    let mut steps = Vec::new();
    while let Some(r) = first_redex(pres, &cur) {
        if steps.len() == limit {
            return Err(OperadError::NotTerminating(t.to_string()));
        }
        cur = apply(pres, &cur, &r).expect("redex applies");
        steps.push((r, cur.clone()));
    }
    Ok(steps)
}

/// Every irreducible monomial reachable from `t` by any sequence of rewrites.
pub fn reachable_normal_forms(pres: &Presentation, t: &TreeMonomial, limit: usize) -> Result<BTreeSet<String>, OperadError> {
    Ok(reachable_normal_form_trees(pres, t, limit)?
        .into_iter()
        .map(|t| t.to_string())
        .collect())
}

fn reachable_normal_form_trees(pres: &Presentation, t: &TreeMonomial, limit: usize) -> Result<Vec<TreeMonomial>, OperadError> {
    let mut seen: HashSet<TreeMonomial> = HashSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    let mut normal = Vec::new();
    seen.insert(t.clone());
    while let Some(cur) = queue.pop_front() {
        let rs = redexes(pres, &cur);
        if rs.is_empty() {
            normal.push(cur);
            continue;
        }
        for r in rs {
            let next = apply(pres, &cur, &r).expect("redex applies");
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(OperadError::NotTerminating(t.to_string()));
                }
                queue.push_back(next);
            }
        }
    }
    normal.sort_by_key(|t| t.to_string());
    Ok(normal)
}

/// Monomials of weight 2 and 3 on which two rule applications overlap:
/// two rules with the same lead, or two redexes sharing a vertex.
pub fn critical_monomials(pres: &Presentation) -> Vec<TreeMonomial> {
    let mut out = Vec::new();
    for n in [3, 4] {
        for t in TreeMonomial::enumerate(n, pres.k()) {
            let rs = redexes(pres, &t);
            let overlapping = rs
                .iter()
                .tuple_combinations()
                .any(|(a, b)| overlaps(pres, a, b) || overlaps(pres, b, a));
            if overlapping {
                out.push(t);
            }
        }
    }
    out
}

/// Whether `b` sits on an internal vertex of the pattern matched by `a`.
fn overlaps(pres: &Presentation, a: &Redex, b: &Redex) -> bool {
    pres.relations()[a.rule].lead.positions().into_iter().any(|p| {
        let mut q = a.position.clone();
        q.extend(p);
        q == b.position
    })
}

/// A rewriting path from a critical monomial: the first step applies `rule`
/// at `position`, later steps are leftmost-outermost.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub rule: usize,
    pub position: String,
    pub steps: Vec<String>,
}

impl Branch {
    pub fn normal_form(&self) -> &str {
        self.steps.last().map(String::as_str).unwrap_or("")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalReport {
    pub monomial: String,
    pub branches: Vec<Branch>,
    /// Every irreducible monomial reachable by any rewriting sequence.
    pub normal_forms: Vec<String>,
    pub confluent: bool,
}

impl CriticalReport {
    /// Two branches meeting at one normal form after 2 and 3 steps through
    /// five distinct monomials: the associahedron pentagon.
    pub fn is_pentagon(&self) -> bool {
        if self.branches.len() != 2 || self.branches[0].normal_form() != self.branches[1].normal_form() {
            return false;
        }
        let mut lens: Vec<usize> = self.branches.iter().map(|b| b.steps.len()).collect();
        lens.sort_unstable();
        if lens != [2, 3] {
            return false;
        }
        let mut vertices: HashSet<&str> = HashSet::from([self.monomial.as_str()]);
        for b in &self.branches {
            vertices.extend(b.steps.iter().map(String::as_str));
        }
        vertices.len() == 5
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfluenceReport {
    pub presentation: String,
    pub k: u8,
    pub terminating: bool,
    /// Rules whose lead does not exceed the reduct in the tree order.
    pub non_decreasing_rules: Vec<usize>,
    pub critical: Vec<CriticalReport>,
}

impl ConfluenceReport {
    pub fn confluent_count(&self) -> usize {
        self.critical.iter().filter(|c| c.confluent).count()
    }

    pub fn confluent(&self) -> bool {
        self.confluent_count() == self.critical.len()
    }

    /// Terminating and every critical monomial confluent: the presented
    /// operad is Koszul with the irreducible monomials as a PBW basis.
    pub fn koszul_certificate(&self) -> bool {
        self.terminating && self.confluent()
    }
}

impl fmt::Display for ConfluenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "presentation {} (k = {})", self.presentation, self.k)?;
        if self.terminating {
            writeln!(f, "termination: every rule decreases the tree order")?;
        } else {
            writeln!(f, "termination: NOT certified, rules {:?} do not decrease", self.non_decreasing_rules)?;
        }
        for (i, c) in self.critical.iter().enumerate() {
            writeln!(f, "critical monomial {}/{}: {}", i + 1, self.critical.len(), c.monomial)?;
            for b in &c.branches {
                writeln!(f, "  rule {} at {}: {} -> {}", b.rule + 1, b.position, c.monomial, b.steps.join(" -> "))?;
            }
            if c.confluent {
                writeln!(f, "  confluent: {}", c.normal_forms[0])?;
            } else {
                writeln!(f, "  NOT confluent: normal forms {}", c.normal_forms.join(", "))?;
            }
        }
        writeln!(
            f,
            "{}/{} critical monomials confluent",
            self.confluent_count(),
            self.critical.len()
        )?;
        if self.koszul_certificate() {
            write!(f, "Koszul certificate obtained")
        } else {
            write!(f, "no Koszul certificate")
        }
    }
}

const SEARCH_LIMIT: usize = 10_000;

pub fn check_confluence(pres: &Presentation) -> ConfluenceReport {
    let non_decreasing = pres.non_decreasing_rules();
    let critical: Vec<CriticalReport> = critical_monomials(pres)
        .par_iter()
        .map(|t| {
            let branches = redexes(pres, t)
                .into_iter()
                .map(|r| {
                    let first = apply(pres, t, &r).expect("redex applies");
                    let mut steps = vec![first.to_string()];
                    match reduce_with_trace(pres, &first, SEARCH_LIMIT) {
                        Ok(rest) => steps.extend(rest.into_iter().map(|(_, t)| t.to_string())),
                        Err(_) => steps.push("...".into()),
                    }
                    Branch {
                        rule: r.rule,
                        position: format_position(&r.position),
                        steps,
                    }
                })
                .collect();
            let normal_forms: Vec<String> = reachable_normal_forms(pres, t, SEARCH_LIMIT)
                .map(|s| s.into_iter().collect())
                .unwrap_or_default();
            CriticalReport {
                monomial: t.to_string(),
                branches,
                confluent: normal_forms.len() == 1,
                normal_forms,
            }
        })
        .collect();
    ConfluenceReport {
        presentation: pres.name().to_string(),
        k: pres.k(),
        terminating: non_decreasing.is_empty(),
        non_decreasing_rules: non_decreasing,
        critical,
    }
}

/// The unique normal form of `t`; refuses presentations without a Koszul
/// certificate. The check runs once per presentation value.
pub fn normalize(t: &TreeMonomial, pres: &Presentation) -> Result<TreeMonomial, OperadError> {
    let certified = *pres.certified.get_or_init(|| check_confluence(pres).koszul_certificate());
    if !certified {
        return Err(OperadError::NotCertified(pres.name().to_string()));
    }
    if t.max_label() > pres.k() {
        return Err(OperadError::Label {
            label: t.max_label(),
            k: pres.k(),
        });
    }
    let steps = reduce_with_trace(pres, t, usize::MAX)?;
    Ok(steps.last().map_or_else(|| t.clone(), |(_, t)| t.clone()))
}

/// [`normalize`], read as a comb when the normal form is a right comb.
pub fn normalize_to_comb(t: &TreeMonomial, pres: &Presentation) -> Result<CombSequence, OperadError> {
    let nf = normalize(t, pres)?;
    nf.to_comb().ok_or_else(|| OperadError::NotComb(nf.to_string()))
}

/// `k^(n-1)`, the number of right combs of arity `n`.
pub fn operad_dimension(k: u8, n: usize) -> BigUint {
    assert!(n >= 1, "arity at least 1");
    BigUint::from(k).pow(n as u32 - 1)
}

/// Dimension of the presented operad in arity `n`, from linear algebra
/// rather than rewriting: the relations are binomials, so the ideal in
/// arity `n` is spanned by differences `T - T'` of monomials joined by one
/// rule application, and the quotient dimension is the number of connected
/// components of that graph.
pub fn quotient_dimension(pres: &Presentation, n: usize) -> usize {
    let trees = TreeMonomial::enumerate(n, pres.k());
    let index: HashMap<&TreeMonomial, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut parent: Vec<usize> = (0..trees.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, t) in trees.iter().enumerate() {
        for r in redexes(pres, t) {
            let next = apply(pres, t, &r).expect("redex applies");
            let j = index[&next];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    (0..trees.len()).filter(|&i| find(&mut parent, i) == i).count()
}

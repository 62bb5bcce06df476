use std::fmt;
use std::sync::OnceLock;

use super::tree::{tree_order, TreeMonomial};
use super::OperadError;

/// A relation `lead - reduct` between two arity-3 monomials, oriented as the
/// rule `lead -> reduct`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lead: TreeMonomial,
    pub reduct: TreeMonomial,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.reduct)
    }
}

/// A quadratic presentation with `k` binary generators.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    k: u8,
    relations: Vec<Relation>,
    pub(super) certified: OnceLock<bool>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.relations == other.relations
    }
}

impl Eq for Presentation {}

fn g(i: u8) -> TreeMonomial {
    TreeMonomial::generator(i)
}

/// `mu_outer ∘_slot mu_inner`.
pub fn graft2(outer: u8, slot: usize, inner: u8) -> TreeMonomial {
    g(outer).graft(slot, &g(inner)).expect("slot 1 or 2")
}

impl Presentation {
    pub fn new(name: impl Into<String>, k: u8, relations: Vec<Relation>) -> Result<Self, OperadError> {
        if k == 0 {
            return Err(OperadError::Presentation("k must be positive".into()));
        }
        for r in &relations {
            for t in [&r.lead, &r.reduct] {
                if t.arity() != 3 {
                    return Err(OperadError::Presentation(format!("{t} has arity {}, not 3", t.arity())));
                }
                if t.max_label() > k {
                    return Err(OperadError::Label {
                        label: t.max_label(),
                        k,
                    });
                }
            }
            if r.lead == r.reduct {
                return Err(OperadError::Presentation(format!("trivial relation {r}")));
            }
        }
        Ok(Presentation {
            name: name.into(),
            k,
            relations,
            certified: OnceLock::new(),
        })
    }

    /// `mu_i ∘_1 mu_j - mu_i ∘_2 mu_j` for all `i, j`.
    pub fn paper(k: u8) -> Self {
        let mut rels = Vec::new();
        for i in 1..=k {
            for j in 1..=k {
                rels.push(Relation {
                    lead: graft2(i, 1, j),
                    reduct: graft2(i, 2, j),
                });
            }
        }
        Self::new("paper", k, rels).expect("well formed")
    }

    /// `mu_i ∘_1 mu_j - mu_j ∘_2 mu_i` for all `i, j`: the identities
    /// `(x *j y) *i z = x *j (y *i z)` read as trees.
    pub fn mda(k: u8) -> Self {
        let mut rels = Vec::new();
        for i in 1..=k {
            for j in 1..=k {
                rels.push(Relation {
                    lead: graft2(i, 1, j),
                    reduct: graft2(j, 2, i),
                });
            }
        }
        Self::new("mda", k, rels).expect("well formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn with_relation(&self, r: Relation) -> Result<Self, OperadError> {
        let mut rels = self.relations.clone();
        rels.push(r);
        Self::new(format!("{}+1", self.name), self.k, rels)
    }

    /// Indices of rules whose lead is not larger than the reduct in the tree order.
    pub fn non_decreasing_rules(&self) -> Vec<usize> {
        self.relations
            .iter()
            .enumerate()
            .filter(|(_, r)| tree_order(&r.lead, &r.reduct) != std::cmp::Ordering::Greater)
            .map(|(i, _)| i)
            .collect()
    }

    /// One `k` line, then one `lead - reduct` line per relation.
    pub fn to_text(&self) -> String {
        let mut out = format!("k {}\n", self.k);
        for r in &self.relations {
            out.push_str(&format!("{r}\n"));
        }
        out
    }

    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self, OperadError> {
        let mut k: Option<u8> = None;
        let mut rels = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let perr = |m: String| OperadError::Parse { line, message: m };
            if let Some(rest) = content.strip_prefix("k ") {
                if k.is_some() {
                    return Err(perr("k declared twice".into()));
                }
                k = Some(rest.trim().parse().map_err(|_| perr(format!("bad k {rest:?}")))?);
                continue;
            }
            if k.is_none() {
                return Err(perr("the k line must come first".into()));
            }
            let (lhs, rhs) = split_difference(content).ok_or_else(|| perr("expected `lhs - rhs`".into()))?;
            let (lead, lead_leaves) = parse_term(lhs).map_err(&perr)?;
            let (reduct, reduct_leaves) = parse_term(rhs).map_err(&perr)?;
            if lead_leaves != reduct_leaves {
                return Err(perr(format!(
                    "leaves differ: ({}) vs ({})",
                    lead_leaves.join(","),
                    reduct_leaves.join(",")
                )));
            }
            if lead.arity() != 3 {
                return Err(perr(format!("relations must have arity 3, found {}", lead.arity())));
            }
            rels.push(Relation { lead, reduct });
        }
        let k = k.ok_or(OperadError::Parse {
            line: 1,
            message: "missing k line".into(),
        })?;
        Self::new(name, k, rels)
    }

    /// The presentation's space of relations as rows over the weight-2 basis.
    pub fn weight_two_index(&self, t: &TreeMonomial) -> Option<usize> {
        weight_two_index(self.k, t)
    }
}

/// Index of an arity-3 monomial in the basis `mu_a ∘_1 mu_b` (first `k²`
/// entries, `a` major) followed by `mu_a ∘_2 mu_b`.
pub fn weight_two_index(k: u8, t: &TreeMonomial) -> Option<usize> {
    let k = k as usize;
    match t {
        TreeMonomial::Node(a, l, r) => match (&**l, &**r) {
            (TreeMonomial::Node(b, ll, lr), TreeMonomial::Leaf)
                if **ll == TreeMonomial::Leaf && **lr == TreeMonomial::Leaf =>
            {
                Some((*a as usize - 1) * k + (*b as usize - 1))
            }
            (TreeMonomial::Leaf, TreeMonomial::Node(b, rl, rr))
                if **rl == TreeMonomial::Leaf && **rr == TreeMonomial::Leaf =>
            {
                Some(k * k + (*a as usize - 1) * k + (*b as usize - 1))
            }
            _ => None,
        },
        TreeMonomial::Leaf => None,
    }
}

pub fn weight_two_monomial(k: u8, index: usize) -> TreeMonomial {
    let k = k as usize;
    let slot = if index < k * k { 1 } else { 2 };
    let r = index % (k * k);
    graft2((r / k + 1) as u8, slot, (r % k + 1) as u8)
}

fn split_difference(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '-' if depth == 0 => return Some((s[..i].trim(), s[i + 1..].trim())),
            _ => {}
        }
    }
    None
}

/// Parses `mu<i>(t,t)` or a leaf name; returns the tree and its leaf names.
pub fn parse_term(s: &str) -> Result<(TreeMonomial, Vec<String>), String> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let mut leaves = Vec::new();
    let t = parse_at(&chars, &mut pos, &mut leaves)?;
    if pos != chars.len() {
        return Err(format!("trailing input in {s:?}"));
    }
    Ok((t, leaves))
}

fn parse_at(c: &[char], pos: &mut usize, leaves: &mut Vec<String>) -> Result<TreeMonomial, String> {
    let start = *pos;
    while *pos < c.len() && c[*pos].is_ascii_alphanumeric() {
        *pos += 1;
    }
    let ident: String = c[start..*pos].iter().collect();
    if ident.is_empty() {
        return Err(format!("expected a term at column {}", start + 1));
    }
    if c.get(*pos) != Some(&'(') {
        if !ident.chars().next().is_some_and(|ch| ch.is_ascii_lowercase()) {
            return Err(format!("bad leaf name {ident:?}"));
        }
        leaves.push(ident);
        return Ok(TreeMonomial::Leaf);
    }
    let label: u8 = ident
        .strip_prefix("mu")
        .and_then(|d| d.parse().ok())
        .filter(|&l| l > 0)
        .ok_or_else(|| format!("bad generator {ident:?}"))?;
    *pos += 1;
    let l = parse_at(c, pos, leaves)?;
    if c.get(*pos) != Some(&',') {
        return Err(format!("expected ',' at column {}", *pos + 1));
    }
    *pos += 1;
    let r = parse_at(c, pos, leaves)?;
    if c.get(*pos) != Some(&')') {
        return Err(format!("expected ')' at column {}", *pos + 1));
    }
    *pos += 1;
    Ok(TreeMonomial::node(label, l, r))
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} presentation, k = {}, {} relations", self.name, self.k, self.relations.len())
    }
}

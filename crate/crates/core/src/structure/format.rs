//! Text format for structure constants.
//!
//! ```text
//! dim 2
//! product o1
//! 0 1
//! 0 0
//! 0 0
//! 0 0
//! operator f
//! 0 0
//! 0 1
//! ```
//!
//! A `product NAME` block holds `dim³` rationals in `[i][j][l]` order (written
//! one line per pair `(i, j)`), an `operator NAME` block holds `dim²` entries
//! row by row. Matched-pair data adds `partner-dim N`, `partner-product NAME`
//! and `action l_A|r_A|l_B|r_B` blocks; `l_A`/`r_A` hold one `partner-dim`
//! square matrix per basis vector of the main algebra, `l_B`/`r_B` one
//! `dim` square matrix per partner basis vector. Entries may be spread over
//! any number of lines; `#` starts a comment. [`AlgebraFile::to_text`] writes
//! the canonical layout, which parses back to the same text.

use std::fmt::Write as _;

use thiserror::Error;

use super::{BilinearProduct, FiniteAlgebra, LinearOperator, MatchedPairData, StructureError};
use crate::linalg::{Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {field}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub field: String,
    pub message: String,
}

fn perr(line: usize, field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartnerAlgebra {
    pub dim: usize,
    pub product: (String, BilinearProduct),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub dim: usize,
    pub products: Vec<(String, BilinearProduct)>,
    pub operators: Vec<(String, Matrix)>,
    pub partner: Option<PartnerAlgebra>,
    pub actions: Vec<(String, Vec<Matrix>)>,
}

const ACTIONS: [&str; 4] = ["l_A", "r_A", "l_B", "r_B"];

enum BlockKind {
    Product(String),
    Operator(String),
    PartnerProduct(String),
    Action(String),
}

struct Block {
    kind: BlockKind,
    line: usize,
    tokens: Vec<(usize, String)>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &FiniteAlgebra) -> Self {
        AlgebraFile {
            dim: alg.dim(),
            products: alg.products().to_vec(),
            operators: Vec::new(),
            partner: None,
            actions: Vec::new(),
        }
    }

    pub fn from_matched_pair(mp: &MatchedPairData) -> Self {
        AlgebraFile {
            dim: mp.a.dim(),
            products: vec![("dot".into(), mp.a.clone())],
            operators: Vec::new(),
            partner: Some(PartnerAlgebra {
                dim: mp.b.dim(),
                product: ("circ".into(), mp.b.clone()),
            }),
            actions: vec![
                ("l_A".into(), mp.l_a.clone()),
                ("r_A".into(), mp.r_a.clone()),
                ("l_B".into(), mp.l_b.clone()),
                ("r_B".into(), mp.r_b.clone()),
            ],
        }
    }

    pub fn algebra(&self) -> FiniteAlgebra {
        let mut alg = FiniteAlgebra::new(self.dim);
        for (name, p) in &self.products {
            alg = alg.with_product(name.clone(), p.clone()).expect("dims checked on parse");
        }
        alg
    }

    pub fn operator(&self, name: &str) -> Option<LinearOperator> {
        self.operators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| LinearOperator(m.clone()))
    }

    pub fn operator_at(&self, i: usize) -> Option<(&str, LinearOperator)> {
        self.operators.get(i).map(|(n, m)| (n.as_str(), LinearOperator(m.clone())))
    }

    pub fn action(&self, name: &str) -> Option<&[Matrix]> {
        self.actions.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    /// Matched-pair data from the first product, the partner and the actions;
    /// absent actions are zero.
    pub fn matched_pair(&self) -> Result<MatchedPairData, StructureError> {
        let a = self
            .products
            .first()
            .map(|(_, p)| p.clone())
            .ok_or(StructureError::MissingProduct { needed: 1, found: 0 })?;
        let partner = self
            .partner
            .as_ref()
            .ok_or_else(|| StructureError::Dimension("matched-pair data needs a partner algebra".into()))?;
        let (na, nb) = (self.dim, partner.dim);
        let get = |name: &str, count: usize, size: usize| {
            self.action(name)
                .map(<[Matrix]>::to_vec)
                .unwrap_or_else(|| vec![Matrix::zeros(size, size); count])
        };
        let mp = MatchedPairData {
            a,
            b: partner.product.1.clone(),
            l_a: get("l_A", na, nb),
            r_a: get("r_A", na, nb),
            l_b: get("l_B", nb, na),
            r_b: get("r_B", nb, na),
        };
        mp.validate()?;
        Ok(mp)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let write_product = |out: &mut String, p: &BilinearProduct| {
            for chunk in p.constants().chunks(p.dim().max(1)) {
                let _ = writeln!(out, "{}", join(chunk));
            }
        };
        let write_matrix = |out: &mut String, m: &Matrix| {
            for i in 0..m.rows() {
                let _ = writeln!(out, "{}", join(m.row(i)));
            }
        };
        let _ = writeln!(out, "dim {}", self.dim);
        for (name, p) in &self.products {
            let _ = writeln!(out, "product {name}");
            write_product(&mut out, p);
        }
        for (name, m) in &self.operators {
            let _ = writeln!(out, "operator {name}");
            write_matrix(&mut out, m);
        }
        if let Some(partner) = &self.partner {
            let _ = writeln!(out, "partner-dim {}", partner.dim);
            let _ = writeln!(out, "partner-product {}", partner.product.0);
            write_product(&mut out, &partner.product.1);
        }
        for (name, family) in &self.actions {
            let _ = writeln!(out, "action {name}");
            for m in family {
                write_matrix(&mut out, m);
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut dim: Option<usize> = None;
        let mut partner_dim: Option<(usize, usize)> = None;
        let mut blocks: Vec<Block> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let head = words.next().expect("nonempty");
            let rest: Vec<&str> = words.collect();
            let one_arg = |field: &str| -> Result<String, ParseError> {
                match rest.as_slice() {
                    [arg] => Ok(arg.to_string()),
                    _ => Err(perr(line, field, "expected exactly one argument")),
                }
            };
            let parse_dim = |field: &str| -> Result<usize, ParseError> {
                one_arg(field)?
                    .parse::<usize>()
                    .map_err(|_| perr(line, field, "expected a nonnegative integer"))
            };
            match head {
                "dim" => {
                    if dim.is_some() {
                        return Err(perr(line, "dim", "declared twice"));
                    }
                    if !blocks.is_empty() {
                        return Err(perr(line, "dim", "must come before any block"));
                    }
                    dim = Some(parse_dim("dim")?);
                }
                "partner-dim" => {
                    if partner_dim.is_some() {
                        return Err(perr(line, "partner-dim", "declared twice"));
                    }
                    partner_dim = Some((parse_dim("partner-dim")?, line));
                }
                "product" | "operator" | "partner-product" | "action" => {
                    if dim.is_none() {
                        return Err(perr(line, head, "dim must be declared first"));
                    }
                    let name = one_arg(head)?;
                    let kind = match head {
                        "product" => BlockKind::Product(name),
                        "operator" => BlockKind::Operator(name),
                        "partner-product" => {
                            if partner_dim.is_none() {
                                return Err(perr(line, head, "partner-dim must be declared first"));
                            }
                            if blocks.iter().any(|b| matches!(b.kind, BlockKind::PartnerProduct(_))) {
                                return Err(perr(line, head, "declared twice"));
                            }
                            BlockKind::PartnerProduct(name)
                        }
                        _ => {
                            if !ACTIONS.contains(&name.as_str()) {
                                return Err(perr(line, "action", format!("unknown action {name:?}")));
                            }
                            if partner_dim.is_none() {
                                return Err(perr(line, "action", "partner-dim must be declared first"));
                            }
                            if blocks.iter().any(|b| matches!(&b.kind, BlockKind::Action(n) if *n == name)) {
                                return Err(perr(line, "action", format!("{name} declared twice")));
                            }
                            BlockKind::Action(name)
                        }
                    };
                    blocks.push(Block {
                        kind,
                        line,
                        tokens: Vec::new(),
                    });
                }
                _ => {
                    let Some(block) = blocks.last_mut() else {
                        return Err(perr(line, head, "unexpected entry outside any block"));
                    };
                    block
                        .tokens
                        .extend(content.split_whitespace().map(|t| (line, t.to_string())));
                }
            }
        }

        let dim = dim.ok_or_else(|| perr(1, "dim", "missing"))?;
        let mut file = AlgebraFile {
            dim,
            products: Vec::new(),
            operators: Vec::new(),
            partner: None,
            actions: Vec::new(),
        };
        let pdim = partner_dim.map(|(d, _)| d);
        for block in blocks {
            let field = match &block.kind {
                BlockKind::Product(n) => format!("product {n}"),
                BlockKind::Operator(n) => format!("operator {n}"),
                BlockKind::PartnerProduct(n) => format!("partner-product {n}"),
                BlockKind::Action(n) => format!("action {n}"),
            };
            let expected = match &block.kind {
                BlockKind::Product(_) => dim.pow(3),
                BlockKind::Operator(_) => dim * dim,
                BlockKind::PartnerProduct(_) => pdim.unwrap_or(0).pow(3),
                BlockKind::Action(n) if n.ends_with('A') => dim * pdim.unwrap_or(0).pow(2),
                BlockKind::Action(_) => pdim.unwrap_or(0) * dim * dim,
            };
            if block.tokens.len() != expected {
                let line = block.tokens.last().map_or(block.line, |(l, _)| *l);
                return Err(perr(
                    line,
                    field,
                    format!("expected {expected} entries, found {}", block.tokens.len()),
                ));
            }
            let values = block
                .tokens
                .iter()
                .map(|(l, t)| t.parse::<Rational>().map_err(|e| perr(*l, field.clone(), e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            let matrices = |count: usize, size: usize| -> Vec<Matrix> {
                (0..count)
                    .map(|k| {
                        Matrix::from_entries(size, size, values[k * size * size..(k + 1) * size * size].to_vec())
                            .expect("sizes match")
                    })
                    .collect()
            };
            match block.kind {
                BlockKind::Product(name) => {
                    if file.products.iter().any(|(n, _)| *n == name) {
                        return Err(perr(block.line, field, "declared twice"));
                    }
                    let p = BilinearProduct::from_constants(dim, values).expect("count checked");
                    file.products.push((name, p));
                }
                BlockKind::Operator(name) => {
                    if file.operators.iter().any(|(n, _)| *n == name) {
                        return Err(perr(block.line, field, "declared twice"));
                    }
                    file.operators.push((name, matrices(1, dim).remove(0)));
                }
                BlockKind::PartnerProduct(name) => {
                    let d = pdim.expect("checked");
                    file.partner = Some(PartnerAlgebra {
                        dim: d,
                        product: (name, BilinearProduct::from_constants(d, values).expect("count checked")),
                    });
                }
                BlockKind::Action(name) => {
                    let d = pdim.expect("checked");
                    let family = if name.ends_with('A') {
                        matrices(dim, d)
                    } else {
                        matrices(d, dim)
                    };
                    file.actions.push((name, family));
                }
            }
        }
        if let Some((_, line)) = partner_dim {
            if file.partner.is_none() {
                return Err(perr(line, "partner-product", "partner-dim declared without a partner-product"));
            }
        }
        Ok(file)
    }
}

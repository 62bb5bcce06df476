//! Verdicts for identities checked on basis tuples.

use std::fmt;

use serde::Serialize;

use crate::linalg::{format_vector, is_zero_vector, Rational, Vector};

/// A basis tuple on which an identity fails, with the nonzero residual
/// `lhs - rhs` in coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub basis: Vec<usize>,
    pub residual: Vec<Rational>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.basis.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "at ({}): residual {}", names.join(", "), format_vector(&self.residual))
    }
}

/// The status of one named identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub fn new(name: impl Into<String>, witness: Option<Witness>) -> Self {
        AxiomCheck {
            name: name.into(),
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "pass  {}", self.name),
            Some(w) => write!(f, "FAIL  {} {}", self.name, w),
        }
    }
}

/// A list of identity checks; holds iff every check holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<AxiomCheck>,
}

impl Report {
    pub fn new(checks: Vec<AxiomCheck>) -> Self {
        Report { checks }
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(AxiomCheck::holds)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.holds())
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Scans all basis tuples with `dims[s]` choices in slot `s`, in
/// lexicographic order, and returns the first tuple whose residual is nonzero.
pub fn first_failure(dims: &[usize], mut residual: impl FnMut(&[usize]) -> Vector) -> Option<Witness> {
    if dims.contains(&0) {
        return None;
    }
    let mut idx = vec![0; dims.len()];
    loop {
        let r = residual(&idx);
        if !is_zero_vector(&r) {
            return Some(Witness {
                basis: idx,
                residual: r,
            });
        }
        // odometer increment, last slot fastest
        let mut s = dims.len();
        loop {
            if s == 0 {
                return None;
            }
            s -= 1;
            idx[s] += 1;
            if idx[s] < dims[s] {
                break;
            }
            idx[s] = 0;
        }
    }
}

/// `first_failure` over `arity` slots of the same dimension.
pub fn first_failure_uniform(dim: usize, arity: usize, residual: impl FnMut(&[usize]) -> Vector) -> Option<Witness> {
    first_failure(&vec![dim; arity], residual)
}

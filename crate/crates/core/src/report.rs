//! Verification reports: one entry per relation family, with a witness for
//! the first violated instance.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::heckealg::AhaElement;
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

/// LHS − RHS of the first failing instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Matrix(Matrix),
    Element(AhaElement),
    Note(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub id: String,
    pub context: String,
    pub status: Status,
    /// Number of instances checked; 0 for a vacuous family.
    pub instances: usize,
    pub witness: Option<Witness>,
}

impl RelationCheck {
    pub fn pass(id: &str, context: &str, instances: usize) -> Self {
        RelationCheck {
            id: id.to_string(),
            context: context.to_string(),
            status: Status::Pass,
            instances,
            witness: None,
        }
    }

    pub fn fail(id: &str, context: &str, instances: usize, witness: Witness) -> Self {
        RelationCheck {
            id: id.to_string(),
            context: context.to_string(),
            status: Status::Fail,
            instances,
            witness: Some(witness),
        }
    }

    /// Builds an entry from residual matrices; zero residuals pass.
    pub fn from_residuals<I>(id: &str, context: &str, residuals: I) -> Self
    where
        I: IntoIterator<Item = Matrix>,
    {
        let mut count = 0;
        let mut witness = None;
        for r in residuals {
            count += 1;
            if witness.is_none() && !r.is_zero() {
                witness = Some(r);
            }
        }
        match witness {
            None => Self::pass(id, context, count),
            Some(w) => Self::fail(id, context, count, Witness::Matrix(w)),
        }
    }

    /// Builds an entry from residual algebra elements; zero residuals pass.
    pub fn from_elements<I>(id: &str, context: &str, residuals: I) -> Self
    where
        I: IntoIterator<Item = AhaElement>,
    {
        let mut count = 0;
        let mut witness = None;
        for r in residuals {
            count += 1;
            if witness.is_none() && !r.is_zero() {
                witness = Some(r);
            }
        }
        match witness {
            None => Self::pass(id, context, count),
            Some(w) => Self::fail(id, context, count, Witness::Element(w)),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// An observation that is reported but does not decide pass/fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub id: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub subject: String,
    pub entries: Vec<RelationCheck>,
    pub facts: Vec<Fact>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            entries: Vec::new(),
            facts: Vec::new(),
        }
    }

    pub fn push(&mut self, c: RelationCheck) {
        self.entries.push(c);
    }

    pub fn fact(&mut self, id: &str, holds: bool, detail: impl Into<String>) {
        self.facts.push(Fact {
            id: id.to_string(),
            holds,
            detail: detail.into(),
        });
    }

    /// Appends the entries and facts of `o`.
    pub fn extend(&mut self, o: VerificationReport) {
        self.entries.extend(o.entries);
        self.facts.extend(o.facts);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(RelationCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn entry(&self, id: &str) -> Option<&RelationCheck> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn fact_holds(&self, id: &str) -> Option<bool> {
        self.facts.iter().find(|f| f.id == id).map(|f| f.holds)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for e in &self.entries {
            writeln!(
                f,
                "  {} {:<24} {:<28} instances={}",
                e.status.as_str(),
                e.id,
                e.context,
                e.instances
            )?;
        }
        for x in &self.facts {
            writeln!(f, "  fact {} = {} ({})", x.id, x.holds, x.detail)?;
        }
        write!(
            f,
            "  {}",
            if self.passed() { "all checks pass" } else { "violations found" }
        )
    }
}

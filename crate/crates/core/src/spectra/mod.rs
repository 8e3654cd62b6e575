//! Spectra of the Lazar/Taylor constructions as weighted spaces, ranked by
//! two independent evaluators.
//!
//! [`rules`] applies closed-form rules node by node. [`profile`] expands the
//! constructions and ranks them definitionally. [`analyze`] runs both and
//! refuses to report a Pedersen value they disagree on.

use serde::Serialize;
use thiserror::Error;

use crate::ordinal::{ExtOrdinal, Ordinal, OrdinalError};
use crate::rank::{Gap, PointRank, RankProfile};
use crate::topology::TopologyError;

pub mod classify;
pub mod expr;
pub mod generate;
pub mod parse;
pub mod profile;
pub mod rules;
pub mod sections;
pub mod top;
pub mod truncate;

pub use classify::{classify, Classification};
pub use expr::{build_lazar, build_taylor, Atom, AtomSource, Degree, Family, SpectrumExpr, Stage};
pub use parse::parse_expr;
pub use profile::Oracle;
pub use rules::{FellOutcome, RuleEngine};
pub use truncate::{truncate, Origin, Truncation, MAX_TRUNCATION_POINTS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("malformed expression: {0}")]
    Malformed(String),
    #[error("unsupported parametric family: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("truncation needs {0} points, more than the limit of {MAX_TRUNCATION_POINTS}")]
    TooLarge(usize),
    #[error("truncation fuel {fuel} is too small: {reason}")]
    Degenerate { fuel: u64, reason: String },
    #[error("evaluators disagree: {0}")]
    Mismatch(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl SpectraError {
    /// Errors caused by the input rather than by a failed consistency check.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, SpectraError::Mismatch(_) | SpectraError::Internal(_))
    }
}

/// Pedersen-side result of one evaluator: the aggregate profile and the
/// ranks of the exposed points at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pedersen {
    pub profile: RankProfile,
    pub designated: Vec<(String, PointRank)>,
}

impl Pedersen {
    /// The supremum of point ranks, or the gap that prevents one.
    pub fn rank(&self) -> Result<ExtOrdinal, Gap> {
        self.profile.rank_sup().map_err(Clone::clone)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Rule,
    Oracle,
    Axiom,
}

/// Both evaluators' verdicts, checked for agreement.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub expr: SpectrumExpr,
    pub pedersen: Pedersen,
    pub fell: FellOutcome,
}

impl Analysis {
    pub fn pedersen_rank(&self) -> Result<ExtOrdinal, Gap> {
        self.pedersen.rank()
    }

    pub fn fell_rank(&self) -> Result<ExtOrdinal, Gap> {
        self.fell.value.clone()
    }

    /// The first gap met, if any.
    pub fn gap(&self) -> Option<Gap> {
        self.pedersen_rank().err().or_else(|| self.fell_rank().err())
    }
}

/// Ranks `e` by both evaluators and checks them against each other and the
/// bound `fell ≤ pedersen`.
pub fn analyze(e: &SpectrumExpr) -> Result<Analysis, SpectraError> {
    let mut rules = RuleEngine::new();
    let mut oracle = Oracle::new();
    analyze_with(e, &mut rules, &mut oracle)
}

pub fn analyze_with(e: &SpectrumExpr, rules: &mut RuleEngine, oracle: &mut Oracle) -> Result<Analysis, SpectraError> {
    let (a, fell) = rules.evaluate(e)?;
    let b = oracle.pedersen(e)?;
    if a != b {
        return Err(SpectraError::Mismatch(format!(
            "{e}: rules give {a:?}, oracle gives {b:?}"
        )));
    }
    if let (Ok(f), Ok(p)) = (&fell.value, a.rank()) {
        if *f > p {
            return Err(SpectraError::Internal(format!(
                "{e}: Fell rank {f} exceeds Pedersen rank {p}"
            )));
        }
    }
    Ok(Analysis {
        expr: e.clone(),
        pedersen: a,
        fell,
    })
}

/// The ordinal behind an extended ordinal, for predicates that need one.
pub(crate) fn finite_part(x: &ExtOrdinal) -> Option<&Ordinal> {
    x.as_ordinal()
}

//! Order and rank of weight functions.
//!
//! A point of finite weight has order 0 when its weight is bounded on some
//! neighborhood; otherwise its order is the least `α` such that some
//! neighborhood has all other orders below `α`, and its rank is `ω·α + w(x)`.
//! The rank is only certified when the ranks nearby are cofinal in `ω·α`;
//! points where that fails are reported as gaps and never given an ordinal.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::topology::WeightValue;

mod finite;
mod infinity;
mod seq;

pub use finite::{derivative_sets, point_rank, rank_all, space_rank, DerivativeSets};
pub use infinity::{infinity_order, ProfileFamily, TailDescription};
pub use seq::{Limit, NatSeq, OrdSeq};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankError {
    #[error("unsupported tail description: {0}")]
    UnsupportedTail(String),
    #[error("inconsistent profile: {0}")]
    InconsistentProfile(String),
    #[error("derivative set X_{stage} violates {property}")]
    DerivativeViolation { stage: usize, property: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapKind {
    /// Ranks near the point are not cofinal in `ω·order`.
    RankCofinality,
    /// Every neighborhood contains a point of infinite weight, so no order
    /// satisfies the first clause of the recursion.
    Unbounded,
    /// A neighborhood contains a gap point.
    Poisoned,
}

/// Why a point (or a region) has no certified rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Gap {
    pub kind: GapKind,
    /// `ω·order`, when the order is known.
    pub required: Option<Ordinal>,
    /// The rank strict-sup actually attained nearby.
    pub attained: Option<ExtOrdinal>,
}

impl Gap {
    pub fn unbounded() -> Self {
        Gap {
            kind: GapKind::Unbounded,
            required: None,
            attained: None,
        }
    }

    pub fn poisoned() -> Self {
        Gap {
            kind: GapKind::Poisoned,
            required: None,
            attained: None,
        }
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GapKind::RankCofinality => write!(
                f,
                "rank gap: nearby ranks have strict sup {} but w*order = {} is required",
                self.attained
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_else(|| "?".into()),
                self.required
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_else(|| "?".into()),
            ),
            GapKind::Unbounded => write!(
                f,
                "unbounded gap: every neighborhood meets a point of infinite weight or order"
            ),
            GapKind::Poisoned => write!(f, "a neighborhood contains a point without certified rank"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coherence {
    Coherent,
    /// Order 0 through bounded weight, but no neighborhood has `w ≤ w(x)`.
    WeightPeak,
    Infinite,
    Gap(Gap),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointRank {
    pub weight: WeightValue,
    /// The clause-1 order; `None` when no ordinal qualifies.
    pub order: Option<ExtOrdinal>,
    /// `ω·order + w(x)`; `None` for gap points.
    pub rank: Option<ExtOrdinal>,
    pub coherence: Coherence,
}

impl PointRank {
    pub fn infinite() -> Self {
        PointRank {
            weight: WeightValue::Infinite,
            order: Some(ExtOrdinal::Infinity),
            rank: Some(ExtOrdinal::Infinity),
            coherence: Coherence::Infinite,
        }
    }

    /// A certified point of the given order and finite weight.
    pub fn ranked(order: Ordinal, weight: u64, coherence: Coherence) -> Self {
        let rank = order.omega_times().add_nat(weight);
        PointRank {
            weight: WeightValue::Finite(weight),
            order: Some(order.into()),
            rank: Some(rank.into()),
            coherence,
        }
    }

    pub fn gap(weight: WeightValue, order: Option<ExtOrdinal>, gap: Gap) -> Self {
        PointRank {
            weight,
            order,
            rank: None,
            coherence: Coherence::Gap(gap),
        }
    }

    pub fn is_gap(&self) -> bool {
        matches!(self.coherence, Coherence::Gap(_))
    }

    pub fn gap_info(&self) -> Option<&Gap> {
        match &self.coherence {
            Coherence::Gap(g) => Some(g),
            _ => None,
        }
    }

    /// Same order, weight multiplied by `d` (matrix amplification).
    pub fn scaled(&self, d: u64) -> PointRank {
        let weight = self.weight.scale(d);
        let rank = match (&self.rank, &self.order, weight) {
            (Some(_), Some(ExtOrdinal::Finite(o)), WeightValue::Finite(k)) => {
                Some(ExtOrdinal::Finite(o.omega_times().add_nat(k)))
            }
            (Some(_), _, _) => Some(ExtOrdinal::Infinity),
            (None, _, _) => None,
        };
        PointRank {
            weight,
            order: self.order.clone(),
            rank,
            coherence: self.coherence.clone(),
        }
    }
}

/// Aggregate rank data for a region: `τ = sup(order + 1)`,
/// `σ = sup(rank + 1)` and `μ = sup w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    sups: Result<(ExtOrdinal, ExtOrdinal), Gap>,
    weight_sup: WeightValue,
    points: Option<Vec<PointRank>>,
}

impl RankProfile {
    pub fn empty() -> Self {
        RankProfile {
            sups: Ok((ExtOrdinal::zero(), ExtOrdinal::zero())),
            weight_sup: WeightValue::Finite(0),
            points: None,
        }
    }

    pub fn new(order_strict_sup: ExtOrdinal, rank_strict_sup: ExtOrdinal, weight_sup: WeightValue) -> Self {
        RankProfile {
            sups: Ok((order_strict_sup, rank_strict_sup)),
            weight_sup,
            points: None,
        }
    }

    pub fn gap(gap: Gap, weight_sup: WeightValue) -> Self {
        RankProfile {
            sups: Err(gap),
            weight_sup,
            points: None,
        }
    }

    /// Aggregates a table of point ranks; any gap point poisons the sups.
    pub fn from_points(points: Vec<PointRank>) -> Self {
        let weight_sup = points
            .iter()
            .map(|p| p.weight)
            .max()
            .unwrap_or(WeightValue::Finite(0));
        let sups = match points.iter().find_map(PointRank::gap_info) {
            Some(g) => Err(g.clone()),
            None => {
                let tau = points
                    .iter()
                    .filter_map(|p| p.order.as_ref().map(|o| o.add_nat(1)))
                    .max()
                    .unwrap_or_else(ExtOrdinal::zero);
                let sigma = points
                    .iter()
                    .filter_map(|p| p.rank.as_ref().map(|r| r.add_nat(1)))
                    .max()
                    .unwrap_or_else(ExtOrdinal::zero);
                Ok((tau, sigma))
            }
        };
        RankProfile {
            sups,
            weight_sup,
            points: Some(points),
        }
    }

    pub fn order_strict_sup(&self) -> Result<&ExtOrdinal, &Gap> {
        self.sups.as_ref().map(|(t, _)| t)
    }

    pub fn rank_strict_sup(&self) -> Result<&ExtOrdinal, &Gap> {
        self.sups.as_ref().map(|(_, s)| s)
    }

    /// `sup rank`: the predecessor of σ when σ is a successor, σ itself otherwise.
    pub fn rank_sup(&self) -> Result<ExtOrdinal, &Gap> {
        let sigma = self.rank_strict_sup()?;
        Ok(match sigma {
            ExtOrdinal::Finite(s) => ExtOrdinal::Finite(s.predecessor().unwrap_or_else(|| s.clone())),
            ExtOrdinal::Infinity => ExtOrdinal::Infinity,
        })
    }

    pub fn weight_sup(&self) -> WeightValue {
        self.weight_sup
    }

    pub fn points(&self) -> Option<&[PointRank]> {
        self.points.as_deref()
    }

    pub fn gap_info(&self) -> Option<&Gap> {
        self.sups.as_ref().err()
    }

    /// `σ ≤ ω·τ`.
    pub fn is_consistent(&self) -> bool {
        match &self.sups {
            Ok((tau, sigma)) => *sigma <= tau.omega_times(),
            Err(_) => true,
        }
    }
}

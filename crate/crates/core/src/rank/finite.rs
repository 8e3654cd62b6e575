use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::topology::{FiniteSpace, PointId, PointSet, Weight, WeightValue};

use super::{Coherence, Gap, GapKind, PointRank, RankError, RankProfile};

/// Ranks every point of a finite weighted space.
///
/// The minimal neighborhood `up(x)` is the smallest open set around `x`, so
/// both "there exists a neighborhood" and "for every neighborhood" are
/// decided on it alone. Points are visited from the top of the order down so
/// the orders of all points strictly above `x` are known when `x` is ranked.
pub fn rank_all(space: &FiniteSpace, w: &Weight) -> Vec<PointRank> {
    let mut visit: Vec<PointId> = space.points().collect();
    visit.sort_by_key(|&x| space.up_of(x).len());
    let mut out: Vec<Option<PointRank>> = vec![None; space.len()];
    for x in visit {
        let r = rank_one(space, w, x, &out);
        out[x] = Some(r);
    }
    out.into_iter().map(|r| r.expect("every point visited")).collect()
}

fn rank_one(space: &FiniteSpace, w: &Weight, x: PointId, known: &[Option<PointRank>]) -> PointRank {
    let wx = match w.at(x) {
        WeightValue::Infinite => return PointRank::infinite(),
        WeightValue::Finite(k) => k,
    };
    let nbhd = space.up_of(x);
    let bounded = nbhd.iter().all(|&y| w.at(y) != WeightValue::Infinite);
    if bounded {
        let coherence = if nbhd.iter().all(|&y| w.at(y) <= WeightValue::Finite(wx)) {
            Coherence::Coherent
        } else {
            Coherence::WeightPeak
        };
        return PointRank::ranked(Ordinal::zero(), wx, coherence);
    }

    // Clause 1: the least α exceeding every other order in the neighborhood.
    let others = nbhd.iter().filter(|&&y| y != x).map(|&y| {
        known[y]
            .as_ref()
            .expect("points above are ranked first")
    });
    let mut alpha = Ordinal::zero();
    let mut sigma = Ordinal::zero();
    for y in others {
        if let Some(g) = y.gap_info() {
            let kind = if g.kind == GapKind::Unbounded {
                Gap::unbounded()
            } else {
                Gap::poisoned()
            };
            return PointRank::gap(WeightValue::Finite(wx), None, kind);
        }
        match (&y.order, &y.rank) {
            (Some(ExtOrdinal::Finite(o)), Some(ExtOrdinal::Finite(r))) => {
                alpha = alpha.max(o.successor());
                sigma = sigma.max(r.successor());
            }
            _ => return PointRank::gap(WeightValue::Finite(wx), None, Gap::unbounded()),
        }
    }
    let alpha = alpha.max(Ordinal::one());

    // Clause 2: ranks in every neighborhood are cofinal in ω·α.
    let required = alpha.omega_times();
    if sigma == required {
        PointRank::ranked(alpha, wx, Coherence::Coherent)
    } else {
        PointRank::gap(
            WeightValue::Finite(wx),
            Some(alpha.into()),
            Gap {
                kind: GapKind::RankCofinality,
                required: Some(required),
                attained: Some(sigma.into()),
            },
        )
    }
}

pub fn point_rank(space: &FiniteSpace, w: &Weight, x: PointId) -> PointRank {
    rank_all(space, w).swap_remove(x)
}

/// `r(w)` over the whole space, with the per-point table.
pub fn space_rank(space: &FiniteSpace, w: &Weight) -> RankProfile {
    RankProfile::from_points(rank_all(space, w))
}

/// The sets `X_α = {x : o(x) ≤ α}` for every finite order `α` that occurs,
/// starting at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeSets {
    pub stages: Vec<(Ordinal, PointSet)>,
}

impl DerivativeSets {
    pub fn stage(&self, alpha: &Ordinal) -> Option<&PointSet> {
        self.stages.iter().find(|(a, _)| a == alpha).map(|(_, s)| s)
    }
}

/// Computes the derivative family and checks that each `X_α` is open and
/// that `cl(X_α) ⊆ X_{α+1}`.
pub fn derivative_sets(space: &FiniteSpace, w: &Weight) -> Result<DerivativeSets, RankError> {
    if space.is_empty() {
        return Ok(DerivativeSets { stages: Vec::new() });
    }
    let ranks = rank_all(space, w);
    let stage_at = |alpha: &Ordinal| {
        PointSet::from_ids(
            space.len(),
            space.points().filter(|&x| match &ranks[x].order {
                Some(ExtOrdinal::Finite(o)) => o <= alpha,
                _ => false,
            }),
        )
    };
    let mut alphas: Vec<Ordinal> = ranks
        .iter()
        .filter_map(|r| r.order.as_ref().and_then(ExtOrdinal::as_ordinal).cloned())
        .collect();
    alphas.push(Ordinal::zero());
    alphas.sort();
    alphas.dedup();
    let mut stages = Vec::with_capacity(alphas.len());
    for (i, alpha) in alphas.into_iter().enumerate() {
        let set = stage_at(&alpha);
        if !space.is_open(&set) {
            return Err(RankError::DerivativeViolation {
                stage: i,
                property: format!("openness of X_{alpha}"),
            });
        }
        let next = stage_at(&alpha.successor());
        if !space.closure(&set).is_subset(&next) {
            return Err(RankError::DerivativeViolation {
                stage: i,
                property: format!("cl(X_{alpha}) inside X_{}", alpha.successor()),
            });
        }
        stages.push((alpha, set));
    }
    Ok(DerivativeSets { stages })
}

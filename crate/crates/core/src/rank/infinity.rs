use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::topology::WeightValue;

use super::seq::{Limit, NatSeq, OrdSeq};
use super::{Coherence, Gap, GapKind, PointRank, RankError, RankProfile};

/// Closed-form summand profiles `n ↦ (τ_n, σ_n, μ_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProfileFamily {
    pub order_strict_sup: OrdSeq,
    pub rank_strict_sup: OrdSeq,
    pub weight_sup: NatSeq,
    /// Some summand contains a point without certified rank.
    pub gap: bool,
}

impl ProfileFamily {
    pub fn at(&self, n: u64) -> Result<RankProfile, RankError> {
        let mu = self.weight_sup.eval(n);
        if self.gap {
            return Ok(RankProfile::gap(Gap::poisoned(), mu));
        }
        Ok(RankProfile::new(
            self.order_strict_sup.eval(n)?,
            self.rank_strict_sup.eval(n)?,
            mu,
        ))
    }

    /// Supremum over all summands.
    pub fn sup(&self) -> Result<RankProfile, RankError> {
        let mu = match self.weight_sup.limit() {
            Limit::Const(ExtOrdinal::Finite(k)) => WeightValue::Finite(k.as_nat().expect("finite")),
            _ => WeightValue::Infinite,
        };
        if self.gap {
            return Ok(RankProfile::gap(Gap::poisoned(), mu));
        }
        Ok(RankProfile::new(
            self.order_strict_sup.limit()?.value(),
            self.rank_strict_sup.limit()?.value(),
            mu,
        ))
    }
}

/// What a neighborhood of an adjoined point at infinity sees: finitely many
/// explicit summand profiles, then closed-form families. Neighborhoods of the
/// point contain all but finitely many whole summands, so only the families'
/// eventual behavior matters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TailDescription {
    pub explicit: Vec<RankProfile>,
    pub families: Vec<ProfileFamily>,
}

impl TailDescription {
    pub fn bounded() -> Self {
        TailDescription::default()
    }

    pub fn family(f: ProfileFamily) -> Self {
        TailDescription {
            explicit: Vec::new(),
            families: vec![f],
        }
    }
}

/// Ranks a point at infinity of weight `w_inf` from the profiles of the
/// summands it accumulates on.
///
/// Order 0 iff the weights are bounded on some tail. Otherwise the order is
/// the least `α` with `τ_n ≤ α` on a tail, and the point is coherent iff the
/// tail lim sup of `σ_n` equals `ω·α`.
pub fn infinity_order(tail: &TailDescription, w_inf: u64) -> Result<PointRank, RankError> {
    let weight = WeightValue::Finite(w_inf);
    if tail.families.iter().any(|f| f.gap) {
        return Ok(PointRank::gap(weight, None, Gap::poisoned()));
    }
    for f in &tail.families {
        for n in 1..=3 {
            let p = f.at(n)?;
            if !p.is_consistent() {
                return Err(RankError::InconsistentProfile(format!(
                    "summand {n}: sigma exceeds w*tau"
                )));
            }
        }
    }

    let mut mu_limit: Option<ExtOrdinal> = Some(ExtOrdinal::zero());
    for f in &tail.families {
        mu_limit = match (mu_limit, f.weight_sup.limit()) {
            (Some(m), Limit::Const(c @ ExtOrdinal::Finite(_))) => Some(m.max(c)),
            _ => None,
        };
    }
    if let Some(mu) = mu_limit {
        let coherence = if mu <= ExtOrdinal::Finite(w_inf.into()) {
            Coherence::Coherent
        } else {
            Coherence::WeightPeak
        };
        return Ok(PointRank::ranked(Ordinal::zero(), w_inf, coherence));
    }

    // Clause 1.
    let mut tau = ExtOrdinal::Finite(Ordinal::one());
    for f in &tail.families {
        tau = tau.max(f.order_strict_sup.limit()?.value());
    }
    let order = match tau {
        ExtOrdinal::Finite(o) => o,
        ExtOrdinal::Infinity => return Ok(PointRank::gap(weight, None, Gap::unbounded())),
    };

    // Clause 2.
    let mut sigma = ExtOrdinal::zero();
    for f in &tail.families {
        sigma = sigma.max(f.rank_strict_sup.limit()?.value());
    }
    let required = order.omega_times();
    match sigma.as_ordinal() {
        Some(s) if *s == required => Ok(PointRank::ranked(order, w_inf, Coherence::Coherent)),
        Some(s) if *s < required => Ok(PointRank::gap(
            weight,
            Some(order.into()),
            Gap {
                kind: GapKind::RankCofinality,
                required: Some(required),
                attained: Some(sigma),
            },
        )),
        _ => Err(RankError::InconsistentProfile(format!(
            "tail rank sup {sigma} exceeds w*order = {required}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn rank(p: &PointRank) -> Ordinal {
        p.rank.as_ref().and_then(ExtOrdinal::as_ordinal).cloned().unwrap()
    }

    #[test]
    fn lazar_base_tail() {
        // Summands modeling M_n: one point of weight n each.
        let f = ProfileFamily {
            order_strict_sup: OrdSeq::constant(Ordinal::one()),
            rank_strict_sup: OrdSeq::Nat(NatSeq::affine(1, 1)),
            weight_sup: NatSeq::affine(1, 0),
            gap: false,
        };
        let r = infinity_order(&TailDescription::family(f), 1).unwrap();
        assert_eq!(r.order, Some(Ordinal::one().into()));
        assert_eq!(rank(&r), o("w+1"));
        assert_eq!(r.coherence, Coherence::Coherent);
    }

    #[test]
    fn bounded_tail_is_order_zero() {
        let f = ProfileFamily {
            order_strict_sup: OrdSeq::constant(Ordinal::one()),
            rank_strict_sup: OrdSeq::constant(o("6")),
            weight_sup: NatSeq::constant(5),
            gap: false,
        };
        let r = infinity_order(&TailDescription::family(f), 2).unwrap();
        assert_eq!(r.order, Some(ExtOrdinal::zero()));
        assert_eq!(rank(&r), o("2"));
        assert_eq!(r.coherence, Coherence::WeightPeak);
        let r = infinity_order(&TailDescription::bounded(), 2).unwrap();
        assert_eq!(rank(&r), o("2"));
    }

    #[test]
    fn successor_tail() {
        for beta in ["1", "3", "w", "w^2+w*2"] {
            let beta = o(beta);
            let f = ProfileFamily {
                order_strict_sup: OrdSeq::constant(beta.successor()),
                rank_strict_sup: OrdSeq::constant(beta.omega_times()).plus_nat(NatSeq::affine(1, 1)),
                weight_sup: NatSeq::Infinite,
                gap: false,
            };
            let r = infinity_order(&TailDescription::family(f), 3).unwrap();
            assert_eq!(r.order, Some(beta.successor().into()));
            assert_eq!(rank(&r), beta.successor().omega_times().add_nat(3));
        }
    }

    #[test]
    fn incoherent_tail_reports_gap() {
        // Orders reach 2 but ranks only ω + 2.
        let f = ProfileFamily {
            order_strict_sup: OrdSeq::constant(o("2")),
            rank_strict_sup: OrdSeq::constant(o("w+2")),
            weight_sup: NatSeq::Infinite,
            gap: false,
        };
        let r = infinity_order(&TailDescription::family(f), 1).unwrap();
        let g = r.gap_info().unwrap();
        assert_eq!(g.kind, GapKind::RankCofinality);
        assert_eq!(g.required, Some(o("w*2")));
        assert_eq!(r.order, Some(o("2").into()));
        assert!(r.rank.is_none());
    }

    #[test]
    fn limit_tail() {
        let f = ProfileFamily {
            order_strict_sup: OrdSeq::Fundamental(o("w")).plus_nat(NatSeq::constant(1)),
            rank_strict_sup: OrdSeq::Fundamental(o("w"))
                .plus_nat(NatSeq::constant(1))
                .omega_times(),
            weight_sup: NatSeq::Infinite,
            gap: false,
        };
        let r = infinity_order(&TailDescription::family(f), 1).unwrap();
        assert_eq!(rank(&r), o("w^2+1"));
    }
}

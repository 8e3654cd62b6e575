//! The "top" of a region: where its rank supremum comes from.
//!
//! `(τ, σ)` with `σ ≤ ω·τ` determines and is determined by one of: no points,
//! a top order `o` attained with largest weight `k` there (`σ = ω·o + k + 1`)
//! or with unbounded weight there (`σ = ω·(o+1)`), orders increasing to a
//! limit `λ` (`σ = ω·λ`), or a point of infinite weight. Scaling every weight
//! by `d` acts on this form directly.

use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::rank::{NatSeq, OrdSeq, RankError, RankProfile};
use crate::topology::WeightValue;

use super::SpectraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Top {
    Empty,
    Attained { order: Ordinal, weight: Option<u64> },
    Limit(Ordinal),
    Infinite,
}

/// `σ = ω·o + k` with `k` finite, as `(o, k)` when `σ` has that form for
/// some `o`; the decomposition takes the largest `ω·o` below `σ`.
fn split_finite(s: &Ordinal) -> (Ordinal, u64) {
    let terms = s.terms();
    match terms.last() {
        Some(t) if t.exponent().is_zero() => {
            let rest: Vec<(Ordinal, u64)> = terms[..terms.len() - 1]
                .iter()
                .map(|t| (t.exponent().clone(), t.coefficient()))
                .collect();
            (Ordinal::from_terms(rest).expect("prefix of a normal form"), t.coefficient())
        }
        _ => (s.clone(), 0),
    }
}

/// `x` with `ω·x = y`, when `y` is a multiple of ω.
fn omega_divide(y: &Ordinal) -> Option<Ordinal> {
    let mut terms = Vec::new();
    for t in y.terms() {
        let e = t.exponent();
        if e.is_zero() {
            return None;
        }
        // ω·ω^f = ω^(1+f); invert 1 + f = e.
        let f = if e.is_finite() {
            Ordinal::nat(e.as_nat().expect("finite") - 1)
        } else {
            e.clone()
        };
        terms.push((f, t.coefficient()));
    }
    Some(Ordinal::from_terms(terms).expect("exponents stay decreasing"))
}

impl Top {
    pub fn point(order: Ordinal, weight: u64) -> Top {
        Top::Attained {
            order,
            weight: Some(weight),
        }
    }

    /// Reads the top off `(τ, σ)`.
    pub fn from_sups(tau: &ExtOrdinal, sigma: &ExtOrdinal) -> Result<Top, SpectraError> {
        let bad = || SpectraError::Internal(format!("inconsistent sups tau = {tau}, sigma = {sigma}"));
        let (tau, sigma) = match (tau, sigma) {
            (ExtOrdinal::Infinity, _) | (_, ExtOrdinal::Infinity) => return Ok(Top::Infinite),
            (ExtOrdinal::Finite(t), ExtOrdinal::Finite(s)) => (t, s),
        };
        if tau.is_zero() {
            return if sigma.is_zero() { Ok(Top::Empty) } else { Err(bad()) };
        }
        match tau.predecessor() {
            None => {
                if *sigma == tau.omega_times() {
                    Ok(Top::Limit(tau.clone()))
                } else {
                    Err(bad())
                }
            }
            Some(o) => {
                if *sigma == tau.omega_times() {
                    return Ok(Top::Attained { order: o, weight: None });
                }
                let (head, k) = split_finite(sigma);
                if k == 0 || omega_divide(&head).as_ref() != Some(&o) {
                    return Err(bad());
                }
                Ok(Top::point(o, k - 1))
            }
        }
    }

    pub fn order_strict_sup(&self) -> ExtOrdinal {
        match self {
            Top::Empty => ExtOrdinal::zero(),
            Top::Attained { order, .. } => order.successor().into(),
            Top::Limit(l) => l.clone().into(),
            Top::Infinite => ExtOrdinal::Infinity,
        }
    }

    pub fn rank_strict_sup(&self) -> ExtOrdinal {
        match self {
            Top::Empty => ExtOrdinal::zero(),
            Top::Attained { order, weight: Some(k) } => order.omega_times().add_nat(k + 1).into(),
            Top::Attained { order, weight: None } => order.successor().omega_times().into(),
            Top::Limit(l) => l.omega_times().into(),
            Top::Infinite => ExtOrdinal::Infinity,
        }
    }

    /// The largest value when attained, the supremum otherwise.
    pub fn value(&self) -> ExtOrdinal {
        match self {
            Top::Attained { order, weight: Some(k) } => order.omega_times().add_nat(*k).into(),
            other => other.rank_strict_sup(),
        }
    }

    pub fn scaled(&self, d: u64) -> Top {
        match self {
            Top::Attained { order, weight } => Top::Attained {
                order: order.clone(),
                weight: weight.map(|k| k * d),
            },
            other => other.clone(),
        }
    }

    /// The top of a union.
    pub fn join(&self, other: &Top) -> Top {
        if self.rank_strict_sup() >= other.rank_strict_sup() {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn profile(&self, weight_sup: WeightValue) -> RankProfile {
        RankProfile::new(self.order_strict_sup(), self.rank_strict_sup(), weight_sup)
    }

    pub fn from_profile(p: &RankProfile) -> Result<Option<Top>, SpectraError> {
        match (p.order_strict_sup(), p.rank_strict_sup()) {
            (Ok(t), Ok(s)) => Top::from_sups(t, s).map(Some),
            _ => Ok(None),
        }
    }
}

/// A top depending on the family index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TopSeq {
    Const(Top),
    /// Order `o_n` attained with weight `k_n` (unbounded when `None`).
    Attained { order: OrdSeq, weight: Option<NatSeq> },
}

impl TopSeq {
    pub fn order_strict_sup(&self) -> OrdSeq {
        match self {
            TopSeq::Const(t) => OrdSeq::constant(t.order_strict_sup()),
            TopSeq::Attained { order, .. } => order.clone().plus_nat(NatSeq::constant(1)),
        }
    }

    pub fn rank_strict_sup(&self) -> OrdSeq {
        match self {
            TopSeq::Const(t) => OrdSeq::constant(t.rank_strict_sup()),
            TopSeq::Attained { order, weight: Some(k) } => order
                .clone()
                .omega_times()
                .plus_nat(k.add(&NatSeq::constant(1))),
            TopSeq::Attained { order, weight: None } => {
                order.clone().plus_nat(NatSeq::constant(1)).omega_times()
            }
        }
    }

    pub fn scaled(&self, d: &NatSeq) -> TopSeq {
        match self {
            TopSeq::Const(Top::Attained { order, weight }) if d.as_constant().is_none() => {
                TopSeq::Attained {
                    order: OrdSeq::constant(order.clone()),
                    weight: weight.map(|k| NatSeq::constant(k).mul(d)),
                }
            }
            TopSeq::Const(t) => match d.as_constant() {
                Some(WeightValue::Finite(c)) => TopSeq::Const(t.scaled(c)),
                _ => TopSeq::Const(t.clone()),
            },
            TopSeq::Attained { order, weight } => TopSeq::Attained {
                order: order.clone(),
                weight: weight.as_ref().map(|k| k.mul(d)),
            },
        }
    }

    pub fn at(&self, n: u64) -> Result<Top, SpectraError> {
        Top::from_sups(
            &self.order_strict_sup().eval(n)?,
            &self.rank_strict_sup().eval(n)?,
        )
    }

    /// The top of the union over all `n`.
    pub fn sup(&self) -> Result<Top, SpectraError> {
        Top::from_sups(
            &self.order_strict_sup().limit()?.value(),
            &self.rank_strict_sup().limit()?.value(),
        )
    }

    /// Joins with a constant top, provided one side wins for every `n ≥ 1`.
    pub fn join_const(&self, c: &Top) -> Result<TopSeq, SpectraError> {
        if let TopSeq::Const(t) = self {
            return Ok(TopSeq::Const(t.join(c)));
        }
        let first = self.rank_strict_sup().eval(1)?;
        let last = self.rank_strict_sup().limit()?.value();
        let cs = c.rank_strict_sup();
        if first >= cs {
            Ok(self.clone())
        } else if cs >= last {
            Ok(TopSeq::Const(c.clone()))
        } else {
            Err(SpectraError::Unsupported(format!(
                "c0sum inside a family: summand with rank strict-sup {cs} overtakes the index-dependent one only for some n"
            )))
        }
    }
}

impl From<RankError> for SpectraError {
    fn from(e: RankError) -> Self {
        match e {
            RankError::UnsupportedTail(m) => SpectraError::Unsupported(m),
            other => SpectraError::Internal(other.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn e(s: &str) -> ExtOrdinal {
        o(s).into()
    }

    #[test]
    fn decomposition_round_trips() {
        let tops = [
            Top::Empty,
            Top::point(Ordinal::zero(), 3),
            Top::point(o("w+2"), 1),
            Top::Attained { order: o("w^2"), weight: None },
            Top::Attained { order: Ordinal::zero(), weight: None },
            Top::Limit(o("w^w")),
            Top::Infinite,
        ];
        for t in tops {
            let back = Top::from_sups(&t.order_strict_sup(), &t.rank_strict_sup()).unwrap();
            assert_eq!(back, t);
        }
        assert!(Top::from_sups(&e("2"), &e("w*3")).is_err());
        assert!(Top::from_sups(&e("w"), &e("w*2")).is_err());
    }

    #[test]
    fn scaling_and_join() {
        let t = Top::point(o("w"), 1).scaled(3);
        assert_eq!(t.value(), e("w^2+3"));
        let j = Top::point(o("2"), 5).join(&Top::point(o("w"), 1));
        assert_eq!(j, Top::point(o("w"), 1));
    }

    #[test]
    fn symbolic_tops() {
        let s = TopSeq::Const(Top::point(o("1"), 1)).scaled(&NatSeq::affine(1, 0));
        assert_eq!(s.at(4).unwrap(), Top::point(o("1"), 4));
        assert_eq!(s.sup().unwrap(), Top::Attained { order: o("1"), weight: None });
        let f = TopSeq::Attained {
            order: OrdSeq::Fundamental(o("w")),
            weight: Some(NatSeq::affine(1, 0)),
        };
        assert_eq!(f.sup().unwrap(), Top::Limit(o("w")));
        assert!(f.join_const(&Top::point(o("3"), 1)).is_err());
        assert_eq!(f.join_const(&Top::point(Ordinal::zero(), 1)).unwrap(), f);
        assert_eq!(
            f.join_const(&Top::point(o("w"), 1)).unwrap(),
            TopSeq::Const(Top::point(o("w"), 1))
        );
    }
}

#![allow(dead_code)]

use proptest::prelude::*;
use specrank::ordinal::{ExtOrdinal, Ordinal};
use specrank::topology::{check_weight, FiniteSpace, Weight, WeightValue};

/// Ordinals below ω^ω^ω with small coefficients.
pub fn ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..6).prop_map(Ordinal::nat);
    leaf.prop_recursive(2, 12, 3, |inner| {
        prop::collection::vec((inner, 1u64..4), 1..4).prop_map(|mut terms| {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            terms.dedup_by(|a, b| a.0 == b.0);
            Ordinal::from_terms(terms).expect("sorted and deduplicated")
        })
    })
}

pub fn ext_ordinal() -> impl Strategy<Value = ExtOrdinal> {
    prop_oneof![
        9 => ordinal().prop_map(ExtOrdinal::Finite),
        1 => Just(ExtOrdinal::Infinity),
    ]
}

/// A finite T0 space given by index-increasing relations, with a raw weight
/// per point in `1..=max_weight` and an "infinite" flag per point.
#[derive(Clone, Debug)]
pub struct WeightedSpec {
    pub n: usize,
    pub pairs: Vec<bool>,
    pub raw: Vec<u64>,
    pub infinite: Vec<bool>,
}

pub fn weighted(max_points: usize, max_weight: u64, infinite: bool) -> impl Strategy<Value = WeightedSpec> {
    (1..=max_points).prop_flat_map(move |n| {
        (
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            prop::collection::vec(1..=max_weight, n),
            prop::collection::vec(prop::bool::weighted(if infinite { 0.2 } else { 0.0 }), n),
        )
            .prop_map(move |(pairs, raw, infinite)| WeightedSpec { n, pairs, raw, infinite })
    })
}

impl WeightedSpec {
    pub fn space(&self) -> FiniteSpace {
        let all = (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j)));
        let chosen = all.zip(&self.pairs).filter(|(_, &b)| b).map(|(p, _)| p);
        let names: Vec<String> = (0..self.n).map(|i| format!("p{i}")).collect();
        FiniteSpace::from_relation(names, chosen).expect("acyclic").0
    }

    /// Made monotone by taking the max over everything below; an infinite
    /// point pushes ∞ up its cone.
    pub fn build(&self) -> (FiniteSpace, Weight) {
        let s = self.space();
        let mut v: Vec<WeightValue> = self
            .raw
            .iter()
            .zip(&self.infinite)
            .map(|(&k, &inf)| if inf { WeightValue::Infinite } else { WeightValue::Finite(k) })
            .collect();
        for y in s.points() {
            for &x in s.down_of(y) {
                v[y] = v[y].max(v[x]);
            }
        }
        let w = check_weight(&s, v).expect("monotone");
        (s, w)
    }
}

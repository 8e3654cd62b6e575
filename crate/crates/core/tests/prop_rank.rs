mod common;

use common::weighted;
use proptest::prelude::*;
use specrank::ordinal::{ExtOrdinal, Ordinal};
use specrank::rank::{rank_all, space_rank, GapKind};
use specrank::topology::{PointSet, WeightValue};

proptest! {
    #[test]
    fn finite_points_rank_by_weight(spec in weighted(6, 6, true)) {
        let (s, w) = spec.build();
        let ranks = rank_all(&s, &w);
        for x in s.points() {
            let unbounded_above = s.up_of(x).iter().any(|&y| w.at(y) == WeightValue::Infinite);
            match w.at(x) {
                WeightValue::Finite(_) if unbounded_above => {
                    prop_assert_eq!(ranks[x].gap_info().map(|g| g.kind.clone()), Some(GapKind::Unbounded));
                }
                WeightValue::Finite(k) => {
                    prop_assert_eq!(ranks[x].order.clone(), Some(ExtOrdinal::zero()));
                    prop_assert_eq!(ranks[x].rank.clone(), Some(Ordinal::nat(k).into()));
                }
                WeightValue::Infinite => prop_assert_eq!(ranks[x].rank.clone(), Some(ExtOrdinal::Infinity)),
            }
        }
    }

    #[test]
    fn open_and_dense_restrictions_keep_ranks(spec in weighted(5, 4, true), mask in 1u64..32) {
        let (s, w) = spec.build();
        let a = PointSet::from_mask(s.len(), mask & ((1 << s.len()) - 1));
        prop_assume!(!a.is_empty() && (s.is_open(&a) || s.is_dense(&a)));
        let full = rank_all(&s, &w);
        let (sub, keep) = s.subspace(&a);
        let wr = w.restrict(&keep);
        let ranks = rank_all(&sub, &wr);
        for (j, &p) in keep.iter().enumerate() {
            prop_assert_eq!(&ranks[j], &full[p]);
        }
        // The space rank, when it exists, is seen by any dense subspace.
        let whole = space_rank(&s, &w);
        if s.is_dense(&a) && whole.rank_sup().is_ok() {
            let part = space_rank(&sub, &wr);
            prop_assert_eq!(part.rank_sup(), whole.rank_sup());
        }
    }

    #[test]
    fn tensoring_scales_weight_and_keeps_order(spec in weighted(5, 4, true), d in 1u64..5) {
        let (s, w) = spec.build();
        let base = rank_all(&s, &w);
        let scaled = rank_all(&s, &w.scaled(d));
        for x in s.points() {
            prop_assert_eq!(&scaled[x], &base[x].scaled(d));
            prop_assert_eq!(&scaled[x].order, &base[x].order);
        }
    }

    #[test]
    fn heavier_weights_rank_higher(spec in weighted(5, 4, false), bump in 0u64..3) {
        let (s, w) = spec.build();
        let heavier = specrank::topology::check_weight(
            &s,
            w.values().iter().map(|v| match v {
                WeightValue::Finite(k) => WeightValue::Finite(k + bump),
                inf => *inf,
            }).collect(),
        ).unwrap();
        let a = rank_all(&s, &w);
        let b = rank_all(&s, &heavier);
        for x in s.points() {
            prop_assert!(a[x].rank <= b[x].rank);
        }
    }
}

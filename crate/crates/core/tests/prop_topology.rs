mod common;

use common::weighted;
use proptest::prelude::*;
use specrank::topology::PointSet;

proptest! {
    #[test]
    fn open_sets_are_up_sets(spec in weighted(6, 1, false), mask in any::<u64>()) {
        let s = spec.space();
        let a = PointSet::from_mask(s.len(), mask & ((1 << s.len()) - 1));
        let up = s.up_closure(&a);
        prop_assert!(s.is_open(&up));
        prop_assert_eq!(s.is_open(&a), up == a);
        prop_assert!(a.is_subset(&up));
    }

    #[test]
    fn closure_is_a_kuratowski_operator(spec in weighted(6, 1, false), m1 in any::<u64>(), m2 in any::<u64>()) {
        let s = spec.space();
        let full = (1u64 << s.len()) - 1;
        let a = PointSet::from_mask(s.len(), m1 & full);
        let b = PointSet::from_mask(s.len(), m2 & full);
        let ca = s.closure(&a);
        prop_assert!(a.is_subset(&ca));
        prop_assert_eq!(s.closure(&ca), ca.clone());
        prop_assert!(s.is_closed(&ca));
        let mut ab = a.clone();
        ab.union_with(&b);
        let mut cab = ca.clone();
        cab.union_with(&s.closure(&b));
        prop_assert_eq!(s.closure(&ab), cab);
        prop_assert!(s.closure(&PointSet::empty(s.len())).is_empty());
    }

    #[test]
    fn complements_swap_open_and_closed(spec in weighted(6, 1, false), mask in any::<u64>()) {
        let s = spec.space();
        let a = PointSet::from_mask(s.len(), mask & ((1 << s.len()) - 1));
        prop_assert_eq!(s.is_open(&a), s.is_closed(&a.complement()));
    }

    #[test]
    fn minimal_neighborhoods(spec in weighted(6, 1, false)) {
        let s = spec.space();
        let opens = s.open_sets();
        for x in s.points() {
            let u = s.minimal_neighborhood(x);
            prop_assert!(s.is_open(&u) && u.contains(x));
            for v in opens.iter().filter(|v| v.contains(x)) {
                prop_assert!(u.is_subset(v));
            }
        }
    }

    #[test]
    fn t0_points_have_distinct_closures(spec in weighted(6, 1, false)) {
        let s = spec.space();
        for x in s.points() {
            for y in s.points().filter(|&y| y != x) {
                prop_assert_ne!(s.closure_of_point(x), s.closure_of_point(y));
            }
        }
    }

    #[test]
    fn open_set_count_matches_enumeration(spec in weighted(5, 1, false)) {
        let s = spec.space();
        let brute = (0u64..1 << s.len())
            .filter(|&m| s.is_open(&PointSet::from_mask(s.len(), m)))
            .count();
        prop_assert_eq!(s.open_sets().len(), brute);
    }
}

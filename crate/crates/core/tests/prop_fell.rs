mod common;

use common::weighted;
use proptest::prelude::*;
use specrank::fell::{
    fell_compactification, is_fell_continuous, is_fell_convergent, limits_and_accumulation, separate, SequenceClass,
};
use specrank::topology::{PointSet, SpaceMap};

proptest! {
    #[test]
    fn limits_sit_inside_accumulation(spec in weighted(6, 1, false), mask in 1u64..64) {
        let s = spec.space();
        let v = PointSet::from_mask(s.len(), mask & ((1 << s.len()) - 1));
        prop_assume!(!v.is_empty());
        let q = SequenceClass::new(&s, v).unwrap();
        let (l, a) = limits_and_accumulation(&q);
        prop_assert!(l.is_subset(&a));
        prop_assert!(s.is_closed(&l) && s.is_closed(&a));
        prop_assert_eq!(is_fell_convergent(&q).is_some(), l == a);
    }

    #[test]
    fn constant_sequences_converge_to_the_point_closure(spec in weighted(6, 1, false)) {
        let s = spec.space();
        for x in s.points() {
            let q = SequenceClass::constant(&s, x);
            prop_assert_eq!(is_fell_convergent(&q), Some(s.closure_of_point(x)));
        }
    }

    #[test]
    fn every_class_has_a_convergent_subclass(spec in weighted(5, 1, false), mask in 1u64..32) {
        // Some single point visited infinitely often gives a convergent subsequence.
        let s = spec.space();
        let v = PointSet::from_mask(s.len(), mask & ((1 << s.len()) - 1));
        prop_assume!(!v.is_empty());
        let found = v.iter().any(|x| is_fell_convergent(&SequenceClass::constant(&s, x)).is_some());
        prop_assert!(found);
    }

    #[test]
    fn compactification_is_point_closures(spec in weighted(5, 1, false)) {
        let s = spec.space();
        let phi = fell_compactification(&s).unwrap();
        prop_assert_eq!(phi.len(), s.len());
        for x in s.points() {
            prop_assert!(phi.contains(&s.closure_of_point(x)));
        }
        let m = phi.members();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                prop_assert!(matches!(separate(&s, &m[i], &m[j]), Ok(Some(_))));
            }
        }
    }

    #[test]
    fn fell_continuity_is_continuity(a in weighted(4, 1, false), b in weighted(4, 1, false), pick in any::<u64>()) {
        let (x, y) = (a.space(), b.space());
        let maps = SpaceMap::all(&x, &y);
        let f = &maps[(pick % maps.len() as u64) as usize];
        prop_assert_eq!(is_fell_continuous(f).unwrap().holds, f.is_continuous());
    }
}

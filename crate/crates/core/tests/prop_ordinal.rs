mod common;

use common::{ext_ordinal, ordinal};
use proptest::prelude::*;
use specrank::ordinal::{ExtOrdinal, Ordinal};

proptest! {
    #[test]
    fn display_parses_back(a in ordinal()) {
        let shown = a.to_string();
        prop_assert_eq!(shown.parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn ext_display_parses_back(a in ext_ordinal()) {
        prop_assert_eq!(a.to_string().parse::<ExtOrdinal>().unwrap(), a);
    }

    #[test]
    fn addition_is_associative(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn zero_is_neutral(a in ordinal()) {
        prop_assert_eq!(a.add(&Ordinal::zero()), a.clone());
        prop_assert_eq!(Ordinal::zero().add(&a), a);
    }

    #[test]
    fn sums_dominate_summands(a in ordinal(), b in ordinal()) {
        let s = a.add(&b);
        prop_assert!(a <= s);
        prop_assert!(b <= s);
    }

    #[test]
    fn right_addition_is_strictly_monotone(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assume!(b != c);
        let (lo, hi) = if b < c { (b, c) } else { (c, b) };
        prop_assert!(a.add(&lo) < a.add(&hi));
    }

    #[test]
    fn left_addition_is_weakly_monotone(a in ordinal(), b in ordinal(), c in ordinal()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(lo.add(&c) <= hi.add(&c));
    }

    #[test]
    fn omega_distributes_on_the_left(a in ordinal(), b in ordinal()) {
        prop_assert_eq!(a.add(&b).omega_times(), a.omega_times().add(&b.omega_times()));
    }

    #[test]
    fn omega_times_is_a_limit(a in ordinal()) {
        prop_assume!(!a.is_zero());
        prop_assert!(a.omega_times().is_limit());
        prop_assert!(a < a.omega_times() || !a.is_finite() && a <= a.omega_times());
    }

    #[test]
    fn exactly_one_kind(a in ordinal()) {
        let kinds = [a.is_zero(), a.is_successor(), a.is_limit()];
        prop_assert_eq!(kinds.iter().filter(|&&k| k).count(), 1);
    }

    #[test]
    fn successor_and_predecessor(a in ordinal()) {
        let s = a.successor();
        prop_assert!(a < s);
        prop_assert_eq!(s.predecessor(), Some(a));
    }

    #[test]
    fn one_plus_absorbs_for_infinite(a in ordinal()) {
        if a.is_finite() {
            prop_assert_eq!(a.one_plus(), a.successor());
        } else {
            prop_assert_eq!(a.one_plus(), a);
        }
    }

    #[test]
    fn fundamental_sequences_increase_to_the_limit(a in ordinal(), n in 0u64..8) {
        prop_assume!(a.is_limit());
        let x = a.canonical_term(n).unwrap();
        let y = a.canonical_term(n + 1).unwrap();
        prop_assert!(x < y && y < a);
        let s = a.fundamental_successor(n).unwrap();
        prop_assert!(s.is_successor() && s < a);
    }

    #[test]
    fn infinity_absorbs(a in ext_ordinal()) {
        prop_assert_eq!(a.add(&ExtOrdinal::Infinity), ExtOrdinal::Infinity);
        prop_assert_eq!(ExtOrdinal::Infinity.add(&a), ExtOrdinal::Infinity);
        prop_assert!(a <= ExtOrdinal::Infinity);
    }

    #[test]
    fn order_is_total(a in ordinal(), b in ordinal()) {
        prop_assert_eq!(a <= b && b <= a, a == b);
        prop_assert!(a <= b || b <= a);
    }
}

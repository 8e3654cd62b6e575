mod common;

use common::weighted;
use proptest::prelude::*;
use specrank::ordinal::{ExtOrdinal, Ordinal};
use specrank::spectra::generate::{random_expr, rng};
use specrank::spectra::sections::{global_subweight_rank, local_section_rank};
use specrank::spectra::{analyze, build_lazar, build_taylor, classify, parse_expr, SpectrumExpr};

fn successor_stage() -> impl Strategy<Value = Ordinal> {
    prop_oneof![
        (1u64..6).prop_map(Ordinal::nat),
        (1u64..3, 1u64..3).prop_map(|(c, k)| Ordinal::monomial(Ordinal::one(), c).add_nat(k)),
        (1u64..3).prop_map(|k| Ordinal::monomial(Ordinal::nat(2), 1).add_nat(k)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_expressions_parse_back(seed in any::<u64>()) {
        let e = random_expr(&mut rng(seed), 3);
        prop_assert_eq!(parse_expr(&e.to_string(), false).unwrap(), e);
    }

    #[test]
    fn fell_never_exceeds_pedersen(seed in any::<u64>()) {
        let e = random_expr(&mut rng(seed), 3);
        let a = analyze(&e).unwrap();
        if let (Ok(f), Ok(p)) = (a.fell_rank(), a.pedersen_rank()) {
            prop_assert!(f <= p, "{}: fell {} pedersen {}", e, f, p);
        }
    }

    #[test]
    fn tensoring_keeps_the_order(seed in any::<u64>(), d in 2u64..5) {
        let e = random_expr(&mut rng(seed), 2);
        let base = analyze(&e).unwrap();
        let t = analyze(&SpectrumExpr::tensor(e, d)).unwrap();
        prop_assert_eq!(
            base.pedersen.profile.order_strict_sup().ok(),
            t.pedersen.profile.order_strict_sup().ok()
        );
        if let (Ok(a), Ok(b)) = (base.pedersen_rank(), t.pedersen_rank()) {
            prop_assert!(a <= b);
        }
    }

    #[test]
    fn classification_is_monotone_in_beta(seed in any::<u64>(), b1 in common::ordinal(), b2 in common::ordinal()) {
        let e = random_expr(&mut rng(seed), 2);
        let (lo, hi) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
        let (c_lo, c_hi) = (classify(&e, &lo).unwrap(), classify(&e, &hi).unwrap());
        if let (Ok(a), Ok(b)) = (c_lo.is_subhomogeneous(), c_hi.is_subhomogeneous()) {
            prop_assert!(!a || b);
        }
        if let (Ok(a), Ok(b)) = (c_lo.is_type_one(), c_hi.is_type_one()) {
            prop_assert!(!a || b);
        }
    }

    #[test]
    fn lazar_and_taylor_grow_with_the_stage(a in successor_stage(), b in successor_stage()) {
        prop_assume!(a < b);
        for build in [build_lazar, build_taylor] {
            let ra = analyze(&build(&a).unwrap()).unwrap().pedersen_rank().unwrap();
            let rb = analyze(&build(&b).unwrap()).unwrap().pedersen_rank().unwrap();
            prop_assert!(ra < rb, "{} vs {}: {} !< {}", a, b, ra, rb);
        }
    }

    #[test]
    fn lazar_rank_closed_form(a in successor_stage(), d in 1u64..6) {
        let e = SpectrumExpr::tensor(build_lazar(&a).unwrap(), d);
        let r = analyze(&e).unwrap().pedersen_rank().unwrap();
        prop_assert_eq!(r, ExtOrdinal::Finite(a.omega_times().add_nat(d)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn local_sections_match_global_subweights(spec in weighted(4, 3, false)) {
        let (s, w) = spec.build();
        for x in s.points() {
            let local = local_section_rank(&s, &w, x, false);
            prop_assert_eq!(&local, &global_subweight_rank(&s, &w, x));
            prop_assert_eq!(local, local_section_rank(&s, &w, x, true));
        }
    }
}

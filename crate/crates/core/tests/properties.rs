use std::sync::Arc;

use proptest::prelude::*;

use specwb_core::dense::{is_dense, DensityMode};
use specwb_core::ideal::{hull_intersection, ideal_generated, radical, spectrum};
use specwb_core::ring::{
    enumerate_subrings, make_poly_quotient, make_product, make_zn, parse_ring, subring_generated, write_ring, FiniteRing,
};
use specwb_core::topology::{
    is_cn_chain, is_completely_normal_topological, is_normal_topological, is_pm, is_weak_cn, parse_poset,
    weak_cn_by_maximal_points, write_poset, SpectralSpace,
};
use specwb_core::BitSet;

fn ring_strategy() -> impl Strategy<Value = Arc<FiniteRing>> {
    prop_oneof![
        (2usize..=30).prop_map(|n| make_zn(n).unwrap()),
        (2usize..=6, 2usize..=6).prop_map(|(a, b)| make_product(&make_zn(a).unwrap(), &make_zn(b).unwrap()).unwrap()),
        (prop::sample::select(vec![2u64, 3]), prop::collection::vec(0u64..3, 2..=3)).prop_map(|(p, mut c)| {
            c.iter_mut().for_each(|x| *x %= p);
            c.push(1);
            make_poly_quotient(p, &c).unwrap()
        }),
    ]
    .prop_map(Arc::new)
}

fn subset(ring: &FiniteRing, bits: u128) -> BitSet {
    let mask = if ring.size() == 128 { u128::MAX } else { (1u128 << ring.size()) - 1 };
    BitSet::from_bits(bits & mask)
}

fn poset_strategy() -> impl Strategy<Value = SpectralSpace> {
    (1usize..=6, any::<u64>()).prop_map(|(n, bits)| {
        let mut rel = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits >> k & 1 == 1 {
                    rel.push((i, j));
                }
                k += 1;
            }
        }
        SpectralSpace::from_relations("random", n, &rel).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(r in ring_strategy(), a in 0usize..128, b in 0usize..128, c in 0usize..128) {
        let n = r.size();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(r.add(a, b), r.add(b, a));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.mul(a, r.mul(b, c)), r.mul(r.mul(a, b), c));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
        prop_assert_eq!(r.mul(r.one(), a), a);
    }

    #[test]
    fn ring_text_round_trip(r in ring_strategy()) {
        let back = parse_ring(&write_ring(&r)).unwrap();
        prop_assert_eq!(write_ring(&back), write_ring(&r));
    }

    #[test]
    fn radical_is_idempotent_and_a_hull(r in ring_strategy(), gens in any::<u128>()) {
        let i = ideal_generated(&r, subset(&r, gens));
        let rad = radical(&r, i);
        prop_assert_eq!(radical(&r, rad), rad);
        prop_assert!(i.is_subset(rad));
        let primes = spectrum(&r, 64).unwrap();
        prop_assert_eq!(hull_intersection(&r, i, &primes), rad);
    }

    #[test]
    fn generated_subring_is_closed(r in ring_strategy(), gens in any::<u128>()) {
        let s = subring_generated(&r, subset(&r, gens));
        prop_assert_eq!(subring_generated(&r, s.member()).member(), s.member());
        prop_assert!(specwb_core::ring::is_subring(&r, s.member()));
    }

    #[test]
    fn density_modes_agree(r in ring_strategy().prop_filter("definition mode cap", |r| r.size() <= 12), pick in any::<usize>()) {
        let subs = enumerate_subrings(&r, 36).unwrap();
        let pair = &subs[pick % subs.len()];
        let d = is_dense(pair, DensityMode::Definition, 64).unwrap().dense;
        let p = is_dense(pair, DensityMode::Primes, 64).unwrap().dense;
        prop_assert_eq!(d, p);
    }

    #[test]
    fn poset_text_round_trip(s in poset_strategy()) {
        let back = parse_poset(&write_poset(&s)).unwrap();
        prop_assert_eq!(back.strict_relations(), s.strict_relations());
    }

    #[test]
    fn poset_predicate_relations(s in poset_strategy()) {
        prop_assert_eq!(is_pm(&s), is_normal_topological(&s, 16).unwrap());
        prop_assert_eq!(is_weak_cn(&s), weak_cn_by_maximal_points(&s));
        prop_assert_eq!(is_cn_chain(&s), is_completely_normal_topological(&s, 12).unwrap());
        if is_weak_cn(&s) && is_pm(&s) {
            prop_assert!(is_cn_chain(&s));
        }
    }
}

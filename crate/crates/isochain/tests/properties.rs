//! Randomized laws over arbitrary partial injections: composition algebra,
//! inverse identities, serialization round-trips, and family membership.

use proptest::prelude::*;

use isochain::algebra::exists_op_isometry;
use isochain::element::{ChainSize, PartialInjection};
use isochain::error::Error;
use isochain::family::FamilyId;

fn arb_on(n: u32) -> impl Strategy<Value = PartialInjection> {
    let points: Vec<u32> = (1..=n).collect();
    (
        proptest::sample::subsequence(points.clone(), 0..=(n as usize)),
        Just(points).prop_shuffle(),
    )
        .prop_map(move |(domain, images)| {
            let pairs: Vec<(u32, u32)> = domain.into_iter().zip(images).collect();
            PartialInjection::make(ChainSize::new(n), pairs).expect("generated pairs are valid")
        })
}

fn arb_pair() -> impl Strategy<Value = (PartialInjection, PartialInjection)> {
    (0u32..=6).prop_flat_map(|n| (arb_on(n), arb_on(n)))
}

fn arb_triple() -> impl Strategy<Value = (PartialInjection, PartialInjection, PartialInjection)> {
    (0u32..=5).prop_flat_map(|n| (arb_on(n), arb_on(n), arb_on(n)))
}

proptest! {
    #[test]
    fn composition_is_associative((a, b, c) in arb_triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn composition_applies_left_to_right((a, b) in arb_pair()) {
        let ab = a.compose(&b).unwrap();
        for x in 1..=a.n().get() {
            prop_assert_eq!(ab.apply(x), a.apply(x).and_then(|y| b.apply(y)));
        }
    }

    #[test]
    fn inverse_satisfies_the_inverse_semigroup_laws(a in (0u32..=6).prop_flat_map(arb_on)) {
        let inv = a.inverse();
        prop_assert_eq!(&inv.inverse(), &a);
        let back = a.compose(&inv).unwrap().compose(&a).unwrap();
        prop_assert_eq!(&back, &a);
        let dom_id = PartialInjection::partial_identity(a.n(), a.domain()).unwrap();
        prop_assert_eq!(a.compose(&inv).unwrap(), dom_id);
        let im_id = PartialInjection::partial_identity(a.n(), a.image_sorted()).unwrap();
        prop_assert_eq!(inv.compose(&a).unwrap(), im_id);
    }

    #[test]
    fn text_and_json_round_trip(a in (0u32..=6).prop_flat_map(arb_on)) {
        let reparsed: PartialInjection = a.to_string().parse().unwrap();
        prop_assert_eq!(&reparsed, &a);
        let json = serde_json::to_string(&a).unwrap();
        let decoded: PartialInjection = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&decoded, &a);
    }

    #[test]
    fn stats_agree_with_direct_recomputation(a in (0u32..=6).prop_flat_map(arb_on)) {
        let stats = a.stats();
        prop_assert_eq!(stats.height, a.pairs().len() as u32);
        prop_assert_eq!(stats.fix, a.fixed_points().len() as u32);
        prop_assert_eq!(a.is_idempotent(), a.compose(&a).unwrap() == a);
        prop_assert!(stats.fix <= stats.height);
    }

    #[test]
    fn intersection_families_require_both_memberships(a in (0u32..=6).prop_flat_map(arb_on)) {
        let decreasing = FamilyId::DecreasingInjective.member(&a);
        prop_assert_eq!(
            FamilyId::DecreasingIsometry.member(&a),
            FamilyId::Isometry.member(&a) && decreasing
        );
        prop_assert_eq!(
            FamilyId::OrderPreservingDecreasingIsometry.member(&a),
            FamilyId::OrderPreservingIsometry.member(&a) && decreasing
        );
    }

    #[test]
    fn families_are_closed_under_composition((a, b) in arb_pair()) {
        let ab = a.compose(&b).unwrap();
        for family in FamilyId::ALL {
            if family.member(&a) && family.member(&b) {
                prop_assert!(family.member(&ab));
            }
        }
    }

    #[test]
    fn gap_pattern_matching_is_symmetric_and_reflexive(
        xs in proptest::collection::btree_set(1u32..=12, 0..=6),
        ys in proptest::collection::btree_set(1u32..=12, 0..=6),
    ) {
        let xs: Vec<u32> = xs.into_iter().collect();
        let ys: Vec<u32> = ys.into_iter().collect();
        prop_assert!(exists_op_isometry(&xs, &xs));
        prop_assert_eq!(exists_op_isometry(&xs, &ys), exists_op_isometry(&ys, &xs));
    }

    #[test]
    fn composing_across_chains_is_rejected(a in arb_on(3), b in arb_on(4)) {
        prop_assert_eq!(
            a.compose(&b),
            Err(Error::ChainMismatch { left: 3, right: 4 })
        );
    }
}

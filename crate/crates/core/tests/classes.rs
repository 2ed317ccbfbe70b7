use boolnet_core::{
    classify, enumerate_class, nested_canalizing_witness, BooleanFunction, FunctionClass,
    InfluenceSign,
};
use proptest::prelude::*;

fn census(arity: usize, class: FunctionClass) -> Vec<u64> {
    enumerate_class(arity, class).unwrap()
}

#[test]
fn complete_is_subset_of_only() {
    for n in 1..=4 {
        let only = census(n, FunctionClass::OnlyPositive);
        let complete = census(n, FunctionClass::CompletePositive);
        assert!(complete.iter().all(|v| only.binary_search(v).is_ok()));
        // The gap is exactly the monotone functions with an inessential variable.
        let gap = (0..1u64 << (1 << n))
            .map(|v| BooleanFunction::from_u64(n, v).unwrap())
            .filter(|f| {
                let report = classify(f);
                report.only_positive && report.influences.contains(&InfluenceSign::Inessential)
            })
            .count();
        assert_eq!(only.len() - complete.len(), gap, "n={n}");
    }
}

#[test]
fn complete_negative_is_complement_of_complete_positive() {
    for n in 1..=4 {
        let top = (1u64 << (1 << n)) - 1;
        let mut mirrored: Vec<u64> = census(n, FunctionClass::CompletePositive)
            .into_iter()
            .map(|v| top - v)
            .collect();
        mirrored.sort_unstable();
        assert_eq!(mirrored, census(n, FunctionClass::CompleteNegative));
    }
}

#[test]
fn ncf_counts_through_arity_four() {
    let counts: Vec<usize> = (1..=4)
        .map(|n| census(n, FunctionClass::NestedCanalizing).len())
        .collect();
    assert_eq!(counts, [2, 8, 64, 736]);
}

#[test]
fn census_is_deterministic() {
    assert_eq!(
        census(3, FunctionClass::NestedCanalizing),
        census(3, FunctionClass::NestedCanalizing)
    );
}

proptest! {
    #[test]
    fn witnesses_replay_at_larger_arity(arity in 5usize..=8, layers in prop::collection::vec((any::<bool>(), any::<bool>()), 8), perm_seed in any::<u64>()) {
        // Build an NCF from random layers over a random variable order, then
        // check the detector finds a witness that replays to the same table.
        let mut order: Vec<usize> = (1..=arity).collect();
        let mut s = perm_seed | 1;
        for i in (1..order.len()).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            order.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let layers = &layers[..arity];
        let f = BooleanFunction::from_fn(arity, |index| {
            for (k, &var) in order.iter().enumerate() {
                let bit = index >> (arity - var) & 1 == 1;
                if bit == layers[k].0 {
                    return layers[k].1;
                }
            }
            !layers[arity - 1].1
        }).unwrap();
        let witness = nested_canalizing_witness(&f);
        prop_assert!(witness.is_some());
        prop_assert_eq!(witness.unwrap().replay(arity).unwrap(), f);
    }
}

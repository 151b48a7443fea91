use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

use fid_core::exact::from_biguint;
use fid_core::free_module::{
    decompose_at, decompose_at_with, dim_at, greedy_step, is_constituent, multiplicity_at,
};
use fid_core::partition::{compositions, pad, partitions_in_box, unpad, Padded};
use fid_core::pieri::{
    add_horizontal_strip, chain_multiplicity, column_strict_fillings, pieri_product,
};
use fid_core::stability::fit_exponential_polynomial;
use fid_core::{Composition, Execution, FreeModuleSpec, Partition};

fn partition(max_rows: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn composition(max_len: usize, max_entry: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..=max_entry, 1..=max_len).prop_map(Composition)
}

/// Smallest ν with λ ⊆ ν ⊆ μ and μ/ν a horizontal strip, by search over
/// every partition inside μ.
fn greedy_by_search(mu: &Partition, lambda: &Partition) -> Partition {
    let candidates: Vec<Partition> = partitions_in_box(mu.len(), mu.first())
        .into_iter()
        .filter(|nu| mu.contains(nu) && nu.contains(lambda))
        .filter(|nu| (0..mu.len()).all(|i| mu.part(i + 1) <= nu.part(i)))
        .collect();
    let smallest = candidates.iter().min_by_key(|nu| nu.size()).unwrap().clone();
    assert!(candidates.iter().all(|nu| nu.contains(&smallest)));
    smallest
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pad_unpad_round_trip(lambda in partition(3, 3), extra in prop::collection::vec(0usize..4, 1..=3)) {
        // pads n_r = |λ| + λ₁ + extra_r, weakly decreasing
        let mut offsets = extra.clone();
        offsets.sort_unstable_by(|a, b| b.cmp(a));
        let base = lambda.size() + lambda.first().max(1);
        let pads: Vec<usize> = offsets.iter().map(|o| base + o).collect();
        let mu = match pad(&lambda, &pads).unwrap() {
            Padded::Partition(mu) => mu,
            Padded::Zero => panic!("valid label padded to zero"),
        };
        let label = unpad(&mu, pads.len()).unwrap();
        prop_assert_eq!(&label.core, &lambda);
        prop_assert_eq!(&label.pads, &pads);
    }

    #[test]
    fn unpad_pad_round_trip(mu in partition(5, 5), r in 1usize..=3) {
        prop_assume!(mu.len() >= r);
        let label = unpad(&mu, r).unwrap();
        prop_assert_eq!(pad(&label.core, &label.pads).unwrap(), Padded::Partition(mu));
    }

    #[test]
    fn pieri_symmetric_in_composition(mu in partition(3, 3), a in composition(3, 3)) {
        let mut reversed = a.0.clone();
        reversed.reverse();
        let mut sorted = a.0.clone();
        sorted.sort_unstable();
        let base = pieri_product(&mu, &a);
        prop_assert_eq!(&base, &pieri_product(&mu, &Composition(reversed)));
        prop_assert_eq!(&base, &pieri_product(&mu, &Composition(sorted)));
    }

    #[test]
    fn zero_entries_are_neutral(mu in partition(3, 3), a in composition(3, 3)) {
        let mut padded = a.0.clone();
        padded.insert(0, 0);
        padded.push(0);
        prop_assert_eq!(pieri_product(&mu, &a), pieri_product(&mu, &Composition(padded)));
    }

    #[test]
    fn single_strip_is_multiplicity_free(mu in partition(4, 4), a in 0usize..5) {
        let product = pieri_product(&mu, &Composition(vec![a]));
        prop_assert!(product.terms().all(|(_, m)| *m == BigUint::from(1u32)));
        let strips = add_horizontal_strip(&mu, a);
        prop_assert_eq!(product.len(), strips.len());
    }

    #[test]
    fn greedy_step_is_smallest_strip_complement(mu in partition(5, 5), lambda in partition(5, 5)) {
        prop_assume!(mu.contains(&lambda));
        prop_assert_eq!(greedy_step(&mu, &lambda).unwrap(), greedy_by_search(&mu, &lambda));
    }

    #[test]
    fn fillings_match_chain_counts(mu in partition(3, 3), a in composition(3, 2)) {
        for lambda in pieri_product(&mu, &a).constituents() {
            prop_assert_eq!(
                chain_multiplicity(&mu, &a, lambda),
                column_strict_fillings(lambda, &mu, &a)
            );
        }
    }

    #[test]
    fn execution_strategies_agree(m in 0usize..=2, d in 1usize..=3, n in 0usize..=7) {
        let spec = FreeModuleSpec::regular(d, m).unwrap();
        prop_assert_eq!(
            decompose_at_with(&spec, n, Execution::Sequential),
            decompose_at_with(&spec, n, Execution::Parallel)
        );
    }
}

#[test]
fn one_color_decompositions_are_multiplicity_free() {
    for m in 0..=4 {
        for lambda in fid_core::partition::partitions_of(m) {
            let spec = FreeModuleSpec::irreducible(1, lambda).unwrap();
            for n in 0..=9 {
                assert!(decompose_at(&spec, n).terms().all(|(_, c)| *c == BigUint::from(1u32)));
            }
        }
    }
}

#[test]
fn multiplicity_at_agrees_with_decomposition() {
    for d in 1..=3 {
        let spec = FreeModuleSpec::irreducible(d, Partition::new(vec![2, 1]).unwrap()).unwrap();
        for n in 3..=7 {
            let dec = decompose_at(&spec, n);
            for (mu, c) in dec.terms() {
                assert_eq!(&multiplicity_at(&spec, mu), c);
            }
        }
    }
}

#[test]
fn constituents_satisfy_greedy_test() {
    for d in 1..=3 {
        for lambda in partitions_in_box(2, 2) {
            let spec = FreeModuleSpec::irreducible(d, lambda.clone()).unwrap();
            for n in lambda.size()..=lambda.size() + 4 {
                for mu in decompose_at(&spec, n).constituents() {
                    assert!(is_constituent(mu, &lambda, d), "{mu} over {lambda}, d={d}");
                }
            }
        }
    }
}

#[test]
fn chain_counts_vanish_off_support() {
    let mu = Partition::new(vec![2, 1]).unwrap();
    for a in compositions(3, 2) {
        let product = pieri_product(&mu, &a);
        for lambda in fid_core::partition::partitions_of(6) {
            let c = chain_multiplicity(&mu, &a, &lambda);
            assert_eq!(c.is_zero(), product.multiplicity(&lambda).is_zero());
        }
    }
}

#[test]
fn dimension_series_are_exponential_polynomials() {
    for d in 1..=3usize {
        for m in 0..=3usize {
            for spec in std::iter::once(FreeModuleSpec::regular(d, m).unwrap()).chain(
                fid_core::partition::partitions_of(m)
                    .into_iter()
                    .map(|l| FreeModuleSpec::irreducible(d, l).unwrap()),
            ) {
                let end = m + 3 * d * (m + 1);
                let series = (m..=end).map(|n| (n, dim_at(&spec, n))).collect();
                let fit = fit_exponential_polynomial(&series, d, m, m..=end).unwrap();
                for n in end + 1..=end + 5 {
                    assert_eq!(fit.function.eval(n), from_biguint(&dim_at(&spec, n)));
                }
            }
        }
    }
}

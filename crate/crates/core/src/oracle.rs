//! Sweep comparing Pieri chain counts with character-theoretic
//! decompositions of the same induced representations.

use crate::characters::{decompose_with_cache, induce_with_cache, CharacterCache};
use crate::decomposition::IrreducibleDecomposition;
use crate::exec::Execution;
use crate::partition::{compositions, partitions_of, Composition, Partition};
use crate::pieri::pieri_product;

/// Largest total size accepted by the sweep; character tables beyond this
/// get slow without adding coverage.
pub const ORACLE_LIMIT: usize = 9;

/// Longest composition in the sweep.
pub const MAX_COMPOSITION_LENGTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub mu: Partition,
    pub a: Composition,
    pub pieri: IrreducibleDecomposition,
    pub oracle: Option<IrreducibleDecomposition>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSummary {
    pub max_size: usize,
    pub cases: usize,
    pub first_failure: Option<Discrepancy>,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// All (μ, a) with |μ| + Σa ≤ max_size and 1 ≤ len(a) ≤ 3, zero entries
/// included.
pub fn sweep_cases(max_size: usize) -> Vec<(Partition, Composition)> {
    let mut cases = Vec::new();
    for total in 0..=max_size {
        for m in 0..=total {
            for mu in partitions_of(m) {
                for len in 1..=MAX_COMPOSITION_LENGTH {
                    for a in compositions(total - m, len) {
                        cases.push((mu.clone(), a));
                    }
                }
            }
        }
    }
    cases
}

/// Runs the sweep against an arbitrary implementation of the Pieri product.
pub fn oracle_sweep_with<F>(max_size: usize, exec: Execution, product: F) -> OracleSummary
where
    F: Fn(&Partition, &Composition) -> IrreducibleDecomposition + Sync + Send,
{
    let cases = sweep_cases(max_size.min(ORACLE_LIMIT));
    let results = exec.map(&cases, |(mu, a)| {
        let mut cache = CharacterCache::new();
        let chi = induce_with_cache(&mut cache, mu, a);
        let oracle = decompose_with_cache(&mut cache, &chi).ok();
        let got = product(mu, a);
        (oracle.as_ref() != Some(&got)).then(|| Discrepancy {
            mu: mu.clone(),
            a: a.clone(),
            pieri: got,
            oracle,
        })
    });
    OracleSummary {
        max_size,
        cases: cases.len(),
        first_failure: results.into_iter().flatten().next(),
    }
}

pub fn oracle_sweep(max_size: usize, exec: Execution) -> OracleSummary {
    oracle_sweep_with(max_size, exec, pieri_product)
}

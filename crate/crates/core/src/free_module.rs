//! Free FI_d-modules M(W) generated by an S_m-representation W.
//!
//! M(W)_n is the sum over length-d compositions a of n − m of
//! Ind_{S_m × S_a}^{S_n} (W ⊠ k), so every quantity here reduces to Pieri
//! chains from the generator's constituents.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::{binomial, factorial, pow};
use crate::decomposition::IrreducibleDecomposition;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{compositions, pad, unpad, Padded, PaddedLabel, Partition};
use crate::pieri::{pieri_product, strip_chain_count};

/// d colors, generator degree m, generator representation W of S_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleSpec {
    colors: usize,
    generator: IrreducibleDecomposition,
}

impl FreeModuleSpec {
    pub fn new(colors: usize, generator: IrreducibleDecomposition) -> Result<Self> {
        if colors == 0 {
            return Err(Error::InvalidGenerator(
                "color count must be at least 1".into(),
            ));
        }
        if generator.is_zero() {
            return Err(Error::InvalidGenerator(
                "generator representation is zero".into(),
            ));
        }
        Ok(FreeModuleSpec { colors, generator })
    }

    /// M(m): the free module on the regular representation of S_m.
    pub fn regular(colors: usize, m: usize) -> Result<Self> {
        Self::new(colors, IrreducibleDecomposition::regular(m))
    }

    /// M(S^λ).
    pub fn irreducible(colors: usize, lambda: Partition) -> Result<Self> {
        Self::new(colors, IrreducibleDecomposition::irreducible(lambda))
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn generator_degree(&self) -> usize {
        self.generator.degree()
    }

    pub fn generator(&self) -> &IrreducibleDecomposition {
        &self.generator
    }

    /// The single irreducible generating the module, if it is pure.
    pub fn pure_generator(&self) -> Option<&Partition> {
        let mut it = self.generator.terms();
        match (it.next(), it.next()) {
            (Some((lambda, mult)), None) if mult.is_one() => Some(lambda),
            _ => None,
        }
    }
}

/// |Hom([m], [n])| in FI_d: n!/(n−m)! injections times d^{n−m} colorings.
pub fn hom_count(colors: usize, m: usize, n: usize) -> BigUint {
    if n < m {
        return BigUint::zero();
    }
    factorial(n) / factorial(n - m) * pow(colors, n - m)
}

/// dim M(W)_n = dim W · C(n, m) · d^{n−m}.
pub fn dim_at(spec: &FreeModuleSpec, n: usize) -> BigUint {
    let m = spec.generator_degree();
    if n < m {
        return BigUint::zero();
    }
    spec.generator.total_dimension() * binomial(n, m) * pow(spec.colors, n - m)
}

/// Full decomposition of M(W)_n using the default execution strategy.
pub fn decompose_at(spec: &FreeModuleSpec, n: usize) -> IrreducibleDecomposition {
    decompose_at_with(spec, n, Execution::default())
}

/// Full decomposition of M(W)_n.
///
/// Compositions that are permutations of each other give the same Pieri
/// product, so each class of compositions is computed once and weighted by
/// the class size.
pub fn decompose_at_with(
    spec: &FreeModuleSpec,
    n: usize,
    exec: Execution,
) -> IrreducibleDecomposition {
    let m = spec.generator_degree();
    let mut out = IrreducibleDecomposition::zero(n);
    if n < m {
        return out;
    }
    let mut classes: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
    for a in compositions(n - m, spec.colors) {
        *classes.entry(a.sorted_support()).or_default() += 1u32;
    }
    let work: Vec<(&Partition, &BigUint, Vec<usize>, BigUint)> = spec
        .generator
        .terms()
        .flat_map(|(mu, mult)| {
            classes
                .iter()
                .map(move |(support, count)| (mu, mult, support.clone(), count.clone()))
        })
        .collect();
    let parts = exec.map(&work, |(mu, mult, support, count)| {
        let product = pieri_product(mu, &support.clone().into());
        (product, *mult * count)
    });
    for (product, scale) in parts {
        out.add_scaled(&product, &scale);
    }
    out
}

/// Multiplicity of S^μ in M(W)_{|μ|}, counted directly as d-step strip
/// chains from each generator constituent.
pub fn multiplicity_at(spec: &FreeModuleSpec, mu: &Partition) -> BigUint {
    spec.generator
        .terms()
        .filter(|(lambda, _)| mu.contains(lambda))
        .map(|(lambda, mult)| mult * strip_chain_count(lambda, mu, spec.colors))
        .sum()
}

/// One round of greedy removal: from every column of μ, drop the bottom box
/// unless it belongs to λ. In closed form μ′ᵢ = max(μᵢ₊₁, λᵢ).
pub fn greedy_step(mu: &Partition, lambda: &Partition) -> Result<Partition> {
    if !mu.contains(lambda) {
        return Err(Error::NotContained);
    }
    let parts = (0..mu.len())
        .map(|i| mu.part(i + 1).max(lambda.part(i)))
        .collect();
    Ok(Partition::from_sorted(parts))
}

/// True iff `steps` greedy rounds take μ to exactly λ.
pub fn is_constituent(mu: &Partition, lambda: &Partition, steps: usize) -> bool {
    if !mu.contains(lambda) {
        return false;
    }
    let mut cur = mu.clone();
    for _ in 0..steps {
        if cur == *lambda {
            break;
        }
        cur = greedy_step(&cur, lambda).expect("containment is preserved");
    }
    cur == *lambda
}

/// d-row padded constituent realising the d-weight of a free module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightWitness {
    pub weight: usize,
    pub level: usize,
    pub constituent: Partition,
}

/// wt^d(M(W)) = max |λ| over generator constituents, confirmed by finding a
/// d-row constituent at one level whose unpadded core has that size.
pub fn d_weight(spec: &FreeModuleSpec) -> Result<usize> {
    weight_witness(spec).map(|w| w.weight)
}

pub fn weight_witness(spec: &FreeModuleSpec) -> Result<WeightWitness> {
    let d = spec.colors;
    let (lambda, _) = spec
        .generator
        .terms()
        .max_by_key(|(l, _)| l.size())
        .expect("generator is nonzero");
    let weight = lambda.size();
    let pad_len = lambda.size() + lambda.first().max(1);
    let label = PaddedLabel::new(lambda.clone(), vec![pad_len; d]);
    let level = label.level().expect("pads exceed core size");
    let decomposition = decompose_at(spec, level);
    let constituent = decomposition
        .constituents()
        .filter(|mu| mu.len() >= d)
        .find(|mu| unpad(mu, d).is_ok_and(|l| l.core.size() == weight))
        .cloned()
        .ok_or_else(|| {
            Error::InvariantBreach(format!(
                "no {d}-row constituent of weight {weight} at n = {level}"
            ))
        })?;
    Ok(WeightWitness {
        weight,
        level,
        constituent,
    })
}

/// Multiplicity of S(λ)_{n₁,…,n_d} in M(W) at level Σnᵢ − (d−1)|λ|; zero
/// for labels that pad to the zero representation.
pub fn padded_multiplicity(spec: &FreeModuleSpec, label: &PaddedLabel) -> Result<BigUint> {
    if label.pads.len() != spec.colors {
        return Err(Error::WrongPadCount {
            expected: spec.colors,
            got: label.pads.len(),
        });
    }
    match pad(&label.core, &label.pads)? {
        Padded::Zero => Ok(BigUint::zero()),
        Padded::Partition(mu) => Ok(multiplicity_at(spec, &mu)),
    }
}

pub const DEFAULT_HORIZON: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilizationConfig {
    /// Largest shift l examined.
    pub horizon: usize,
    /// The plateau must persist for at least this many shifts past its onset.
    pub min_plateau: usize,
    pub exec: Execution,
}

impl Default for StabilizationConfig {
    fn default() -> Self {
        StabilizationConfig {
            horizon: DEFAULT_HORIZON,
            min_plateau: 3,
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub value: BigUint,
    /// Smallest l from which c_{λ, n+l} equals `value` up to the horizon.
    pub onset: usize,
    /// Sufficient onset from the chain argument, for pure generators S^ν:
    /// max(0, ν₁ + m − n_d).
    pub bound: Option<usize>,
    /// c_{λ, n₁+l, …, n_d+l} for l = 0..=horizon.
    pub values: Vec<BigUint>,
}

impl Stabilization {
    pub fn within_bound(&self) -> Option<bool> {
        self.bound.map(|b| self.onset <= b)
    }
}

/// Sufficient onset for M(S^ν): the shifted pads need n_d + l ≥ ν₁ + |ν|.
pub fn onset_bound(generator: &Partition, base_pads: &[usize]) -> usize {
    let need = generator.first() + generator.size();
    need.saturating_sub(base_pads.last().copied().unwrap_or(0))
}

/// Tracks c_{λ, n₁+l, …, n_d+l} over l and reports its eventual value.
pub fn stabilized_padded_multiplicity(
    spec: &FreeModuleSpec,
    lambda: &Partition,
    base_pads: &[usize],
    config: &StabilizationConfig,
) -> Result<Stabilization> {
    if base_pads.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::UnsortedPads(base_pads.to_vec()));
    }
    let base = PaddedLabel::new(lambda.clone(), base_pads.to_vec());
    let values = config
        .exec
        .map_range(0..config.horizon + 1, |l| {
            padded_multiplicity(spec, &base.shifted(l))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let value = values.last().cloned().expect("horizon range is non-empty");
    let onset = values
        .iter()
        .rposition(|v| *v != value)
        .map_or(0, |i| i + 1);
    if onset + config.min_plateau > config.horizon {
        return Err(Error::NoStabilization {
            horizon: config.horizon,
        });
    }
    let bound = spec.pure_generator().map(|g| onset_bound(g, base_pads));
    Ok(Stabilization {
        value,
        onset,
        bound,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    fn trivial(d: usize) -> FreeModuleSpec {
        FreeModuleSpec::regular(d, 0).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(FreeModuleSpec::regular(0, 1).is_err());
        assert!(FreeModuleSpec::new(1, IrreducibleDecomposition::zero(2)).is_err());
        assert_eq!(
            FreeModuleSpec::regular(2, 2).unwrap().pure_generator(),
            None
        );
        assert_eq!(
            FreeModuleSpec::irreducible(2, p(&[2]))
                .unwrap()
                .pure_generator(),
            Some(&p(&[2]))
        );
    }

    #[test]
    fn hom_counts() {
        for d in 1..4 {
            for m in 0..5 {
                assert_eq!(hom_count(d, m, m), factorial(m));
            }
        }
        assert_eq!(hom_count(2, 0, 3), big(8));
        assert_eq!(hom_count(2, 1, 2), big(4));
        assert_eq!(hom_count(3, 2, 1), big(0));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_at(&trivial(2), 3), big(8));
        let m1 = FreeModuleSpec::irreducible(2, p(&[1])).unwrap();
        assert_eq!(dim_at(&m1, 3), big(12));
        assert_eq!(dim_at(&m1, 0), big(0));
        // M(m) at level n is spanned by Hom([m], [n])
        for d in 1..4 {
            for m in 0..4 {
                let spec = FreeModuleSpec::regular(d, m).unwrap();
                for n in 0..8 {
                    assert_eq!(dim_at(&spec, n), hom_count(d, m, n));
                }
            }
        }
    }

    #[test]
    fn decompositions() {
        let d = decompose_at(&trivial(2), 2);
        assert_eq!(d.multiplicity(&p(&[2])), big(3));
        assert_eq!(d.multiplicity(&p(&[1, 1])), big(1));
        assert_eq!(d.len(), 2);

        let m1 = FreeModuleSpec::irreducible(2, p(&[1])).unwrap();
        let d = decompose_at(&m1, 2);
        assert_eq!(d.multiplicity(&p(&[2])), big(2));
        assert_eq!(d.multiplicity(&p(&[1, 1])), big(2));

        for n in 0..7 {
            assert_eq!(
                decompose_at(&trivial(1), n),
                IrreducibleDecomposition::irreducible(Partition::row(n))
            );
        }
        assert!(decompose_at(&m1, 0).is_zero());
    }

    #[test]
    fn composition_classes_match_naive_sum() {
        for spec in [
            FreeModuleSpec::regular(3, 2).unwrap(),
            FreeModuleSpec::irreducible(2, p(&[2, 1])).unwrap(),
        ] {
            for n in 0..7 {
                let m = spec.generator_degree();
                let mut naive = IrreducibleDecomposition::zero(n);
                if n >= m {
                    for a in compositions(n - m, spec.colors()) {
                        for (mu, mult) in spec.generator().terms() {
                            naive.add_scaled(&pieri_product(mu, &a), mult);
                        }
                    }
                }
                assert_eq!(decompose_at_with(&spec, n, Execution::Sequential), naive);
                assert_eq!(decompose_at_with(&spec, n, Execution::Parallel), naive);
            }
        }
    }

    #[test]
    fn direct_multiplicities_match_decomposition() {
        for spec in [
            trivial(3),
            FreeModuleSpec::regular(2, 2).unwrap(),
            FreeModuleSpec::irreducible(3, p(&[1, 1])).unwrap(),
        ] {
            for n in 0..8 {
                let d = decompose_at(&spec, n);
                for mu in partitions_of(n) {
                    assert_eq!(multiplicity_at(&spec, &mu), d.multiplicity(&mu), "{mu}");
                }
            }
        }
    }

    #[test]
    fn greedy_steps() {
        assert_eq!(
            greedy_step(&p(&[3, 1]), &Partition::empty()).unwrap(),
            p(&[1])
        );
        assert_eq!(greedy_step(&p(&[2, 2]), &p(&[1])).unwrap(), p(&[2]));
        assert_eq!(greedy_step(&p(&[3, 2]), &p(&[3, 2])).unwrap(), p(&[3, 2]));
        assert_eq!(greedy_step(&p(&[2, 1]), &p(&[3])), Err(Error::NotContained));
    }

    #[test]
    fn constituents() {
        assert!(is_constituent(&p(&[2, 2]), &p(&[1]), 2));
        assert!(!is_constituent(&p(&[1, 1, 1]), &Partition::empty(), 2));
        for steps in 0..4 {
            assert!(is_constituent(&p(&[3, 1]), &p(&[3, 1]), steps));
        }
        assert!(!is_constituent(&p(&[2]), &p(&[1, 1]), 3));
        assert_eq!(
            decompose_at(&trivial(2), 3).multiplicity(&p(&[1, 1, 1])),
            big(0)
        );
        let m1 = FreeModuleSpec::irreducible(2, p(&[1])).unwrap();
        assert_eq!(decompose_at(&m1, 4).multiplicity(&p(&[2, 2])), big(2));
    }

    #[test]
    fn weights() {
        for d in 1..4 {
            assert_eq!(
                d_weight(&FreeModuleSpec::irreducible(d, p(&[2])).unwrap()).unwrap(),
                2
            );
            assert_eq!(d_weight(&trivial(d)).unwrap(), 0);
        }
        assert_eq!(
            d_weight(&FreeModuleSpec::regular(2, 2).unwrap()).unwrap(),
            2
        );
        let w = weight_witness(&FreeModuleSpec::irreducible(2, p(&[2, 1])).unwrap()).unwrap();
        assert_eq!(unpad(&w.constituent, 2).unwrap().core.size(), 3);
    }

    #[test]
    fn padded_multiplicities() {
        let m1 = FreeModuleSpec::irreducible(2, p(&[1])).unwrap();
        let label = PaddedLabel::new(Partition::empty(), vec![2, 2]);
        assert_eq!(padded_multiplicity(&m1, &label).unwrap(), big(2));
        let label = PaddedLabel::new(Partition::empty(), vec![5, 0]);
        assert_eq!(padded_multiplicity(&trivial(2), &label).unwrap(), big(0));
        let label = PaddedLabel::new(p(&[1]), vec![12]);
        assert_eq!(padded_multiplicity(&trivial(1), &label).unwrap(), big(0));
        let label = PaddedLabel::new(p(&[1]), vec![12, 3]);
        assert!(matches!(
            padded_multiplicity(&trivial(1), &label),
            Err(Error::WrongPadCount {
                expected: 1,
                got: 2
            })
        ));
    }

    #[test]
    fn stabilization() {
        let cfg = StabilizationConfig {
            horizon: 12,
            ..Default::default()
        };
        let m1 = FreeModuleSpec::irreducible(2, p(&[1])).unwrap();
        let s = stabilized_padded_multiplicity(&m1, &Partition::empty(), &[2, 2], &cfg).unwrap();
        assert_eq!((s.value.clone(), s.onset), (big(2), 0));
        assert_eq!(s.within_bound(), Some(true));

        let s = stabilized_padded_multiplicity(&trivial(2), &Partition::empty(), &[1, 1], &cfg)
            .unwrap();
        assert_eq!(s.value, big(1));
        assert!(s.values.iter().all(|v| *v == big(1)));

        let s =
            stabilized_padded_multiplicity(&trivial(1), &Partition::empty(), &[0], &cfg).unwrap();
        assert_eq!((s.value, s.onset), (big(1), 0));

        assert!(matches!(
            stabilized_padded_multiplicity(&trivial(2), &Partition::empty(), &[1, 2], &cfg),
            Err(Error::UnsortedPads(_))
        ));
    }

    #[test]
    fn short_horizon_is_reported() {
        // value climbs from 0 at l = 0 and 1, so a two-step horizon cannot
        // confirm a plateau of length 3
        let spec = FreeModuleSpec::irreducible(2, p(&[2])).unwrap();
        let cfg = StabilizationConfig {
            horizon: 2,
            ..Default::default()
        };
        assert!(matches!(
            stabilized_padded_multiplicity(&spec, &Partition::empty(), &[0, 0], &cfg),
            Err(Error::NoStabilization { horizon: 2 })
        ));
    }
}

//! Symmetric-group characters computed from scratch: Murnaghan–Nakayama,
//! induction from Young subgroups, and decomposition by inner products.
//!
//! Nothing here uses the Pieri machinery, so it serves as an independent
//! check on it.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinat::factorial;
use crate::decomposition::IrreducibleDecomposition;
use crate::error::{Error, Result};
use crate::partition::{dim_irreducible, partitions_of, Composition, Partition};

/// A conjugacy class of S_n, given by its cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn degree(&self) -> usize {
        self.0.size()
    }

    /// Multiplicity of each cycle length, indexed by length.
    fn cycle_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.0.first() + 1];
        for &k in self.0.parts() {
            counts[k] += 1;
        }
        counts
    }

    /// z_ρ = ∏ k^{m_k} m_k!, the centralizer order.
    pub fn centralizer_order(&self) -> BigUint {
        z_from_counts(&self.cycle_counts())
    }
}

fn z_from_counts(counts: &[usize]) -> BigUint {
    let mut z = BigUint::one();
    for (k, &m) in counts.iter().enumerate().skip(1) {
        z *= num_traits::pow(BigUint::from(k), m) * factorial(m);
    }
    z
}

/// n! / z_ρ.
pub fn class_size(rho: &CycleType) -> BigUint {
    factorial(rho.degree()) / rho.centralizer_order()
}

/// An integer-valued class function on S_n, keyed by every cycle type of n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    degree: usize,
    values: BTreeMap<CycleType, BigInt>,
}

impl ClassFunction {
    pub fn new(degree: usize, values: BTreeMap<CycleType, BigInt>) -> Result<Self> {
        let expected = partitions_of(degree);
        if values.len() != expected.len()
            || expected
                .iter()
                .any(|p| !values.contains_key(&CycleType(p.clone())))
        {
            return Err(Error::NotACharacter(format!(
                "class function on S_{degree} must cover every cycle type"
            )));
        }
        Ok(ClassFunction { degree, values })
    }

    /// Values listed against cycle types in canonical order.
    pub fn from_values(degree: usize, values: &[i64]) -> Result<Self> {
        let classes = partitions_of(degree);
        if classes.len() != values.len() {
            return Err(Error::NotACharacter(format!(
                "S_{degree} has {} classes, got {} values",
                classes.len(),
                values.len()
            )));
        }
        Ok(ClassFunction {
            degree,
            values: classes
                .into_iter()
                .zip(values)
                .map(|(p, &v)| (CycleType(p), BigInt::from(v)))
                .collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, rho: &CycleType) -> &BigInt {
        &self.values[rho]
    }

    /// Value at the identity, i.e. the degree of the representation.
    pub fn at_identity(&self) -> &BigInt {
        self.value(&CycleType(Partition::column(self.degree)))
    }

    /// Values in canonical class order.
    pub fn values(&self) -> impl Iterator<Item = (&CycleType, &BigInt)> {
        self.values.iter().rev()
    }

    /// ⟨self, other⟩ = (1/n!) Σ_ρ |ρ| χ(ρ) ψ(ρ); `None` when not an integer.
    pub fn inner_product(&self, other: &ClassFunction) -> Option<BigInt> {
        assert_eq!(self.degree, other.degree);
        let sum: BigInt = self
            .values
            .iter()
            .map(|(rho, v)| BigInt::from(class_size(rho)) * v * other.value(rho))
            .sum();
        let (q, r) = sum.div_rem(&BigInt::from(factorial(self.degree)));
        r.is_zero().then_some(q)
    }
}

/// Memoized Murnaghan–Nakayama evaluation. One table per computation; not
/// shared across threads.
#[derive(Debug, Default)]
pub struct CharacterCache {
    memo: HashMap<(Partition, Partition), BigInt>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// χ^λ(ρ), removing rim hooks of length ρ₁, ρ₂, … in turn.
    pub fn value(&mut self, lambda: &Partition, rho: &Partition) -> BigInt {
        if rho.is_empty() {
            return if lambda.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        if lambda.size() != rho.size() {
            return BigInt::zero();
        }
        let key = (lambda.clone(), rho.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let k = rho.first();
        let rest = Partition::from_sorted(rho.parts()[1..].to_vec());
        let mut total = BigInt::zero();
        for (smaller, negative) in rim_hook_removals(lambda, k) {
            let v = self.value(&smaller, &rest);
            if negative {
                total -= v;
            } else {
                total += v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    pub fn character(&mut self, lambda: &Partition) -> ClassFunction {
        let n = lambda.size();
        let values = partitions_of(n)
            .into_iter()
            .map(|rho| {
                let v = self.value(lambda, &rho);
                (CycleType(rho), v)
            })
            .collect();
        ClassFunction { degree: n, values }
    }
}

/// All ways to remove a rim hook of length `k` from λ, with the sign of each
/// (true = odd leg length). Works on the beta-set of λ: a rim hook removal
/// moves one bead from b to b − k.
fn rim_hook_removals(lambda: &Partition, k: usize) -> Vec<(Partition, bool)> {
    let h = lambda.len();
    let beta: Vec<usize> = (0..h).map(|i| lambda.part(i) + (h - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (h - 1 - i))
            .collect();
        out.push((Partition::from_sorted(parts), crossed % 2 == 1));
    }
    out
}

pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    CharacterCache::new().character(lambda)
}

/// Character of Ind_{S_m × S_{a₁} × …}^{S_n} (S^μ ⊠ trivial).
///
/// For each class ρ of S_n the value is z_ρ Σ χ^μ(σ₀) / (z_{σ₀} z_{σ₁} ⋯)
/// over all ways of splitting the cycles of ρ into blocks σ₀ ⊢ m, σᵢ ⊢ aᵢ.
/// Zero entries of `a` are trivial factors and are skipped.
pub fn induce_trivial_product(mu: &Partition, a: &Composition) -> ClassFunction {
    let mut cache = CharacterCache::new();
    induce_with_cache(&mut cache, mu, a)
}

pub(crate) fn induce_with_cache(
    cache: &mut CharacterCache,
    mu: &Partition,
    a: &Composition,
) -> ClassFunction {
    let n = mu.size() + a.total();
    let mut blocks = vec![mu.size()];
    blocks.extend(a.entries().iter().copied().filter(|&x| x > 0));
    let mut values = BTreeMap::new();
    for rho in partitions_of(n) {
        let rho = CycleType(rho);
        let mut counts = rho.cycle_counts();
        let mut acc = BigRational::zero();
        let mut visit = |split: &[Partition]| {
            let chi = cache.value(mu, &split[0]);
            if chi.is_zero() {
                return;
            }
            let denom: BigUint = split
                .iter()
                .map(|s| CycleType(s.clone()).centralizer_order())
                .product();
            acc += BigRational::new(chi, BigInt::from(denom));
        };
        split_cycles(&blocks, &mut counts, &mut Vec::new(), &mut visit);
        let value = acc * BigRational::from_integer(BigInt::from(rho.centralizer_order()));
        assert!(
            value.is_integer(),
            "induced character value must be integral"
        );
        values.insert(rho, value.to_integer());
    }
    ClassFunction { degree: n, values }
}

/// Enumerates every way of distributing the cycles in `counts` over blocks
/// of the given sizes; `visit` receives one cycle type per block.
fn split_cycles(
    blocks: &[usize],
    counts: &mut [usize],
    chosen: &mut Vec<Partition>,
    visit: &mut dyn FnMut(&[Partition]),
) {
    let Some((&size, rest)) = blocks.split_first() else {
        if counts.iter().all(|&c| c == 0) {
            visit(chosen);
        }
        return;
    };
    let max_len = counts.len().saturating_sub(1);
    let mut parts = Vec::new();
    sub_multisets(size, max_len, counts, &mut parts, &mut |sigma, counts| {
        chosen.push(Partition::from_sorted(sigma.to_vec()));
        split_cycles(rest, counts, chosen, visit);
        chosen.pop();
    });
}

/// Partitions of `size` (parts ≤ `max`) drawn from the available cycle counts.
fn sub_multisets(
    size: usize,
    max: usize,
    counts: &mut [usize],
    parts: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize], &mut [usize]),
) {
    if size == 0 {
        let snapshot = parts.clone();
        visit(&snapshot, counts);
        return;
    }
    for k in (1..=max.min(size)).rev() {
        if counts[k] == 0 {
            continue;
        }
        counts[k] -= 1;
        parts.push(k);
        sub_multisets(size - k, k, counts, parts, visit);
        parts.pop();
        counts[k] += 1;
    }
}

/// Multiplicities ⟨χ, χ^λ⟩ for every λ ⊢ n.
///
/// Fails with `NotACharacter` if any inner product is negative or not an
/// integer, or if the multiplicities do not account for χ(1).
pub fn decompose(chi: &ClassFunction) -> Result<IrreducibleDecomposition> {
    let mut cache = CharacterCache::new();
    decompose_with_cache(&mut cache, chi)
}

pub(crate) fn decompose_with_cache(
    cache: &mut CharacterCache,
    chi: &ClassFunction,
) -> Result<IrreducibleDecomposition> {
    let n = chi.degree();
    let mut out = IrreducibleDecomposition::zero(n);
    for lambda in partitions_of(n) {
        let irr = cache.character(&lambda);
        let m = chi.inner_product(&irr).ok_or_else(|| {
            Error::NotACharacter(format!("non-integral inner product with χ^{lambda}"))
        })?;
        if m.is_negative() {
            return Err(Error::NotACharacter(format!(
                "negative multiplicity {m} of {lambda}"
            )));
        }
        let (_, m) = m.into_parts();
        out.add(lambda, m);
    }
    let degree = chi.at_identity();
    if degree.sign() == Sign::Minus || BigInt::from(out.total_dimension()) != *degree {
        return Err(Error::NotACharacter(
            "multiplicities do not account for the degree".into(),
        ));
    }
    Ok(out)
}

/// Character of S^λ at the identity equals the hook-formula dimension.
pub fn identity_value_matches_dimension(lambda: &Partition) -> bool {
    let chi = irreducible_character(lambda);
    *chi.at_identity() == BigInt::from(dim_irreducible(lambda))
}

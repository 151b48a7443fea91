//! Semisimple symmetric-group representations up to isomorphism.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{dim_irreducible, partitions_of, Partition};

/// Multiplicities of irreducibles S^λ, λ ⊢ n. Absent keys have multiplicity 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleDecomposition {
    degree: usize,
    terms: BTreeMap<Partition, BigUint>,
}

impl IrreducibleDecomposition {
    pub fn zero(degree: usize) -> Self {
        IrreducibleDecomposition {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn irreducible(lambda: Partition) -> Self {
        let mut d = Self::zero(lambda.size());
        d.add(lambda, BigUint::from(1u32));
        d
    }

    /// The regular representation of S_m: every S^λ with multiplicity dim S^λ.
    pub fn regular(m: usize) -> Self {
        let mut d = Self::zero(m);
        for lambda in partitions_of(m) {
            let dim = dim_irreducible(&lambda);
            d.add(lambda, dim);
        }
        d
    }

    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, BigUint)>,
    ) -> Result<Self> {
        let mut d = Self::zero(degree);
        for (lambda, mult) in terms {
            if lambda.size() != degree {
                return Err(Error::InvalidGenerator(format!(
                    "{lambda} is not a partition of {degree}"
                )));
            }
            d.add(lambda, mult);
        }
        Ok(d)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add(&mut self, lambda: Partition, mult: BigUint) {
        debug_assert_eq!(lambda.size(), self.degree);
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(lambda).or_default() += mult;
    }

    /// Adds `scale` copies of every term of `other`.
    pub fn add_scaled(&mut self, other: &IrreducibleDecomposition, scale: &BigUint) {
        debug_assert_eq!(other.degree, self.degree);
        for (lambda, mult) in &other.terms {
            self.add(lambda.clone(), mult * scale);
        }
    }

    pub fn multiplicity(&self, lambda: &Partition) -> BigUint {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter().rev()
    }

    pub fn constituents(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys().rev()
    }

    pub fn total_dimension(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(lambda, mult)| mult * dim_irreducible(lambda))
            .sum()
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            n: self.degree,
            terms: self
                .terms()
                .map(|(lambda, mult)| TermJson {
                    partition: lambda.clone(),
                    multiplicity: mult.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &DecompositionJson) -> Result<Self> {
        let terms = json
            .terms
            .iter()
            .map(|t| {
                t.multiplicity
                    .parse::<BigUint>()
                    .map(|m| (t.partition.clone(), m))
                    .map_err(|e| Error::Parse(format!("multiplicity {:?}: {e}", t.multiplicity)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(json.n, terms)
    }
}

/// Wire form: `{"n": 4, "terms": [{"partition": [2,2], "multiplicity": "2"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub multiplicity: String,
}

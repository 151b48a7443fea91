//! Partitions, Young diagrams, hooks, padding and compositions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers. The empty tuple is the
/// empty partition.
///
/// The derived ordering is ascending lexicographic on the parts; canonical
/// output order is the reverse of it (descending lexicographic).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition (n); empty when n = 0.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition (1^n).
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Builds a partition from weakly decreasing parts, dropping trailing zeros.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part i (0-based); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ₁, with the convention that the empty partition has first part 0.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition {
            parts: (1..=cols)
                .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
                .collect(),
        }
    }

    /// True iff the diagram of `inner` fits inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Hook length at the 1-based box (i, j).
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || j == 0 || j > self.part(i - 1) {
            return Err(Error::BoxOutOfDiagram { row: i, col: j });
        }
        let leg = self.parts.iter().filter(|&&p| p >= j).count() - i;
        let arm = self.parts[i - 1] - j;
        Ok(arm + leg + 1)
    }

    /// Removable corners, as 0-based row indices.
    pub fn corners(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.part(i) > self.part(i + 1))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Parses the bracketed literal form, e.g. `[3,2,2,1]` or `[]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        new_partition(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Validates a raw integer sequence as a partition.
pub fn new_partition(parts: &[i64]) -> Result<Partition> {
    if parts.iter().any(|&p| p <= 0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(parts.to_vec()));
    }
    Ok(Partition {
        parts: parts.iter().map(|&p| p as usize).collect(),
    })
}

/// |λ|! divided by the product of all hook lengths.
pub fn dim_irreducible(lambda: &Partition) -> BigUint {
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 1..=row {
            hooks *= lambda.hook_length(i + 1, j).expect("box inside diagram") as u64;
        }
    }
    factorial(lambda.size()) / hooks
}

/// Largest diagram accepted by [`count_standard_tableaux`].
pub const TABLEAU_ENUMERATION_LIMIT: usize = 14;

/// Counts standard tableaux by exhaustive enumeration: every filling is
/// built by placing the largest entry in a removable corner, recursively.
/// No memoization, so the work is proportional to the count itself.
pub fn count_standard_tableaux(lambda: &Partition) -> Result<BigUint> {
    if lambda.size() > TABLEAU_ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: format!("diagram {lambda}"),
            limit: TABLEAU_ENUMERATION_LIMIT,
        });
    }
    fn fillings(shape: &mut Vec<usize>) -> u64 {
        if shape.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let below = shape.get(i + 1).copied().unwrap_or(0);
            if shape[i] > below {
                shape[i] -= 1;
                let popped = if shape[i] == 0 { shape.pop() } else { None };
                total += fillings(shape);
                if let Some(v) = popped {
                    shape.push(v);
                }
                shape[i] += 1;
            }
        }
        total
    }
    Ok(BigUint::from(fillings(&mut lambda.parts().to_vec())))
}

/// All partitions of n in canonical (descending lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `rows` rows and at most `cols` columns.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if rows == 0 {
            return;
        }
        for p in (1..=max).rev() {
            cur.push(p);
            rec(rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// A fixed-length tuple of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero entries sorted in decreasing order.
    pub fn sorted_support(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&a| a > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition(v)
    }
}

/// All compositions of `total` with `length` entries, in descending
/// lexicographic order.
pub fn compositions(total: usize, length: usize) -> Vec<Composition> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rest);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for a in (0..=rest).rev() {
            cur.push(a);
            rec(rest - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if length == 0 {
        if total == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(total, length, &mut Vec::new(), &mut out);
    out
}

/// A padded label λ[n₁,…,n_r]: a core partition and r weakly decreasing pads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PaddedLabel {
    pub core: Partition,
    pub pads: Vec<usize>,
}

impl PaddedLabel {
    pub fn new(core: Partition, pads: Vec<usize>) -> Self {
        PaddedLabel { core, pads }
    }

    /// Size of the padded partition: Σnᵢ − (r−1)|λ|.
    pub fn level(&self) -> Option<usize> {
        let sum: usize = self.pads.iter().sum();
        let r = self.pads.len();
        if r == 0 {
            return Some(self.core.size());
        }
        sum.checked_sub((r - 1) * self.core.size())
    }

    pub fn shifted(&self, l: usize) -> PaddedLabel {
        PaddedLabel {
            core: self.core.clone(),
            pads: self.pads.iter().map(|n| n + l).collect(),
        }
    }

    pub fn to_partition(&self) -> Result<Padded> {
        pad(&self.core, &self.pads)
    }
}

/// Result of padding: a genuine partition, or the zero representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Padded {
    Partition(Partition),
    Zero,
}

impl Padded {
    pub fn partition(&self) -> Option<&Partition> {
        match self {
            Padded::Partition(p) => Some(p),
            Padded::Zero => None,
        }
    }
}

/// λ[n₁,…,n_r] = (n₁−|λ|, …, n_r−|λ|, λ₁, …, λ_h).
///
/// Labels with n_r < |λ| + λ₁ are the zero representation. A padded row of
/// length zero is only accepted when every padded row is zero (λ = ∅ and all
/// pads 0, which gives ∅); otherwise the tuple is not a partition and the
/// label is also zero.
pub fn pad(lambda: &Partition, pads: &[usize]) -> Result<Padded> {
    if pads.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::UnsortedPads(pads.to_vec()));
    }
    let size = lambda.size();
    let Some(&last) = pads.last() else {
        return Ok(Padded::Partition(lambda.clone()));
    };
    if last < size + lambda.first() {
        return Ok(Padded::Zero);
    }
    let rows: Vec<usize> = pads.iter().map(|n| n - size).collect();
    if rows.iter().all(|&r| r == 0) {
        return Ok(Padded::Partition(Partition::empty()));
    }
    if rows.contains(&0) {
        return Ok(Padded::Zero);
    }
    let mut parts = rows;
    parts.extend_from_slice(lambda.parts());
    Ok(Padded::Partition(Partition { parts }))
}

/// Inverse of [`pad`]: μ = λ[n₁,…,n_r] with λ = (μ_{r+1}, …) and nᵢ = μᵢ + |λ|.
pub fn unpad(mu: &Partition, r: usize) -> Result<PaddedLabel> {
    if mu.len() < r {
        return Err(Error::TooFewRows {
            rows: mu.len(),
            needed: r,
        });
    }
    let core = Partition {
        parts: mu.parts()[r..].to_vec(),
    };
    let size = core.size();
    let pads: Vec<usize> = mu.parts()[..r].iter().map(|p| p + size).collect();
    if pads.last().is_some_and(|&n| n < size + core.first()) {
        return Err(Error::NotPaddable);
    }
    Ok(PaddedLabel { core, pads })
}

//! Iterated Pieri rule: horizontal strips and strip chains.
//!
//! Ind_{S_m × S_{a₁} × ⋯ × S_{a_h}}^{S_n} (S^μ ⊠ k) contains S^λ with
//! multiplicity equal to the number of chains μ = μ⁽⁰⁾ ⊆ μ⁽¹⁾ ⊆ ⋯ ⊆ μ⁽ʰ⁾ = λ
//! where μ⁽ⁱ⁾/μ⁽ⁱ⁻¹⁾ is a horizontal strip of aᵢ boxes.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinat::multinomial;
pub use crate::decomposition::IrreducibleDecomposition;
use crate::partition::{dim_irreducible, Composition, Partition};

/// Row bounds for strip enumeration: row i of the result lies in
/// `[lower[i], upper[i]]`, clamped by the interlacing condition.
struct StripBounds<'a> {
    base: &'a Partition,
    outer: Option<&'a Partition>,
    floor: Option<(&'a Partition, usize)>,
}

impl StripBounds<'_> {
    fn rows(&self) -> usize {
        match self.outer {
            Some(o) => o.len(),
            None => self.base.len() + 1,
        }
    }

    fn lower(&self, i: usize) -> usize {
        let mut lo = self.base.part(i);
        if let Some((outer, shift)) = self.floor {
            lo = lo.max(outer.part(i + shift));
        }
        lo
    }

    fn upper(&self, i: usize) -> Option<usize> {
        let interlace = (i > 0).then(|| self.base.part(i - 1));
        let cap = self.outer.map(|o| o.part(i));
        match (interlace, cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

/// Enumerates horizontal strips added to `bounds.base`. With `size` set,
/// only strips of exactly that many boxes are produced.
fn for_each_strip(bounds: &StripBounds<'_>, size: Option<usize>, visit: &mut dyn FnMut(Partition)) {
    fn rec(
        bounds: &StripBounds<'_>,
        i: usize,
        budget: Option<usize>,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(Partition),
    ) {
        if i == bounds.rows() {
            if budget.unwrap_or(0) == 0 {
                visit(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let lo = bounds.lower(i);
        let base = bounds.base.part(i);
        let mut hi = match (bounds.upper(i), budget) {
            (Some(u), Some(b)) => u.min(base + b),
            (Some(u), None) => u,
            (None, Some(b)) => base + b,
            (None, None) => unreachable!("unbounded strip enumeration"),
        };
        if let Some(&prev) = cur.last() {
            hi = hi.min(prev);
        }
        if lo > hi {
            return;
        }
        for row in lo..=hi {
            if row == 0 {
                // all later rows are zero as well
                if budget.unwrap_or(0) == 0 && (i..bounds.rows()).all(|j| bounds.lower(j) == 0) {
                    visit(Partition::from_sorted(cur.clone()));
                }
                continue;
            }
            cur.push(row);
            rec(bounds, i + 1, budget.map(|b| b - (row - base)), cur, visit);
            cur.pop();
        }
    }
    rec(bounds, 0, size, &mut Vec::new(), visit);
}

/// Every λ ⊇ μ with |λ| = |μ| + a and at most one new box per column, in
/// canonical order.
pub fn add_horizontal_strip(mu: &Partition, a: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let bounds = StripBounds {
        base: mu,
        outer: None,
        floor: None,
    };
    for_each_strip(&bounds, Some(a), &mut |p| out.push(p));
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

fn strip_stage(
    frontier: BTreeMap<Partition, BigUint>,
    a: usize,
    within: Option<&Partition>,
) -> BTreeMap<Partition, BigUint> {
    let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for (nu, count) in frontier {
        let bounds = StripBounds {
            base: &nu,
            outer: within,
            floor: None,
        };
        for_each_strip(&bounds, Some(a), &mut |lambda| {
            *next.entry(lambda).or_default() += &count;
        });
    }
    next
}

/// Decomposition of Ind (S^μ ⊠ k) from S_m × S_{a₁} × ⋯ by chain counting.
///
/// Chains are grown stage by stage; partial chains ending at the same
/// partition are merged, which is memoization on (partition, remaining
/// stages).
pub fn pieri_product(mu: &Partition, a: &Composition) -> IrreducibleDecomposition {
    let mut frontier = BTreeMap::from([(mu.clone(), BigUint::one())]);
    for &ai in a.entries() {
        if ai > 0 {
            frontier = strip_stage(frontier, ai, None);
        }
    }
    let mut out = IrreducibleDecomposition::zero(mu.size() + a.total());
    for (lambda, count) in frontier {
        out.add(lambda, count);
    }
    out
}

/// Multiplicity of S^λ in `pieri_product(μ, a)`.
pub fn chain_multiplicity(mu: &Partition, a: &Composition, lambda: &Partition) -> BigUint {
    if lambda.size() != mu.size() + a.total() || !lambda.contains(mu) {
        return BigUint::zero();
    }
    let mut frontier = BTreeMap::from([(mu.clone(), BigUint::one())]);
    for &ai in a.entries() {
        if ai > 0 {
            frontier = strip_stage(frontier, ai, Some(lambda));
        }
    }
    frontier.remove(lambda).unwrap_or_default()
}

/// Dimension of Ind (S^μ ⊠ k): dim S^μ · n! / (m! a₁! ⋯).
pub fn induced_dimension(mu: &Partition, a: &Composition) -> BigUint {
    let mut blocks = vec![mu.size()];
    blocks.extend_from_slice(a.entries());
    dim_irreducible(mu) * multinomial(mu.size() + a.total(), &blocks)
}

/// Number of chains inner = ν⁽⁰⁾ ⊆ ⋯ ⊆ ν⁽ˢ⁾ = outer of `steps` horizontal
/// strips of any size (empty allowed). Equals the sum of
/// `chain_multiplicity(inner, a, outer)` over all compositions a of length
/// `steps`, i.e. the multiplicity of S^outer in M(S^inner) with `steps`
/// colors.
pub fn strip_chain_count(inner: &Partition, outer: &Partition, steps: usize) -> BigUint {
    if !outer.contains(inner) {
        return BigUint::zero();
    }
    let mut memo = HashMap::new();
    count_chains(inner, outer, steps, &mut memo)
}

fn count_chains(
    nu: &Partition,
    outer: &Partition,
    steps: usize,
    memo: &mut HashMap<(Partition, usize), BigUint>,
) -> BigUint {
    // every column of outer/ν must have at most `steps` boxes
    let reachable = (0..outer.len()).all(|i| outer.part(i + steps) <= nu.part(i));
    if !reachable {
        return BigUint::zero();
    }
    if steps == 0 {
        return if nu == outer {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if steps == 1 {
        // reachable already forces outer/ν to be a horizontal strip
        return BigUint::one();
    }
    let key = (nu.clone(), steps);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut children = Vec::new();
    let bounds = StripBounds {
        base: nu,
        outer: Some(outer),
        floor: Some((outer, steps - 1)),
    };
    for_each_strip(&bounds, None, &mut |p| children.push(p));
    let total = children
        .iter()
        .map(|child| count_chains(child, outer, steps - 1, memo))
        .sum::<BigUint>();
    memo.insert(key, total.clone());
    total
}

/// Column-strict fillings of the skew shape outer/inner with content `a`:
/// entry i appears aᵢ times, rows weakly increase, columns strictly
/// increase. Filled box by box in reading order, independently of the strip
/// enumeration above.
pub fn column_strict_fillings(outer: &Partition, inner: &Partition, a: &Composition) -> BigUint {
    if !outer.contains(inner) || outer.size() != inner.size() + a.total() {
        return BigUint::zero();
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner.part(i)..outer.part(i)).map(move |j| (i, j)))
        .collect();
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut remaining = a.entries().to_vec();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut HashMap<(usize, usize), usize>,
        remaining: &mut [usize],
    ) -> u64 {
        let Some(&(i, j)) = cells.get(idx) else {
            return 1;
        };
        let left = if j > 0 {
            grid.get(&(i, j - 1)).copied()
        } else {
            None
        };
        let above = if i > 0 {
            grid.get(&(i - 1, j)).copied()
        } else {
            None
        };
        let lo = left.unwrap_or(1).max(above.map_or(1, |v| v + 1));
        let mut total = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid.insert((i, j), v);
            total += rec(idx + 1, cells, grid, remaining);
            grid.remove(&(i, j));
            remaining[v - 1] += 1;
        }
        total
    }
    BigUint::from(rec(0, &cells, &mut grid, &mut remaining))
}

//! Instance normalization and the break partition.
//!
//! Normalization keeps, for each distinct weight, only the maximum-profit
//! type (a lower-profit type of equal weight never appears in an optimal
//! solution), then sorts by nonincreasing exact density. The partition
//! splits the surviving types into `N1` (density equal to the break type)
//! and `N2` (strictly lower density) and derives the residual capacity,
//! the gcd of the `N1` weights, and the block weight `t'`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use std::cmp::Ordering;

use crate::model::{Instance, ItemType};

/// For each distinct weight keeps only the maximum-profit type (first
/// occurrence wins among exact duplicates). Relative order of survivors is
/// preserved. The output has at most `R` entries since weights lie in
/// `[1, R]`.
pub fn dominance_reduce(types: &[ItemType]) -> Vec<ItemType> {
    types
        .iter()
        .enumerate()
        .filter(|(i, t)| {
            !types.iter().enumerate().any(|(j, u)| {
                u.weight == t.weight && (u.profit > t.profit || (u.profit == t.profit && j < *i))
            })
        })
        .map(|(_, t)| *t)
        .collect()
}

/// Sorts by nonincreasing exact density (`p_a * w_b >= p_b * w_a` for every
/// earlier `a`, later `b`), breaking ties by smaller weight, then smaller
/// profit. Deterministic for any input.
pub fn sort_by_density(types: &[ItemType]) -> Vec<ItemType> {
    let mut sorted = types.to_vec();
    sorted.sort_by(|a, b| {
        let lhs = u64::from(a.profit) * u64::from(b.weight);
        let rhs = u64::from(b.profit) * u64::from(a.weight);
        rhs.cmp(&lhs)
            .then_with(|| a.weight.cmp(&b.weight))
            .then_with(|| a.profit.cmp(&b.profit))
    });
    sorted
}

/// A dominance-reduced, density-sorted view of an instance.
///
/// `source_index[k]` is the position of normalized type `k` in the original
/// type list, used to scatter solver counts back to the caller's order.
#[derive(Debug, Clone)]
pub struct NormalizedInstance {
    coefficient_bound: u32,
    types: Vec<ItemType>,
    capacity: BigUint,
    source_index: Vec<usize>,
    original_len: usize,
}

impl NormalizedInstance {
    pub fn new(inst: &Instance) -> Self {
        let survivors = dominance_reduce(inst.types());
        let sorted = sort_by_density(&survivors);
        // Map each normalized type back to its first position in the input.
        let source_index = sorted
            .iter()
            .map(|t| {
                inst.types()
                    .iter()
                    .position(|u| u == t)
                    .expect("normalized type originates from the instance")
            })
            .collect();
        Self {
            coefficient_bound: inst.coefficient_bound(),
            types: sorted,
            capacity: inst.capacity().clone(),
            source_index,
            original_len: inst.types().len(),
        }
    }

    pub fn coefficient_bound(&self) -> u32 {
        self.coefficient_bound
    }

    pub fn types(&self) -> &[ItemType] {
        &self.types
    }

    pub fn capacity(&self) -> &BigUint {
        &self.capacity
    }

    pub fn source_index(&self) -> &[usize] {
        &self.source_index
    }

    pub fn original_len(&self) -> usize {
        self.original_len
    }
}

/// The break partition of a normalized instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// Index of the break type in the normalized order; always 0 after the
    /// density sort.
    pub break_index: usize,
    /// Normalized indices with density equal to the break type.
    pub n1_indices: Vec<usize>,
    /// Normalized indices with strictly lower density.
    pub n2_indices: Vec<usize>,
    /// `C mod w_b`, the capacity left after the pure greedy fill.
    pub residual: u32,
    /// gcd of the `N1` weights.
    pub gcd_w1: u32,
    /// Smallest multiple of `gcd_w1` in `(R^2, R^2 + R]`.
    pub t_prime: u64,
}

/// Computes the break partition, residual capacity, gcd of the `N1`
/// weights, and `t'`. The break type is the first (densest) type, so `N1`
/// is never empty.
pub fn partition(inst: &NormalizedInstance) -> Partition {
    let types = inst.types();
    let break_type = types[0];
    let (n1_indices, n2_indices): (Vec<usize>, Vec<usize>) =
        (0..types.len()).partition(|&j| types[j].same_density(&break_type));

    let w_b = BigUint::from(break_type.weight);
    let residual = (inst.capacity() % &w_b)
        .to_u32()
        .expect("residual is below the break weight");

    let gcd_w1 = n1_indices
        .iter()
        .map(|&j| u64::from(types[j].weight))
        .fold(0u64, gcd) as u32;

    Partition {
        break_index: 0,
        n1_indices,
        n2_indices,
        residual,
        gcd_w1,
        t_prime: find_t_prime(gcd_w1, inst.coefficient_bound()),
    }
}

/// Euclid's algorithm.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd of a nonempty list, folding Euclid pairwise.
pub fn gcd_list(values: &[u64]) -> u64 {
    assert!(!values.is_empty(), "gcd of an empty list");
    values.iter().copied().fold(0, gcd)
}

/// The smallest multiple of `g` strictly greater than `R^2` and at most
/// `R^2 + R`. Existence holds because `g <= R` and the interval has length
/// `R`.
pub fn find_t_prime(g: u32, r: u32) -> u64 {
    debug_assert!(g >= 1 && g <= r);
    let g = u64::from(g);
    let r_sq = u64::from(r) * u64::from(r);
    let t = (r_sq / g + 1) * g;
    assert!(t > r_sq && t <= r_sq + u64::from(r));
    t
}

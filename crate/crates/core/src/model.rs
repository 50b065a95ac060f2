//! Domain types and exact-arithmetic conventions shared by every module.
//!
//! The capacity is an arbitrary-precision integer throughout: every
//! operation touching it (mod, floor division, multiplication, comparison)
//! is exact. Profit-density comparisons are done by integer
//! cross-multiplication, never floating point.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported coefficient bound. Keeps every DP profit entry within
/// a machine word: a window never exceeds R^3 + 1 cells, so profits are at
/// most R * R^3 = R^4 <= 2^60.
pub const MAX_COEFFICIENT_BOUND: u32 = 1 << 15;

/// One item type: profit and weight, both in `[1, R]` for the owning
/// instance's coefficient bound `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ItemType {
    pub profit: u32,
    pub weight: u32,
}

impl ItemType {
    pub fn new(profit: u32, weight: u32) -> Self {
        Self { profit, weight }
    }

    /// Exact density comparison: `self` denser than `other` iff
    /// `self.profit / self.weight > other.profit / other.weight`,
    /// decided as `p_a * w_b > p_b * w_a`.
    pub fn denser_than(&self, other: &ItemType) -> bool {
        u64::from(self.profit) * u64::from(other.weight)
            > u64::from(other.profit) * u64::from(self.weight)
    }

    /// Exact density equality by cross-multiplication.
    pub fn same_density(&self, other: &ItemType) -> bool {
        u64::from(self.profit) * u64::from(other.weight)
            == u64::from(other.profit) * u64::from(self.weight)
    }
}

impl fmt::Display for ItemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, w={})", self.profit, self.weight)
    }
}

/// A validated problem instance.
///
/// Construction via [`Instance::new`] is the only way to obtain one, so any
/// `Instance` in hand satisfies the coefficient bounds. The type list is
/// kept exactly as given (duplicates and unsorted orders are allowed);
/// normalization happens in the preprocessing stage and solutions are always
/// reported against the original type order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    coefficient_bound: u32,
    types: Vec<ItemType>,
    capacity: BigUint,
}

impl Instance {
    /// Validates the coefficient bounds and builds the instance.
    pub fn new(coefficient_bound: u32, types: Vec<ItemType>, capacity: BigUint) -> Result<Self> {
        if coefficient_bound == 0 {
            return Err(Error::ZeroCoefficientBound);
        }
        if coefficient_bound > MAX_COEFFICIENT_BOUND {
            return Err(Error::CoefficientBoundTooLarge(coefficient_bound));
        }
        if types.is_empty() {
            return Err(Error::EmptyTypes);
        }
        for (index, t) in types.iter().enumerate() {
            let in_range = |v: u32| (1..=coefficient_bound).contains(&v);
            if !in_range(t.profit) || !in_range(t.weight) {
                return Err(Error::CoefficientOutOfRange {
                    index,
                    profit: t.profit,
                    weight: t.weight,
                    bound: coefficient_bound,
                });
            }
        }
        Ok(Self {
            coefficient_bound,
            types,
            capacity,
        })
    }

    /// As [`Instance::new`] but with the capacity given as a decimal string.
    pub fn with_capacity_str(
        coefficient_bound: u32,
        types: Vec<ItemType>,
        capacity: &str,
    ) -> Result<Self> {
        Self::new(coefficient_bound, types, parse_capacity(capacity)?)
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

    /// Parses the on-disk instance document.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text)?;
        let types = file
            .types
            .iter()
            .map(|t| ItemType::new(t.profit, t.weight))
            .collect();
        Self::with_capacity_str(file.r, types, &file.capacity)
    }

    /// Serializes to the on-disk instance document. Round-trips bit-exactly:
    /// `from_json(to_json(i)) == i` and re-serializing reproduces the bytes.
    pub fn to_json(&self) -> String {
        let file = InstanceFile {
            r: self.coefficient_bound,
            capacity: self.capacity.to_string(),
            types: self
                .types
                .iter()
                .map(|t| TypeEntry {
                    profit: t.profit,
                    weight: t.weight,
                })
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&file).expect("instance serialization");
        out.push('\n');
        out
    }
}

/// On-disk instance layout: `R` (integer), `capacity` (decimal string),
/// `types` (list of profit/weight pairs).
#[derive(Debug, Serialize, Deserialize)]
struct InstanceFile {
    #[serde(rename = "R")]
    r: u32,
    capacity: String,
    types: Vec<TypeEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TypeEntry {
    profit: u32,
    weight: u32,
}

/// Parses a capacity from its canonical decimal representation: nonempty,
/// digits only, no sign, no leading zeros (except `"0"` itself). Parsing
/// then reprinting an accepted string is the identity.
pub fn parse_capacity(text: &str) -> Result<BigUint> {
    let malformed = || Error::MalformedCapacity(text.to_string());
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    if text.len() > 1 && text.starts_with('0') {
        return Err(malformed());
    }
    BigUint::from_str(text).map_err(|_| malformed())
}

/// Per-type selection counts together with their recomputed weight and
/// objective, all in exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub counts: Vec<BigUint>,
    pub total_weight: BigUint,
    pub objective: BigUint,
}

impl Solution {
    pub fn zero(n_types: usize) -> Self {
        Self {
            counts: vec![BigUint::zero(); n_types],
            total_weight: BigUint::zero(),
            objective: BigUint::zero(),
        }
    }
}

/// Recomputes total weight and objective for `counts` against `inst` and
/// checks feasibility. An `Infeasible` error on solver output signals a
/// solver bug; the solvers always pass their results through here.
pub fn evaluate(inst: &Instance, counts: &[BigUint]) -> Result<Solution> {
    if counts.len() != inst.types().len() {
        return Err(Error::CountsLength {
            got: counts.len(),
            expected: inst.types().len(),
        });
    }
    let mut total_weight = BigUint::zero();
    let mut objective = BigUint::zero();
    for (count, t) in counts.iter().zip(inst.types()) {
        total_weight += count * t.weight;
        objective += count * t.profit;
    }
    if total_weight > *inst.capacity() {
        return Err(Error::Infeasible {
            weight: total_weight.to_string(),
            capacity: inst.capacity().to_string(),
        });
    }
    Ok(Solution {
        counts: counts.to_vec(),
        total_weight,
        objective,
    })
}

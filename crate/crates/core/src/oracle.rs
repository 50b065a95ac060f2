//! Independent reference solvers for tests and the compare command.
//!
//! Two engines so that a disagreement localizes the bug: exhaustive
//! enumeration of count vectors (trusted absolutely at tiny scale) and a
//! full-capacity DP table. Neither makes any attempt at capacity
//! independence.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::dp::{build_table, traceback};
use crate::error::{Error, Result};
use crate::model::{evaluate, Instance, Solution};

/// Guard on the number of count vectors the enumeration oracle will visit.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Guard on the capacity for the full-table DP oracle.
pub const DP_CAPACITY_LIMIT: u64 = 100_000_000;

/// Number of count vectors enumeration would visit:
/// `prod_j (floor(C / w_j) + 1)`, or `None` past the guard.
pub fn enumeration_size(inst: &Instance) -> Option<u64> {
    let c = inst.capacity().to_u64()?;
    let mut size: u64 = 1;
    for t in inst.types() {
        let options = c / u64::from(t.weight) + 1;
        size = size.checked_mul(options)?;
        if size > ENUMERATION_LIMIT {
            return None;
        }
    }
    Some(size)
}

/// Globally optimal solution by exhaustive enumeration of count vectors.
pub fn oracle_enumerate(inst: &Instance) -> Result<Solution> {
    let Some(_) = enumeration_size(inst) else {
        return Err(Error::InstanceTooLarge {
            size: "> limit".into(),
            limit: ENUMERATION_LIMIT,
        });
    };
    let c = inst
        .capacity()
        .to_u64()
        .expect("guard admits only machine capacities");
    let weights: Vec<u64> = inst.types().iter().map(|t| u64::from(t.weight)).collect();
    let profits: Vec<u64> = inst.types().iter().map(|t| u64::from(t.profit)).collect();

    let mut best_profit = 0u64;
    let mut best_counts = vec![0u64; weights.len()];
    let mut counts = vec![0u64; weights.len()];

    fn recurse(
        weights: &[u64],
        profits: &[u64],
        idx: usize,
        left: u64,
        profit: u64,
        counts: &mut [u64],
        best_profit: &mut u64,
        best_counts: &mut Vec<u64>,
    ) {
        if idx == weights.len() {
            if profit > *best_profit {
                *best_profit = profit;
                best_counts.copy_from_slice(counts);
            }
            return;
        }
        let mut k = 0u64;
        while k * weights[idx] <= left {
            counts[idx] = k;
            recurse(
                weights,
                profits,
                idx + 1,
                left - k * weights[idx],
                profit + k * profits[idx],
                counts,
                best_profit,
                best_counts,
            );
            k += 1;
        }
        counts[idx] = 0;
    }

    recurse(
        &weights,
        &profits,
        0,
        c,
        0,
        &mut counts,
        &mut best_profit,
        &mut best_counts,
    );

    let counts: Vec<BigUint> = best_counts.into_iter().map(BigUint::from).collect();
    evaluate(inst, &counts)
}

/// Optimal solution via a full `C + 1`-slot DP table plus traceback.
pub fn oracle_dp(inst: &Instance) -> Result<Solution> {
    let capacity = inst.capacity().to_u64().filter(|&c| c <= DP_CAPACITY_LIMIT);
    let Some(c) = capacity else {
        return Err(Error::CapacityTooLarge {
            capacity: inst.capacity().to_string(),
            limit: DP_CAPACITY_LIMIT,
        });
    };
    let table = build_table(inst.types(), c as usize);
    let counts: Vec<BigUint> = traceback(&table, c as usize)
        .into_iter()
        .map(BigUint::from)
        .collect();
    let solution = evaluate(inst, &counts)?;
    debug_assert_eq!(solution.objective, BigUint::from(table.profit(c as usize)));
    Ok(solution)
}

/// Objective of [`oracle_dp`] without materializing counts.
pub fn oracle_dp_objective(inst: &Instance) -> Result<BigUint> {
    let capacity = inst.capacity().to_u64().filter(|&c| c <= DP_CAPACITY_LIMIT);
    let Some(c) = capacity else {
        return Err(Error::CapacityTooLarge {
            capacity: inst.capacity().to_string(),
            limit: DP_CAPACITY_LIMIT,
        });
    };
    let table = build_table(inst.types(), c as usize);
    Ok(BigUint::from(table.profit(c as usize)))
}
